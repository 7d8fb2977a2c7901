// String-addressable estimator registry used by the experiment harness.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "switchsim/core/design.hpp"
#include "switchsim/core/panel.hpp"
#include "switchsim/estimators/drl.hpp"

namespace switchsim {

struct EstimatorContext {
  Basis basis{1};
  DrlOptions drl{};
  int burnin_b = 1;  // clipped to m-1 for short blocks
};

using EstimatorFn = std::function<double(const Panel&, const DesignSpec&, const EstimatorContext&)>;

// Known ids: ols, lstd, mlstd, drl, msis, burnin, sis. Throws on unknown ids.
EstimatorFn estimator_by_id(const std::string& id);

const std::vector<std::string>& known_estimators();

}  // namespace switchsim
