#include "switchsim/estimators/registry.hpp"

#include <algorithm>
#include <stdexcept>

#include "switchsim/estimators/baselines.hpp"
#include "switchsim/estimators/mlstd.hpp"
#include "switchsim/estimators/ols.hpp"

namespace switchsim {

EstimatorFn estimator_by_id(const std::string& id) {
  if (id == "ols")
    return [](const Panel& p, const DesignSpec&, const EstimatorContext&) {
      return ate_ols(fit_ols(p));
    };
  if (id == "lstd")
    return [](const Panel& p, const DesignSpec&, const EstimatorContext& ctx) {
      return estimate_lstd(p, ctx.basis);
    };
  if (id == "mlstd")
    return [](const Panel& p, const DesignSpec&, const EstimatorContext&) {
      return estimate_lstd_modified(p);
    };
  if (id == "drl")
    return [](const Panel& p, const DesignSpec& design, const EstimatorContext& ctx) {
      return estimate_drl(p, design, ctx.drl);
    };
  if (id == "msis")
    return [](const Panel& p, const DesignSpec& design, const EstimatorContext&) {
      return estimate_multistep_is(p, design);
    };
  if (id == "burnin")
    return [](const Panel& p, const DesignSpec& design, const EstimatorContext& ctx) {
      const int b = std::min(ctx.burnin_b, design.m - 1);
      return estimate_burnin_dim(p, design, b).value;
    };
  if (id == "sis")
    return [](const Panel& p, const DesignSpec&, const EstimatorContext&) {
      return estimate_simple_is(p);
    };
  throw std::invalid_argument("unknown estimator id: " + id);
}

const std::vector<std::string>& known_estimators() {
  static const std::vector<std::string> ids = {"ols",  "lstd",   "mlstd", "drl",
                                               "msis", "burnin", "sis"};
  return ids;
}

}  // namespace switchsim
