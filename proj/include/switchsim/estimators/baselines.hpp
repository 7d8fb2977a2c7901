// Non-RL baseline estimators used for comparison.
#pragma once

#include <optional>

#include "switchsim/core/design.hpp"
#include "switchsim/core/panel.hpp"

namespace switchsim {

// (4/(nT)) sum_{i,t} (A_{i,t} - 1/2) R_{i,t}.
double estimate_simple_is(const Panel& panel);

// Multi-step IS under a regular Bernoulli switchback: rewards weighted by
// the exact probability of the observed constant action run over the last
// m+1 intervals (1/2 per block head touched by the run window). m defaults
// to the design's block length; m = 0 collapses to the simple IS estimator.
double estimate_multistep_is(const Panel& panel, const DesignSpec& design,
                             std::optional<int> m_override = std::nullopt);

struct BurninResult {
  double value = 0.0;
  int skipped_days = 0;  // days lacking at least one block of each arm
};

// Difference of within-day block means after discarding the first b
// observations of every block. Requires 0 <= b < m; days without both arms
// are skipped, and having no usable day at all is an error.
BurninResult estimate_burnin_dim(const Panel& panel, const DesignSpec& design, int b);

}  // namespace switchsim
