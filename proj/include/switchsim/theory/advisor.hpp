// Design recommendation workflow: check the Markov assumption, size up the
// carryover effect, then look at the sign of residual correlations.
#pragma once

#include <optional>
#include <string>

namespace switchsim {

enum class CarryoverSize { Weak, Strong };
enum class ResidualCorr { MostlyPositive, Uncorrelated, MostlyNegative };

struct WorkflowInput {
  bool markov_ok = true;
  std::optional<CarryoverSize> carryover;       // either the enum ...
  std::optional<double> delta_estimate;         // ... or a numeric delta
  std::optional<ResidualCorr> residual_corr;    // either the enum ...
  std::optional<double> mean_offdiag_corr;      // ... or a numeric summary

  // Numeric cutoffs (documented defaults, not from the source material):
  // delta > 0.1 counts as strong carryover; mean off-diagonal correlation
  // > 0.05 counts as mostly positive, < -0.05 as mostly negative.
  double strong_carryover_cutoff = 0.1;
  double positive_corr_cutoff = 0.05;
};

enum class DesignAdvice { AlternatingDay, SwitchbackM1, Rediscretize };

struct Recommendation {
  DesignAdvice advice;
  std::string rationale;
};

Recommendation recommend_design(const WorkflowInput& input);

}  // namespace switchsim
