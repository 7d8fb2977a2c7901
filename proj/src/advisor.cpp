#include "switchsim/theory/advisor.hpp"

#include <stdexcept>

namespace switchsim {

Recommendation recommend_design(const WorkflowInput& input) {
  if (!input.markov_ok)
    return {DesignAdvice::Rediscretize,
            "The Markov assumption failed at this interval length; lengthen the "
            "time intervals and re-discretize before choosing a design."};

  CarryoverSize carry;
  if (input.carryover.has_value())
    carry = *input.carryover;
  else if (input.delta_estimate.has_value())
    carry = (*input.delta_estimate > input.strong_carryover_cutoff) ? CarryoverSize::Strong
                                                                    : CarryoverSize::Weak;
  else
    throw std::invalid_argument("recommend_design: carryover size (enum or delta estimate) required");

  if (carry == CarryoverSize::Strong)
    return {DesignAdvice::AlternatingDay,
            "Carryover is strong: switchback estimators face a large distributional "
            "shift, so alternate designs at the day level."};

  ResidualCorr corr;
  if (input.residual_corr.has_value())
    corr = *input.residual_corr;
  else if (input.mean_offdiag_corr.has_value()) {
    const double c = *input.mean_offdiag_corr;
    corr = c > input.positive_corr_cutoff    ? ResidualCorr::MostlyPositive
           : c < -input.positive_corr_cutoff ? ResidualCorr::MostlyNegative
                                             : ResidualCorr::Uncorrelated;
  } else {
    throw std::invalid_argument("recommend_design: residual correlation summary required");
  }

  if (corr == ResidualCorr::MostlyPositive)
    return {DesignAdvice::SwitchbackM1,
            "Carryover is weak and reward residuals are mostly positively correlated: "
            "switch every interval (m=1) so the alternating signs cancel the "
            "correlated errors."};
  return {DesignAdvice::AlternatingDay,
          "Carryover is weak but residuals are uncorrelated or mostly negative: the "
          "alternating-day design is preferred."};
}

}  // namespace switchsim
