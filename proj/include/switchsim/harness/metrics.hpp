// Replication-level error aggregation.
//
// Conventions: bias = mean(error); rmse^2 = mean(error^2); sd is the sample
// standard deviation of the errors (denominator B-1), so
// rmse^2 = bias^2 + sd^2 (B-1)/B holds exactly; log_mse = ln(rmse^2) and is
// NaN (reported as missing) when the MSE is zero.
#pragma once

#include <vector>

namespace switchsim {

struct Metrics {
  int count = 0;
  double rmse = 0.0;
  double bias = 0.0;
  double sd = 0.0;
  double log_mse = 0.0;
  // Monte Carlo standard errors.
  double se_rmse = 0.0;
  double se_bias = 0.0;
  double se_log_mse = 0.0;
};

Metrics aggregate_errors(const std::vector<double>& errors);

// Spec-level operation for a scalar truth shared by every estimate.
Metrics aggregate_metrics(const std::vector<double>& estimates, double truth);

}  // namespace switchsim
