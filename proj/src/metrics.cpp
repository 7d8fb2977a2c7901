#include "switchsim/harness/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace switchsim {

Metrics aggregate_errors(const std::vector<double>& errors) {
  const int B = static_cast<int>(errors.size());
  if (B < 1) throw std::invalid_argument("aggregate_errors: empty estimate vector");
  Metrics m;
  m.count = B;
  double sum = 0.0, sumsq = 0.0;
  for (double e : errors) {
    sum += e;
    sumsq += e * e;
  }
  m.bias = sum / B;
  const double mse = sumsq / B;
  m.rmse = std::sqrt(mse);
  const double var = B > 1 ? (sumsq - sum * sum / B) / (B - 1) : 0.0;
  m.sd = std::sqrt(std::max(var, 0.0));
  m.log_mse = mse > 0.0 ? std::log(mse) : std::numeric_limits<double>::quiet_NaN();

  // MC standard errors: se(bias) = sd/sqrt(B); se(mse) from the spread of
  // squared errors, then the delta method for rmse and log(mse).
  m.se_bias = m.sd / std::sqrt(static_cast<double>(B));
  double var_sq = 0.0;
  for (double e : errors) var_sq += (e * e - mse) * (e * e - mse);
  var_sq = B > 1 ? var_sq / (B - 1) : 0.0;
  const double se_mse = std::sqrt(var_sq / B);
  m.se_rmse = m.rmse > 0.0 ? se_mse / (2.0 * m.rmse) : 0.0;
  m.se_log_mse = mse > 0.0 ? se_mse / mse : std::numeric_limits<double>::quiet_NaN();
  return m;
}

Metrics aggregate_metrics(const std::vector<double>& estimates, double truth) {
  std::vector<double> errors(estimates.size());
  for (std::size_t i = 0; i < estimates.size(); ++i) errors[i] = estimates[i] - truth;
  return aggregate_errors(errors);
}

}  // namespace switchsim
