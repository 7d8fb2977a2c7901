#include "switchsim/core/error_cov.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace switchsim {

namespace {
void check_corr(double rho) {
  if (!(rho > -1.0 && rho < 1.0))
    throw std::invalid_argument("error_cov: correlation must lie in (-1, 1)");
}
void check_var(double s2) {
  if (!(s2 >= 0.0)) throw std::invalid_argument("error_cov: variance must be >= 0");
}
}  // namespace

ErrorCovSpec ErrorCovSpec::ar(double rho, double sigma2) {
  check_corr(rho);
  check_var(sigma2);
  return ErrorCovSpec{CovFamily::Autoregressive, rho, sigma2, 1};
}

ErrorCovSpec ErrorCovSpec::ma(int K, double sigma2) {
  if (K < 1) throw std::invalid_argument("error_cov: MA window K must be >= 1");
  check_var(sigma2);
  return ErrorCovSpec{CovFamily::MovingAverage, 0.0, sigma2, K};
}

ErrorCovSpec ErrorCovSpec::exchangeable(double rho, double sigma2) {
  check_corr(rho);
  check_var(sigma2);
  return ErrorCovSpec{CovFamily::Exchangeable, rho, sigma2, 1};
}

ErrorCovSpec ErrorCovSpec::uncorrelated(double sigma2) {
  check_var(sigma2);
  return ErrorCovSpec{CovFamily::Uncorrelated, 0.0, sigma2, 1};
}

std::string ErrorCovSpec::family_name() const {
  switch (family) {
    case CovFamily::Autoregressive: return "ar";
    case CovFamily::MovingAverage: return "ma";
    case CovFamily::Exchangeable: return "exchangeable";
    default: return "uncorrelated";
  }
}

double covariance(const ErrorCovSpec& spec, int t1, int t2) {
  const int lag = std::abs(t1 - t2);
  switch (spec.family) {
    case CovFamily::Autoregressive:
      return spec.sigma2 * std::pow(spec.rho, lag);
    case CovFamily::MovingAverage:
      return spec.sigma2 * static_cast<double>(std::max(spec.K - lag, 0)) / spec.K;
    case CovFamily::Exchangeable:
      return lag == 0 ? spec.sigma2 : spec.sigma2 * spec.rho;
    default:
      return lag == 0 ? spec.sigma2 : 0.0;
  }
}

Eigen::MatrixXd cov_matrix(const ErrorCovSpec& spec, int T) {
  if (T < 1) throw std::invalid_argument("cov_matrix: T must be >= 1");
  Eigen::MatrixXd M(T, T);
  for (int i = 0; i < T; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = covariance(spec, i + 1, j + 1);
      M(i, j) = v;
      M(j, i) = v;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("cov_matrix: parameterization is not positive semi-definite (" +
                                spec.family_name() + ", T=" + std::to_string(T) + ")");
  return M;
}

}  // namespace switchsim
