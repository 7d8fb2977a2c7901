#include "switchsim/theory/mse_diff.hpp"

#include <cmath>
#include <stdexcept>

namespace switchsim {

namespace {
void check_divides(int T, int m, const char* who) {
  if (T < 1 || m < 1 || T % m != 0)
    throw std::invalid_argument(std::string(who) + ": m must divide T (m=" +
                                std::to_string(m) + ", T=" + std::to_string(T) + ")");
}
}  // namespace

double autocorr_term(const ErrorCovSpec& spec, int T, int m) {
  check_divides(T, m, "autocorr_term");
  const int blocks = T / m;
  double total = 0.0;
  for (int k1 = 0; k1 < blocks; ++k1)
    for (int k2 = k1 + 1; k2 < blocks; ++k2) {
      if ((k2 - k1) % 2 == 0) continue;
      for (int l1 = 1; l1 <= m; ++l1)
        for (int l2 = 1; l2 <= m; ++l2)
          total += covariance(spec, l1 + k1 * m, l2 + k2 * m);
    }
  return 16.0 * total / (static_cast<double>(T) * T);
}

double cor1_closed_form(double rho, double sigma2, int T, int m) {
  if (!(rho > -1.0 && rho < 1.0))
    throw std::invalid_argument("cor1_closed_form: rho must lie in (-1, 1)");
  if (m < 1 || T < 1) throw std::invalid_argument("cor1_closed_form: T, m must be >= 1");
  const double rm = std::pow(rho, m);
  return 16.0 * sigma2 * rho * (1.0 - rm) /
         (m * static_cast<double>(T) * (1.0 - rho) * (1.0 - rho) * (1.0 + rm));
}

double cor2_closed_form(int K, double sigma2, int T, int m) {
  check_divides(T, m, "cor2_closed_form");
  if (K < 1) throw std::invalid_argument("cor2_closed_form: K must be >= 1");
  if (m < K)
    throw std::invalid_argument("cor2_closed_form: requires m >= K (out of regime)");
  const double ratio = static_cast<double>(T) / m - 1.0;
  return 8.0 * sigma2 * ratio * (static_cast<double>(K) * K - 1.0) /
         (3.0 * static_cast<double>(T) * T);
}

double cor3_closed_form(double rho, double sigma2, int T, int m) {
  check_divides(T, m, "cor3_closed_form");
  const int blocks = T / m;
  if (blocks % 2 == 0) return 4.0 * sigma2 * rho;
  const double frac = static_cast<double>(m) * m / (static_cast<double>(T) * T);
  return 4.0 * sigma2 * rho * (1.0 - frac);
}

double toy_signed_sum_diff(const ErrorCovSpec& spec, int T, int m) {
  check_divides(T, m, "toy_signed_sum_diff");
  const Eigen::MatrixXd M = cov_matrix(spec, T);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(T);
  Eigen::VectorXd signs(T);
  for (int t = 0; t < T; ++t) signs[t] = ((t / m) % 2 == 0) ? 1.0 : -1.0;
  const double var_ad = ones.dot(M * ones);
  const double var_sb = signs.dot(M * signs);
  return 4.0 * (var_ad - var_sb) / (static_cast<double>(T) * T);
}

MseDiffReport mse_diff_report(const ErrorCovSpec& spec, int T, int m) {
  MseDiffReport rep;
  rep.T = T;
  rep.m = m;
  rep.autocorr = autocorr_term(spec, T, m);
  rep.oracle = toy_signed_sum_diff(spec, T, m);
  switch (spec.family) {
    case CovFamily::Autoregressive:
      rep.closed_form = cor1_closed_form(spec.rho, spec.sigma2, T, m);
      rep.closed_form_kind = "cor1-asymptotic";
      break;
    case CovFamily::MovingAverage:
      if (m >= spec.K) {
        rep.closed_form = cor2_closed_form(spec.K, spec.sigma2, T, m);
        rep.closed_form_kind = "cor2";
      }
      break;
    case CovFamily::Exchangeable:
      rep.closed_form = cor3_closed_form(spec.rho, spec.sigma2, T, m);
      rep.closed_form_kind = "cor3";
      break;
    case CovFamily::Uncorrelated:
      rep.closed_form = 0.0;
      rep.closed_form_kind = "uncorrelated";
      break;
  }
  return rep;
}

}  // namespace switchsim
