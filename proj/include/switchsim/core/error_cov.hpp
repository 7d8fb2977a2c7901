// Reward-error covariance families sigma_e(t1, t2).
//
// Autoregressive : sigma^2 * rho^|t1-t2|
// MovingAverage  : e_t = K^{-1/2} sum_{k=1..K} eps_{t+k}, Var(eps) = sigma^2,
//                  so sigma_e(t1,t2) = sigma^2 * [K - |t1-t2|]_+ / K
// Exchangeable   : sigma^2 on the diagonal, sigma^2 * rho off it
// Uncorrelated   : sigma^2 * I
#pragma once

#include <string>

#include <Eigen/Dense>

namespace switchsim {

enum class CovFamily { Autoregressive, MovingAverage, Exchangeable, Uncorrelated };

struct ErrorCovSpec {
  CovFamily family = CovFamily::Uncorrelated;
  double rho = 0.0;     // AR / exchangeable correlation, in (-1, 1)
  double sigma2 = 1.0;  // marginal variance (MA: innovation variance)
  int K = 1;            // MA window length

  static ErrorCovSpec ar(double rho, double sigma2);
  static ErrorCovSpec ma(int K, double sigma2);
  static ErrorCovSpec exchangeable(double rho, double sigma2);
  static ErrorCovSpec uncorrelated(double sigma2);

  std::string family_name() const;
};

// sigma_e(t1, t2) for 1-based intervals; symmetric, sigma_e(t,t) = sigma^2.
double covariance(const ErrorCovSpec& spec, int t1, int t2);

// T x T covariance matrix. Rejects parameterizations that are not positive
// semi-definite (e.g. exchangeable rho below -1/(T-1)).
Eigen::MatrixXd cov_matrix(const ErrorCovSpec& spec, int T);

}  // namespace switchsim
