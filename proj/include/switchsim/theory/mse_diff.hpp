// Closed-form machinery for the MSE gap between the alternating-day design
// and an m-switchback design.
//
// The leading autocorrelation term is
//   (16/T^2) sum_{k2-k1 odd, 0<=k1<k2<T/m} sum_{l1,l2=1..m}
//            sigma_e(l1 + k1 m, l2 + k2 m),
// returned n-free (callers divide by the day count). It coincides with the
// signed-sum variance gap of the no-carryover plug-in estimator,
//   (4/T^2) [ Var(sum_t e_t) - Var(sum_t s_t e_t) ],
// where s_t alternates sign per m-block.
#pragma once

#include <optional>
#include <string>

#include "switchsim/core/error_cov.hpp"

namespace switchsim {

double autocorr_term(const ErrorCovSpec& spec, int T, int m);

// Large-T asymptote for the autoregressive family:
//   16 sigma^2 rho (1-rho^m) / (m T (1-rho)^2 (1+rho^m)).
double cor1_closed_form(double rho, double sigma2, int T, int m);

// Moving-average closed form, valid for m >= K with m | T:
//   8 sigma^2 (T/m - 1)(K^2 - 1) / (3 T^2).
double cor2_closed_form(int K, double sigma2, int T, int m);

// Exchangeable closed form: 4 sigma^2 rho when T/m is even,
// 4 sigma^2 rho (1 - m^2/T^2) when odd.
double cor3_closed_form(double rho, double sigma2, int T, int m);

// Quadratic-form oracle evaluated from the full covariance matrix.
double toy_signed_sum_diff(const ErrorCovSpec& spec, int T, int m);

struct MseDiffReport {
  int T = 0;
  int m = 0;
  double autocorr = 0.0;                    // exact finite-T triple sum
  std::optional<double> closed_form;        // matching corollary value, if any
  std::optional<std::string> closed_form_kind;  // "cor1-asymptotic", "cor2", "cor3"
  double oracle = 0.0;                      // signed-sum variance difference
};

MseDiffReport mse_diff_report(const ErrorCovSpec& spec, int T, int m);

}  // namespace switchsim
