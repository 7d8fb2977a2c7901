// Least-squares temporal difference ATE estimation over a linear basis.
#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "switchsim/core/panel.hpp"

namespace switchsim {

// Polynomial state features: (1, s_1..s_d, s_1^2..s_d^2, ...) up to `degree`.
// degree 1 is the intercept + raw coordinates basis.
struct Basis {
  int degree = 1;

  int dim(int d) const { return 1 + degree * d; }
  Eigen::VectorXd eval(const Eigen::VectorXd& s) const;
};

// Backward-solved estimating-equation coefficients; theta[t][a] is the
// length-L coefficient vector of V-hat_t^a, with theta at T+1 pinned to zero.
struct LstdCoeffs {
  int T = 0;
  int L = 0;
  std::vector<std::array<Eigen::VectorXd, 2>> theta;  // T entries

  double value(const Basis& basis, int t, int a, const Eigen::VectorXd& s) const {
    return basis.eval(s).dot(theta[t][a]);
  }
};

LstdCoeffs lstd_coeffs(const Panel& panel, const Basis& basis);

// (1/(nT)) sum_i [ V-hat_1^1(S_{i,1}) - V-hat_1^0(S_{i,1}) ].
double estimate_lstd(const Panel& panel, const Basis& basis);

// Largest plugged-back estimating-equation residual across (t, a); exact
// solves keep this at numerical zero.
double lstd_normal_equation_residual(const Panel& panel, const Basis& basis,
                                     const LstdCoeffs& coeffs);

}  // namespace switchsim
