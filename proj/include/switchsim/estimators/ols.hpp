// Per-interval OLS fits of the linear MDP model and the plug-in ATE.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "switchsim/core/panel.hpp"

namespace switchsim {

// Raised when a regression design matrix is (numerically) rank deficient;
// the message names the offending interval (and arm where applicable).
struct SingularFitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OlsFit {
  int T = 0;
  int d = 0;
  Eigen::VectorXd alpha;               // T
  Eigen::MatrixXd beta;                // T x d
  Eigen::VectorXd gamma;               // T
  std::vector<Eigen::VectorXd> phi;    // T-1
  std::vector<Eigen::MatrixXd> Phi;    // T-1
  std::vector<Eigen::VectorXd> Gamma;  // T-1
  // Sampling-variance diagnostics: Var-hat of each Gamma_t entry and the
  // worst condition number seen across intervals.
  Eigen::MatrixXd Gamma_var;           // (T-1) x d
  double max_condition = 0.0;
};

// Reward R_{i,t} ~ (1, S_t, A_t) per t; each next-state coordinate on the
// same predictors for t = 1..T-1. Condition numbers above 1e12 are treated
// as singular. Requires n >= d+3.
OlsFit fit_ols(const Panel& panel);

// Plug the fitted coefficients into the closed-form ATE expression.
double ate_ols(const OlsFit& fit);

// Least squares with a rank check; columns of Y are separate responses.
Eigen::MatrixXd lstsq_checked(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                              const std::string& label, double* condition_out = nullptr);

}  // namespace switchsim
