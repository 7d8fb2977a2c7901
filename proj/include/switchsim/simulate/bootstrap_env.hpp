// Wild-bootstrap simulation environment fitted from an A/A source panel.
//
// Per-interval ridge fits (penalty by generalized cross-validation) of the
// reward on (1, S_t) and of each next-state coordinate on (1, S_t) give the
// baseline dynamics; treatment effects are synthetic,
//   gamma_t = delta1 * mean_i R_{i,t} / 100,   Gamma_t = delta2 * mean_i S_{i,t} / 100.
// Whole-day residual vectors are rescaled by a single N(0,1) factor per
// simulated day, which preserves the within-day error covariance.
#pragma once

#include <vector>

#include "switchsim/core/design.hpp"
#include "switchsim/core/panel.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

struct BootstrapEnv {
  int N = 0;  // source day count
  int T = 0;
  int d = 0;
  Eigen::VectorXd alpha;               // T
  Eigen::MatrixXd beta;                // T x d
  Eigen::VectorXd gamma;               // T (synthetic)
  std::vector<Eigen::VectorXd> phi;    // T-1
  std::vector<Eigen::MatrixXd> Phi;    // T-1
  std::vector<Eigen::VectorXd> Gamma;  // T-1 (synthetic)
  Eigen::MatrixXd reward_resid;        // N x T
  Eigen::MatrixXd state_resid;         // (N*(T-1)) x d, row i*(T-1)+t
  Eigen::MatrixXd init_bank;           // N x d source initial states
  Eigen::VectorXd ridge_penalty;       // chosen penalty per interval (reward fit)
  double delta1 = 0.0;
  double delta2 = 0.0;

  double true_ate() const;
};

// source must be an A/A panel (all actions 0) with at least d+2 days.
BootstrapEnv fit_bootstrap_env(const Panel& source, double delta1, double delta2);

Panel simulate_bootstrap(const BootstrapEnv& env, const DesignSpec& design, int n, Rng& rng);

// Deterministic core used by simulate_bootstrap and by tests: day_index[i]
// picks the residual bank row, xi[i] is the wild-bootstrap factor.
Panel simulate_bootstrap_with(const BootstrapEnv& env, const Eigen::ArrayXXi& actions,
                              const std::vector<int>& day_index,
                              const std::vector<double>& xi);

// Ridge fit helper shared with tests: response y on (1, X) with the penalty
// (intercept unpenalized) picked from a 25-point log grid on [1e-8, 1e2] by
// GCV, ties resolved toward the smaller penalty.
struct RidgeGcvFit {
  Eigen::VectorXd coef;  // intercept first
  double penalty = 0.0;
};
RidgeGcvFit ridge_gcv(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

}  // namespace switchsim
