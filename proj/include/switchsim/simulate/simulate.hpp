// Panel generation from the linear / nonlinear DGPs plus truth oracles.
#pragma once

#include <variant>

#include "switchsim/core/dgp.hpp"
#include "switchsim/core/panel.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

// Draws T-vectors with population covariance cov_matrix(spec, T).
// AR: stationary recursion; MA: K^{-1/2} sliding sum of T+K innovations;
// exchangeable with rho >= 0: shared + idiosyncratic split; anything else
// falls back to a symmetric eigen factorization of the covariance matrix.
class ErrorSampler {
 public:
  ErrorSampler(const ErrorCovSpec& spec, int T);
  Eigen::VectorXd sample(Rng& rng) const;
  int T() const { return T_; }

 private:
  ErrorCovSpec spec_;
  int T_;
  bool use_factor_ = false;
  Eigen::MatrixXd factor_;  // cov = factor * factor'
};

Eigen::VectorXd sample_reward_errors(const ErrorCovSpec& spec, int T, Rng& rng);

// Per day: S_1 ~ N(init_mean, init_cov); e drawn from the reward error law;
// then R_t and S_{t+1} follow the linear recursions. The S_{T+1} column uses
// the T-th transition entry. Draw order per day: S_1, e vector, E_1..E_T.
Panel simulate_linear(const LinearDgpParams& params, const Eigen::ArrayXXi& actions, Rng& rng);

Panel simulate_nonlinear(const NonlinearDgpParams& params, const Eigen::ArrayXXi& actions,
                         Rng& rng);

// Closed-form ATE of the linear DGP.
double true_ate_linear(const LinearDgpParams& params);

struct McAte {
  double value = 0.0;
  double se = 0.0;
};

using AnyDgp = std::variant<LinearDgpParams, NonlinearDgpParams>;

// Monte Carlo ATE: simulate `reps` days under the all-1 and all-0 policies
// with shared noise draws and average the per-interval reward difference.
McAte true_ate_mc(const AnyDgp& dgp, int reps, Rng& rng);

}  // namespace switchsim
