// Linear and nonlinear data-generating processes.
//
// Reward:     R_t = alpha_t + S_t' beta_t + gamma_t A_t + e_t
// Transition: S_{t+1} = phi_t + Phi_t S_t + Gamma_t A_t + E_t
//
// Transition coefficient sequences carry T entries; the T-th entry exists
// only to synthesize the S_{T+1} column of a panel and never enters the ATE.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "switchsim/core/error_cov.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

struct LinearDgpParams {
  int T = 0;
  int d = 0;
  Eigen::VectorXd alpha;               // T
  Eigen::MatrixXd beta;                // T x d
  Eigen::VectorXd gamma;               // T
  std::vector<Eigen::VectorXd> phi;    // T entries of length d
  std::vector<Eigen::MatrixXd> Phi;    // T entries of d x d
  std::vector<Eigen::VectorXd> Gamma;  // T entries of length d
  Eigen::VectorXd init_mean;           // d
  Eigen::MatrixXd init_cov;            // d x d
  Eigen::MatrixXd state_noise_cov;     // d x d
  ErrorCovSpec reward_cov;
  double carryover_shift = 0.0;        // mean used when sampling Gamma entries

  void validate() const;
};

// The nonlinear variant keeps linear transitions and swaps the reward for
//   alpha_t + 2 beta_t'[sin(s a) + cos(s)]^2 + 3 (beta_t' s) gamma_t a
//         + [a gamma_t + cos(a gamma_t)]^2
// with sin/cos/square applied elementwise.
struct NonlinearDgpParams {
  LinearDgpParams coeffs;
};

double nonlinear_reward(double alpha_t, const Eigen::VectorXd& beta_t, double gamma_t,
                        const Eigen::VectorXd& s, int a);

// Coefficient laws: gamma ~ U[0.5,0.8]; Gamma entries ~ N(delta_shift, 0.3^2);
// Phi entries ~ U[-0.3,0.3]; alpha, phi entries ~ +-U[0.5,1]; beta entries
// ~ +-U[0.1,0.3]; S_1 ~ N(0, I); state noise N(0, 1.5 I).
LinearDgpParams draw_linear_dgp(int T, int d, const ErrorCovSpec& reward_cov,
                                double delta_shift, Rng& rng);

// Same laws except Phi entries ~ U[-0.6,0.6].
NonlinearDgpParams draw_nonlinear_dgp(int T, int d, const ErrorCovSpec& reward_cov,
                                      double delta_shift, Rng& rng);

// (1/T) sum_t gamma_t + (1/T) sum_{t>=2} beta_t' [sum_{k<t} (Phi_{t-1}...Phi_{k+1}) Gamma_k],
// empty matrix products read as the identity. Shared by the closed-form truth
// and the model-based plug-in estimator.
double ate_from_coeffs(const Eigen::VectorXd& gamma, const Eigen::MatrixXd& beta,
                       const std::vector<Eigen::MatrixXd>& Phi,
                       const std::vector<Eigen::VectorXd>& Gamma);

}  // namespace switchsim
