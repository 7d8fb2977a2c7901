// Model-based value functions of the linear MDP.
//
// V_t^a(s) = sum_{j>=t} [ alpha_j + gamma_j a + beta_j' E^a(S_j | S_t = s) ]
// is affine in s; the backward recursion
//   w_t = beta_t + Phi_t' w_{t+1},
//   c_{t,a} = alpha_t + gamma_t a + w_{t+1}'(phi_t + Gamma_t a) + c_{t+1,a}
// collects the coefficients so evaluation is O(d).
#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "switchsim/core/dgp.hpp"
#include "switchsim/estimators/ols.hpp"

namespace switchsim {

class ModelValue {
 public:
  static ModelValue from_fit(const OlsFit& fit);
  static ModelValue from_params(const LinearDgpParams& params);

  // 0-based t in [0, T); V at T reads as 0.
  double value(int t, int a, const Eigen::VectorXd& s) const {
    if (t >= T_) return 0.0;
    return c_[t][a] + w_[t].dot(s);
  }

  int T() const { return T_; }

 private:
  ModelValue() = default;
  static ModelValue build(int T, const Eigen::VectorXd& alpha, const Eigen::MatrixXd& beta,
                          const Eigen::VectorXd& gamma, const std::vector<Eigen::VectorXd>& phi,
                          const std::vector<Eigen::MatrixXd>& Phi,
                          const std::vector<Eigen::VectorXd>& Gamma);

  int T_ = 0;
  std::vector<Eigen::VectorXd> w_;          // T, slope (shared by both arms)
  std::vector<std::array<double, 2>> c_;    // T, intercept per arm
};

// The spec-level operation: evaluate the fitted closed-form value function.
double value_model_based(const OlsFit& fit, int t, int a, const Eigen::VectorXd& s);

}  // namespace switchsim
