// Model-based marginalized IS ratios.
//
// Under the linear transition model the state at interval t is Gaussian once
// Gaussian laws are imposed on S_1 and the state noise; unrolling
//   S_t = sum_{k<t} (Phi_{t-1}..Phi_{k+1}) (phi_k + Gamma_k A_k + E_k)
//       + (Phi_{t-1}..Phi_1) S_1
// gives the marginal mean under any fixed action sequence, while the
// covariance is action-free. The ratio of the constant-policy law to the
// design-conditional law is therefore exp(eta_t' (s - mid_t)) with cached
// eta_t = C_t^{-1} (mu_num - mu_den).
#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "switchsim/core/design.hpp"
#include "switchsim/core/dgp.hpp"
#include "switchsim/core/panel.hpp"
#include "switchsim/estimators/ols.hpp"

namespace switchsim {

struct RatioOptions {
  // Empirical-Bayes shrinkage of the fitted carryover coefficients toward
  // their pooled mean before building the ratio (per state coordinate,
  // weight 1 - noise/total variance). Tames the exponential amplification
  // of coefficient noise in small panels; vanishes as n grows.
  bool eb_shrink_carryover = true;
};

class RatioModel {
 public:
  // Fitted route: transition coefficients from `fit`, S_1 moments and a
  // pooled state-noise covariance from `panel`.
  static RatioModel fit(const OlsFit& fit, const Panel& panel, const DesignSpec& design,
                        const RatioOptions& options = {});

  // Oracle route: exact population quantities of a linear DGP.
  static RatioModel from_params(const LinearDgpParams& params, const DesignSpec& design);

  double log_ratio(int t, int a, const Eigen::VectorXd& s) const;  // 0-based t
  double ratio(int t, int a, const Eigen::VectorXd& s) const;

  bool regularized() const { return regularized_; }
  int T() const { return T_; }

 private:
  RatioModel() = default;
  static RatioModel build(int T, int d, const std::vector<Eigen::VectorXd>& phi,
                          const std::vector<Eigen::MatrixXd>& Phi,
                          const std::vector<Eigen::VectorXd>& Gamma,
                          const Eigen::VectorXd& init_mean, const Eigen::MatrixXd& init_cov,
                          const Eigen::MatrixXd& noise_cov, const DesignSpec& design);

  int T_ = 0;
  // Per (t, a): eta and midpoint of the two Gaussian means.
  std::vector<std::array<Eigen::VectorXd, 2>> eta_;
  std::vector<std::array<Eigen::VectorXd, 2>> mid_;
  bool regularized_ = false;
};

// Spec-level convenience: per-interval OLS transition fit plus Gaussian
// moments estimated from the panel, as one call.
RatioModel fit_ratio_model(const Panel& panel, const DesignSpec& design,
                           const RatioOptions& options = {});

}  // namespace switchsim
