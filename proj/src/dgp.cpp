#include "switchsim/core/dgp.hpp"

#include <cmath>
#include <stdexcept>

namespace switchsim {

void LinearDgpParams::validate() const {
  if (T < 1 || d < 1) throw std::invalid_argument("dgp: T and d must be >= 1");
  if (alpha.size() != T || gamma.size() != T || beta.rows() != T || beta.cols() != d)
    throw std::invalid_argument("dgp: reward coefficient sequences must have length T");
  if (static_cast<int>(phi.size()) != T || static_cast<int>(Phi.size()) != T ||
      static_cast<int>(Gamma.size()) != T)
    throw std::invalid_argument("dgp: transition coefficient sequences must have length T");
  for (int t = 0; t < T; ++t) {
    if (phi[t].size() != d || Gamma[t].size() != d || Phi[t].rows() != d || Phi[t].cols() != d)
      throw std::invalid_argument("dgp: transition coefficient dimensions must match d");
    // No unit root: spectral norm of each Phi_t must stay below 1.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Phi[t]);
    if (svd.singularValues()(0) >= 1.0)
      throw std::invalid_argument("dgp: spectral norm of Phi_" + std::to_string(t + 1) +
                                  " is >= 1");
  }
  if (init_mean.size() != d || init_cov.rows() != d || init_cov.cols() != d ||
      state_noise_cov.rows() != d || state_noise_cov.cols() != d)
    throw std::invalid_argument("dgp: init/state noise dimensions must match d");
}

double nonlinear_reward(double alpha_t, const Eigen::VectorXd& beta_t, double gamma_t,
                        const Eigen::VectorXd& s, int a) {
  double quad = 0.0;
  for (int j = 0; j < s.size(); ++j) {
    const double base = std::sin(s[j] * a) + std::cos(s[j]);
    quad += beta_t[j] * base * base;
  }
  const double interaction = 3.0 * beta_t.dot(s) * gamma_t * a;
  const double ag = a * gamma_t;
  const double direct = (ag + std::cos(ag)) * (ag + std::cos(ag));
  return alpha_t + 2.0 * quad + interaction + direct;
}

namespace {
// +-U[lo, hi] with a fair sign.
double signed_uniform(Rng& rng, double lo, double hi) {
  const double sign = rng.bernoulli_half() ? 1.0 : -1.0;
  return sign * rng.uniform(lo, hi);
}

LinearDgpParams draw_common(int T, int d, const ErrorCovSpec& reward_cov, double delta_shift,
                            double phi_entry_band, Rng& rng) {
  LinearDgpParams p;
  p.T = T;
  p.d = d;
  p.alpha.resize(T);
  p.beta.resize(T, d);
  p.gamma.resize(T);
  p.phi.resize(T);
  p.Phi.resize(T);
  p.Gamma.resize(T);
  for (int t = 0; t < T; ++t) {
    p.alpha[t] = signed_uniform(rng, 0.5, 1.0);
    for (int j = 0; j < d; ++j) p.beta(t, j) = signed_uniform(rng, 0.1, 0.3);
    p.gamma[t] = rng.uniform(0.5, 0.8);
  }
  for (int t = 0; t < T; ++t) {
    p.phi[t].resize(d);
    p.Phi[t].resize(d, d);
    p.Gamma[t].resize(d);
    for (int j = 0; j < d; ++j) p.phi[t][j] = signed_uniform(rng, 0.5, 1.0);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) p.Phi[t](r, c) = rng.uniform(-phi_entry_band, phi_entry_band);
    for (int j = 0; j < d; ++j) p.Gamma[t][j] = delta_shift + 0.3 * rng.normal();
  }
  p.init_mean = Eigen::VectorXd::Zero(d);
  p.init_cov = Eigen::MatrixXd::Identity(d, d);
  p.state_noise_cov = 1.5 * Eigen::MatrixXd::Identity(d, d);
  p.reward_cov = reward_cov;
  p.carryover_shift = delta_shift;
  return p;
}
}  // namespace

LinearDgpParams draw_linear_dgp(int T, int d, const ErrorCovSpec& reward_cov,
                                double delta_shift, Rng& rng) {
  LinearDgpParams p = draw_common(T, d, reward_cov, delta_shift, 0.3, rng);
  p.validate();
  return p;
}

NonlinearDgpParams draw_nonlinear_dgp(int T, int d, const ErrorCovSpec& reward_cov,
                                      double delta_shift, Rng& rng) {
  NonlinearDgpParams p;
  p.coeffs = draw_common(T, d, reward_cov, delta_shift, 0.6, rng);
  return p;
}

double ate_from_coeffs(const Eigen::VectorXd& gamma, const Eigen::MatrixXd& beta,
                       const std::vector<Eigen::MatrixXd>& Phi,
                       const std::vector<Eigen::VectorXd>& Gamma) {
  const int T = static_cast<int>(gamma.size());
  const int d = static_cast<int>(beta.cols());
  double total = gamma.sum();
  // M_t = sum_{k<t} (Phi_{t-1}...Phi_{k+1}) Gamma_k, via M_{t+1} = Phi_t M_t + Gamma_t.
  Eigen::VectorXd M = Eigen::VectorXd::Zero(d);
  for (int t = 1; t < T; ++t) {
    if (t == 1)
      M = Gamma[0];
    else
      M = Phi[t - 1] * M + Gamma[t - 1];
    total += beta.row(t).dot(M);
  }
  return total / T;
}

}  // namespace switchsim
