#include "switchsim/estimators/ratio_model.hpp"

#include <cmath>
#include <stdexcept>

namespace switchsim {

namespace {
// Pooled empirical-Bayes shrinkage of Gamma-hat toward its per-coordinate
// mean across intervals: lambda_j = max(0, 1 - noise_j / totalvar_j).
std::vector<Eigen::VectorXd> shrink_carryover(const std::vector<Eigen::VectorXd>& Gamma,
                                              const Eigen::MatrixXd& Gamma_var) {
  const int steps = static_cast<int>(Gamma.size());
  if (steps < 2) return Gamma;
  const int d = static_cast<int>(Gamma[0].size());
  std::vector<Eigen::VectorXd> out = Gamma;
  for (int j = 0; j < d; ++j) {
    double mean = 0.0;
    for (int t = 0; t < steps; ++t) mean += Gamma[t][j];
    mean /= steps;
    double var = 0.0;
    for (int t = 0; t < steps; ++t) var += (Gamma[t][j] - mean) * (Gamma[t][j] - mean);
    var /= (steps - 1);
    const double noise = Gamma_var.col(j).mean();
    const double lambda = var > 0.0 ? std::max(0.0, 1.0 - noise / var) : 0.0;
    for (int t = 0; t < steps; ++t) out[t][j] = mean + lambda * (Gamma[t][j] - mean);
  }
  return out;
}
}  // namespace

RatioModel RatioModel::build(int T, int d, const std::vector<Eigen::VectorXd>& phi,
                             const std::vector<Eigen::MatrixXd>& Phi,
                             const std::vector<Eigen::VectorXd>& Gamma,
                             const Eigen::VectorXd& init_mean, const Eigen::MatrixXd& init_cov,
                             const Eigen::MatrixXd& noise_cov, const DesignSpec& design) {
  if (design.kind == DesignKind::RegularBernoulli)
    throw std::invalid_argument(
        "RatioModel: the design-conditional law requires an m-switchback design");
  if (design.T != T) throw std::invalid_argument("RatioModel: design horizon mismatch");
  const int steps = static_cast<int>(Phi.size());
  if (steps < T - 1) throw std::invalid_argument("RatioModel: need T-1 transition stages");

  RatioModel model;
  model.T_ = T;
  model.eta_.resize(T);
  model.mid_.resize(T);

  // Mean recursions for the constant policies; covariance is shared.
  std::array<Eigen::VectorXd, 2> mu_const = {init_mean, init_mean};
  Eigen::MatrixXd C = init_cov;
  // Design-conditional means: mu_design[h] is the mean when the day starts
  // in block-parity h (h = parity of A_1 relative to the conditioning arm).
  // Rebuilt per t below from the constant-policy pieces would be wrong, so
  // track the two seed sequences explicitly.
  std::array<Eigen::VectorXd, 2> mu_seed = {init_mean, init_mean};  // day starts with action 0 / 1

  for (int t = 0; t < T; ++t) {
    if (t > 0) {
      const int k = t - 1;  // transition applied between k and t (0-based)
      for (int a = 0; a < 2; ++a)
        mu_const[a] = phi[k] + Phi[k] * mu_const[a] + Gamma[k] * static_cast<double>(a);
      for (int h = 0; h < 2; ++h) {
        const int parity = (k / design.m) % 2;  // block parity of interval k
        const int action = (h + parity) % 2;    // seed h assigns this action at k
        mu_seed[h] = phi[k] + Phi[k] * mu_seed[h] + Gamma[k] * static_cast<double>(action);
      }
      C = Phi[k] * C * Phi[k].transpose() + noise_cov;
    }

    Eigen::LDLT<Eigen::MatrixXd> ldlt(C);
    const bool ok = ldlt.info() == Eigen::Success && ldlt.isPositive() &&
                    ldlt.vectorD().minCoeff() >
                        1e-12 * std::max(1.0, ldlt.vectorD().maxCoeff());
    if (!ok) {
      const Eigen::MatrixXd C_used = C + 1e-8 * Eigen::MatrixXd::Identity(d, d);
      ldlt.compute(C_used);
      model.regularized_ = true;
      if (ldlt.info() != Eigen::Success)
        throw SingularFitError("RatioModel: state covariance not factorizable at t=" +
                               std::to_string(t + 1));
    }

    const int t_parity = (t / design.m) % 2;
    for (int a = 0; a < 2; ++a) {
      // A_t = a under the design pins the day's seed: the seed (action in
      // block-parity-0) equals a when t sits in an even block, else 1-a.
      const int seed = (a + t_parity) % 2;
      const Eigen::VectorXd diff = mu_const[a] - mu_seed[seed];
      model.eta_[t][a] = ldlt.solve(diff);
      model.mid_[t][a] = 0.5 * (mu_const[a] + mu_seed[seed]);
    }
  }
  return model;
}

RatioModel RatioModel::fit(const OlsFit& fit, const Panel& panel, const DesignSpec& design,
                           const RatioOptions& options) {
  const int n = panel.n, T = panel.T, d = panel.d;
  // Gaussian model for S_1: sample mean and covariance.
  Eigen::VectorXd mu1 = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < n; ++i) mu1 += panel.state(i, 0);
  mu1 /= n;
  Eigen::MatrixXd C1 = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd c = panel.state(i, 0) - mu1;
    C1.noalias() += c * c.transpose();
  }
  C1 /= std::max(n - 1, 1);

  // Pooled state-noise covariance from the fitted transition residuals.
  Eigen::MatrixXd CE = Eigen::MatrixXd::Zero(d, d);
  long count = 0;
  for (int t = 0; t + 1 < T; ++t)
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd pred = fit.phi[t] + fit.Phi[t] * panel.state(i, t) +
                                   fit.Gamma[t] * static_cast<double>(panel.actions(i, t));
      const Eigen::VectorXd res = panel.next_state(i, t) - pred;
      CE.noalias() += res * res.transpose();
      ++count;
    }
  if (count > 0) CE /= static_cast<double>(count);

  std::vector<Eigen::VectorXd> Gamma_used =
      options.eb_shrink_carryover ? shrink_carryover(fit.Gamma, fit.Gamma_var) : fit.Gamma;
  return build(T, d, fit.phi, fit.Phi, Gamma_used, mu1, C1, CE, design);
}

RatioModel RatioModel::from_params(const LinearDgpParams& params, const DesignSpec& design) {
  params.validate();
  return build(params.T, params.d, params.phi, params.Phi, params.Gamma, params.init_mean,
               params.init_cov, params.state_noise_cov, design);
}

double RatioModel::log_ratio(int t, int a, const Eigen::VectorXd& s) const {
  return eta_[t][a].dot(s - mid_[t][a]);
}

double RatioModel::ratio(int t, int a, const Eigen::VectorXd& s) const {
  return std::exp(log_ratio(t, a, s));
}

RatioModel fit_ratio_model(const Panel& panel, const DesignSpec& design,
                           const RatioOptions& options) {
  return RatioModel::fit(fit_ols(panel), panel, design, options);
}

}  // namespace switchsim
