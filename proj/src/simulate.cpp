#include "switchsim/simulate/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace switchsim {

namespace {
// Symmetric PSD square root via eigen decomposition, tiny negatives clamped.
Eigen::MatrixXd psd_factor(const Eigen::MatrixXd& cov, const char* who) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.info() != Eigen::Success) throw std::runtime_error(std::string(who) + ": eigen solve failed");
  Eigen::VectorXd ev = es.eigenvalues();
  const double tol = -1e-10 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (int i = 0; i < ev.size(); ++i) {
    if (ev[i] < tol)
      throw std::invalid_argument(std::string(who) + ": covariance is not positive semi-definite");
    ev[i] = std::sqrt(std::max(ev[i], 0.0));
  }
  return es.eigenvectors() * ev.asDiagonal();
}
}  // namespace

ErrorSampler::ErrorSampler(const ErrorCovSpec& spec, int T) : spec_(spec), T_(T) {
  if (T < 1) throw std::invalid_argument("ErrorSampler: T must be >= 1");
  const bool constructive =
      spec.family == CovFamily::Uncorrelated || spec.family == CovFamily::Autoregressive ||
      spec.family == CovFamily::MovingAverage ||
      (spec.family == CovFamily::Exchangeable && spec.rho >= 0.0);
  if (!constructive) {
    use_factor_ = true;
    factor_ = psd_factor(cov_matrix(spec, T), "ErrorSampler");
  } else if (spec.family == CovFamily::Exchangeable) {
    (void)cov_matrix(spec, T);  // still reject inadmissible parameterizations
  }
}

Eigen::VectorXd ErrorSampler::sample(Rng& rng) const {
  const double sd = std::sqrt(spec_.sigma2);
  Eigen::VectorXd e(T_);
  switch (spec_.family) {
    case CovFamily::Uncorrelated:
      for (int t = 0; t < T_; ++t) e[t] = sd * rng.normal();
      return e;
    case CovFamily::Autoregressive: {
      // Stationary start keeps Var(e_t) = sigma^2 at every t.
      const double c = sd * std::sqrt(1.0 - spec_.rho * spec_.rho);
      e[0] = sd * rng.normal();
      for (int t = 1; t < T_; ++t) e[t] = spec_.rho * e[t - 1] + c * rng.normal();
      return e;
    }
    case CovFamily::MovingAverage: {
      // e_t = K^{-1/2} (eps_{t+1} + ... + eps_{t+K}); T+K innovations per day.
      Eigen::VectorXd eps(T_ + spec_.K);
      for (int i = 0; i < eps.size(); ++i) eps[i] = sd * rng.normal();
      const double scale = 1.0 / std::sqrt(static_cast<double>(spec_.K));
      for (int t = 0; t < T_; ++t) {
        double acc = 0.0;
        for (int k = 1; k <= spec_.K; ++k) acc += eps[t + k];  // eps index t+k, 0-based shift
        e[t] = scale * acc;
      }
      return e;
    }
    case CovFamily::Exchangeable: {
      if (!use_factor_) {
        const double shared = std::sqrt(spec_.rho) * rng.normal();
        const double own = std::sqrt(1.0 - spec_.rho);
        for (int t = 0; t < T_; ++t) e[t] = sd * (shared + own * rng.normal());
        return e;
      }
      break;
    }
  }
  return factor_ * rng.normal_vector(T_);
}

Eigen::VectorXd sample_reward_errors(const ErrorCovSpec& spec, int T, Rng& rng) {
  return ErrorSampler(spec, T).sample(rng);
}

namespace {
Panel simulate_impl(const LinearDgpParams& p, const Eigen::ArrayXXi& actions, Rng& rng,
                    bool nonlinear) {
  p.validate();
  const int n = static_cast<int>(actions.rows());
  const int T = p.T;
  if (actions.cols() != T)
    throw std::invalid_argument("simulate: action matrix has " + std::to_string(actions.cols()) +
                                " columns but the DGP has T=" + std::to_string(T));
  Panel panel = Panel::zeros(n, T, p.d);
  panel.actions = actions;

  const ErrorSampler reward_errors(p.reward_cov, T);
  const Eigen::MatrixXd init_factor = psd_factor(p.init_cov, "simulate: init_cov");
  const Eigen::MatrixXd noise_factor = psd_factor(p.state_noise_cov, "simulate: state_noise_cov");

  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd s = p.init_mean + init_factor * rng.normal_vector(p.d);
    const Eigen::VectorXd e = reward_errors.sample(rng);
    for (int t = 0; t < T; ++t) {
      const int a = actions(i, t);
      panel.states.row(panel.row(i, t)) = s;
      double mean_reward;
      if (nonlinear)
        mean_reward = nonlinear_reward(p.alpha[t], p.beta.row(t), p.gamma[t], s, a);
      else
        mean_reward = p.alpha[t] + p.beta.row(t).dot(s) + p.gamma[t] * a;
      panel.rewards(i, t) = mean_reward + e[t];
      const Eigen::VectorXd noise = noise_factor * rng.normal_vector(p.d);
      s = p.phi[t] + p.Phi[t] * s + p.Gamma[t] * static_cast<double>(a) + noise;
      panel.next_states.row(panel.row(i, t)) = s;
    }
  }
  return panel;
}
}  // namespace

Panel simulate_linear(const LinearDgpParams& params, const Eigen::ArrayXXi& actions, Rng& rng) {
  return simulate_impl(params, actions, rng, false);
}

Panel simulate_nonlinear(const NonlinearDgpParams& params, const Eigen::ArrayXXi& actions,
                         Rng& rng) {
  return simulate_impl(params.coeffs, actions, rng, true);
}

double true_ate_linear(const LinearDgpParams& params) {
  params.validate();
  return ate_from_coeffs(params.gamma, params.beta, params.Phi, params.Gamma);
}

McAte true_ate_mc(const AnyDgp& dgp, int reps, Rng& rng) {
  if (reps < 1) throw std::invalid_argument("true_ate_mc: reps must be >= 1");
  const LinearDgpParams& p =
      std::holds_alternative<LinearDgpParams>(dgp) ? std::get<LinearDgpParams>(dgp)
                                                   : std::get<NonlinearDgpParams>(dgp).coeffs;
  const bool nonlinear = std::holds_alternative<NonlinearDgpParams>(dgp);
  p.validate();
  const int T = p.T;
  const ErrorSampler reward_errors(p.reward_cov, T);
  const Eigen::MatrixXd init_factor = psd_factor(p.init_cov, "true_ate_mc: init_cov");
  const Eigen::MatrixXd noise_factor = psd_factor(p.state_noise_cov, "true_ate_mc: state_noise_cov");

  double sum = 0.0, sumsq = 0.0;
  for (int r = 0; r < reps; ++r) {
    // Shared draws across the two policies pair the comparison.
    const Eigen::VectorXd s1 = p.init_mean + init_factor * rng.normal_vector(p.d);
    const Eigen::VectorXd e = reward_errors.sample(rng);
    Eigen::MatrixXd noise(p.d, T);
    for (int t = 0; t < T; ++t) noise.col(t) = noise_factor * rng.normal_vector(p.d);

    double diff = 0.0;
    for (int a = 0; a < 2; ++a) {
      Eigen::VectorXd s = s1;
      double total = 0.0;
      for (int t = 0; t < T; ++t) {
        double mean_reward;
        if (nonlinear)
          mean_reward = nonlinear_reward(p.alpha[t], p.beta.row(t), p.gamma[t], s, a);
        else
          mean_reward = p.alpha[t] + p.beta.row(t).dot(s) + p.gamma[t] * a;
        total += mean_reward + e[t];
        if (t + 1 < T) s = p.phi[t] + p.Phi[t] * s + p.Gamma[t] * static_cast<double>(a) + noise.col(t);
      }
      diff += (a == 1 ? 1.0 : -1.0) * total / T;
    }
    sum += diff;
    sumsq += diff * diff;
  }
  McAte out;
  out.value = sum / reps;
  const double var = reps > 1 ? (sumsq - sum * sum / reps) / (reps - 1) : 0.0;
  out.se = std::sqrt(std::max(var, 0.0) / reps);
  return out;
}

}  // namespace switchsim
