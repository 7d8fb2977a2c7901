#include "switchsim/simulate/bootstrap_env.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "switchsim/core/dgp.hpp"

namespace switchsim {

RidgeGcvFit ridge_gcv(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(X.rows());
  const int p = static_cast<int>(X.cols());
  const Eigen::MatrixXd XtX = X.transpose() * X;
  const Eigen::VectorXd Xty = X.transpose() * y;
  Eigen::VectorXd dpen = Eigen::VectorXd::Ones(p);
  dpen[0] = 0.0;  // intercept unpenalized

  RidgeGcvFit best;
  double best_gcv = std::numeric_limits<double>::infinity();
  for (int g = 0; g < 25; ++g) {
    const double lambda = std::pow(10.0, -8.0 + 10.0 * g / 24.0);
    Eigen::MatrixXd M = XtX + lambda * dpen.asDiagonal().toDenseMatrix();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(M);
    if (ldlt.info() != Eigen::Success) continue;
    const Eigen::VectorXd b = ldlt.solve(Xty);
    const double rss = (y - X * b).squaredNorm();
    const double df = (ldlt.solve(XtX)).trace();
    const double denom = 1.0 - df / n;
    if (denom <= 0) continue;
    const double gcv = (rss / n) / (denom * denom);
    if (gcv < best_gcv - 1e-15 * std::max(1.0, best_gcv)) {
      best_gcv = gcv;
      best.coef = b;
      best.penalty = lambda;
    }
  }
  if (!std::isfinite(best_gcv))
    throw std::runtime_error("ridge_gcv: no admissible penalty on the grid (singular fit)");
  return best;
}

BootstrapEnv fit_bootstrap_env(const Panel& source, double delta1, double delta2) {
  source.validate();
  if ((source.actions != 0).any())
    throw std::invalid_argument("fit_bootstrap_env: source must be an A/A panel (all actions 0)");
  const int N = source.n, T = source.T, d = source.d;
  if (N < d + 2)
    throw std::invalid_argument("fit_bootstrap_env: fewer than d+2 days, fit would be singular");

  BootstrapEnv env;
  env.N = N;
  env.T = T;
  env.d = d;
  env.delta1 = delta1;
  env.delta2 = delta2;
  env.alpha.resize(T);
  env.beta.resize(T, d);
  env.gamma.resize(T);
  env.phi.resize(T - 1);
  env.Phi.resize(T - 1);
  env.Gamma.resize(T - 1);
  env.reward_resid.resize(N, T);
  env.state_resid.resize(N * (T - 1), d);
  env.init_bank.resize(N, d);
  env.ridge_penalty.resize(T);

  for (int i = 0; i < N; ++i) env.init_bank.row(i) = source.states.row(source.row(i, 0));

  Eigen::MatrixXd X(N, d + 1);
  for (int t = 0; t < T; ++t) {
    for (int i = 0; i < N; ++i) {
      X(i, 0) = 1.0;
      X.row(i).tail(d) = source.states.row(source.row(i, t));
    }
    Eigen::VectorXd y = source.rewards.col(t);
    const RidgeGcvFit fit = ridge_gcv(X, y);
    env.alpha[t] = fit.coef[0];
    env.beta.row(t) = fit.coef.tail(d);
    env.reward_resid.col(t) = y - X * fit.coef;
    env.ridge_penalty[t] = fit.penalty;
    env.gamma[t] = delta1 * source.rewards.col(t).mean() / 100.0;

    if (t < T - 1) {
      env.phi[t].resize(d);
      env.Phi[t].resize(d, d);
      Eigen::VectorXd smean = Eigen::VectorXd::Zero(d);
      for (int j = 0; j < d; ++j) {
        Eigen::VectorXd yj(N);
        for (int i = 0; i < N; ++i) yj[i] = source.next_states(source.row(i, t), j);
        const RidgeGcvFit fj = ridge_gcv(X, yj);
        env.phi[t][j] = fj.coef[0];
        env.Phi[t].row(j) = fj.coef.tail(d);
        for (int i = 0; i < N; ++i)
          env.state_resid(i * (T - 1) + t, j) = yj[i] - X.row(i).dot(fj.coef);
      }
      for (int i = 0; i < N; ++i) smean += source.states.row(source.row(i, t)).transpose();
      env.Gamma[t] = delta2 * smean / (100.0 * N);
    }
  }
  return env;
}

double BootstrapEnv::true_ate() const {
  return ate_from_coeffs(gamma, beta, Phi, Gamma);
}

Panel simulate_bootstrap_with(const BootstrapEnv& env, const Eigen::ArrayXXi& actions,
                              const std::vector<int>& day_index,
                              const std::vector<double>& xi) {
  const int n = static_cast<int>(actions.rows());
  if (actions.cols() != env.T)
    throw std::invalid_argument("simulate_bootstrap: action matrix does not match env horizon");
  if (static_cast<int>(day_index.size()) != n || static_cast<int>(xi.size()) != n)
    throw std::invalid_argument("simulate_bootstrap: day_index/xi length mismatch");

  Panel panel = Panel::zeros(n, env.T, env.d);
  panel.actions = actions;
  for (int i = 0; i < n; ++i) {
    const int I = day_index[i];
    if (I < 0 || I >= env.N) throw std::out_of_range("simulate_bootstrap: bank index out of range");
    Eigen::VectorXd s = env.init_bank.row(I);
    for (int t = 0; t < env.T; ++t) {
      const double a = actions(i, t);
      panel.states.row(panel.row(i, t)) = s;
      panel.rewards(i, t) = env.alpha[t] + env.beta.row(t).dot(s) + env.gamma[t] * a +
                            xi[i] * env.reward_resid(I, t);
      if (t < env.T - 1) {
        s = env.phi[t] + env.Phi[t] * s + env.Gamma[t] * a +
            xi[i] * env.state_resid.row(I * (env.T - 1) + t).transpose();
        panel.next_states.row(panel.row(i, t)) = s;
      }
      // The S_{T+1} column stays zero: the env has no T-th transition and no
      // estimator reads that column.
    }
  }
  return panel;
}

Panel simulate_bootstrap(const BootstrapEnv& env, const DesignSpec& design, int n, Rng& rng) {
  const Eigen::ArrayXXi actions = generate_actions(design, n, rng);
  std::vector<int> day_index(n);
  std::vector<double> xi(n);
  for (int i = 0; i < n; ++i) {
    day_index[i] = static_cast<int>(rng.uniform_int(0, env.N - 1));
    xi[i] = rng.normal();
  }
  return simulate_bootstrap_with(env, actions, day_index, xi);
}

}  // namespace switchsim
