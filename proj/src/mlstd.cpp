#include "switchsim/estimators/mlstd.hpp"

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "switchsim/estimators/ols.hpp"

namespace switchsim {

namespace {
// (1, s) tensor (1, u) where u = t/T is the normalized 1-based interval.
Eigen::VectorXd augmented_features(const Eigen::VectorXd& s, double u) {
  const int d = static_cast<int>(s.size());
  Eigen::VectorXd f(2 * (d + 1));
  f[0] = 1.0;
  f[1] = u;
  for (int j = 0; j < d; ++j) {
    f[2 + 2 * j] = s[j];
    f[3 + 2 * j] = s[j] * u;
  }
  return f;
}

Eigen::VectorXd solve_pooled(const Eigen::MatrixXd& M, const Eigen::VectorXd& b, int j, int a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(M.rows() - 1);
  if (!(smin > 0.0) || smax / smin > 1e12)
    throw SingularFitError("singular pooled moment matrix at (gap=" + std::to_string(j) +
                           ", a=" + std::to_string(a) + ")");
  return svd.solve(b);
}
}  // namespace

double estimate_lstd_modified(const Panel& panel) {
  panel.validate();
  const int n = panel.n, T = panel.T, d = panel.d;
  const int L = 2 * (d + 1);

  // Features of every (i, t) up front; u = (t+1)/T for 0-based t.
  std::vector<Eigen::VectorXd> feat(static_cast<std::size_t>(n) * T);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < T; ++t)
      feat[panel.row(i, t)] =
          augmented_features(panel.state(i, t), static_cast<double>(t + 1) / T);

  std::array<Eigen::VectorXd, 2> theta_prev;
  std::array<Eigen::VectorXd, 2> theta;
  for (int j = 0; j < T; ++j) {
    for (int a = 0; a < 2; ++a) {
      Eigen::MatrixXd M = Eigen::MatrixXd::Zero(L, L);
      Eigen::VectorXd b = Eigen::VectorXd::Zero(L);
      for (int i = 0; i < n; ++i)
        for (int t = 0; t + j < T; ++t) {
          if (panel.actions(i, t) != a) continue;
          const Eigen::VectorXd& f = feat[panel.row(i, t)];
          M.noalias() += f * f.transpose();
          double target = panel.rewards(i, t);
          if (j > 0) target += feat[panel.row(i, t + 1)].dot(theta_prev[a]);
          b.noalias() += f * target;
        }
      theta[a] = solve_pooled(M, b, j, a);
    }
    theta_prev = theta;
  }

  double total = 0.0;
  for (int i = 0; i < n; ++i) total += feat[panel.row(i, 0)].dot(theta[1] - theta[0]);
  return total / n;
}

}  // namespace switchsim
