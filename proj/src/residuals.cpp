#include "switchsim/harness/residuals.hpp"

#include <cmath>
#include <limits>

#include "switchsim/estimators/ols.hpp"

namespace switchsim {

Eigen::MatrixXd residual_correlation(const Panel& panel) {
  panel.validate();
  const int n = panel.n, T = panel.T, d = panel.d;

  Eigen::MatrixXd resid(n, T);
  for (int t = 0; t < T; ++t) {
    const int a0 = panel.actions(0, t);
    bool varies = false;
    for (int i = 1; i < n && !varies; ++i) varies = panel.actions(i, t) != a0;

    const int p = d + 1 + (varies ? 1 : 0);
    Eigen::MatrixXd X(n, p);
    for (int i = 0; i < n; ++i) {
      X(i, 0) = 1.0;
      X.row(i).segment(1, d) = panel.states.row(panel.row(i, t));
      if (varies) X(i, d + 1) = panel.actions(i, t);
    }
    const Eigen::VectorXd b =
        lstsq_checked(X, panel.rewards.col(t), "residuals t=" + std::to_string(t + 1));
    resid.col(t) = panel.rewards.col(t) - X * b;
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  Eigen::VectorXd sd(T);
  for (int t = 0; t < T; ++t) {
    const double mu = resid.col(t).mean();
    sd[t] = std::sqrt((resid.col(t).array() - mu).square().sum() / std::max(n - 1, 1));
  }
  Eigen::MatrixXd corr(T, T);
  for (int t1 = 0; t1 < T; ++t1)
    for (int t2 = 0; t2 <= t1; ++t2) {
      if (t1 == t2) {
        corr(t1, t1) = sd[t1] > 0 ? 1.0 : nan;
        continue;
      }
      if (sd[t1] <= 0 || sd[t2] <= 0) {
        corr(t1, t2) = corr(t2, t1) = nan;
        continue;
      }
      const double m1 = resid.col(t1).mean(), m2 = resid.col(t2).mean();
      const double cov =
          ((resid.col(t1).array() - m1) * (resid.col(t2).array() - m2)).sum() / std::max(n - 1, 1);
      corr(t1, t2) = corr(t2, t1) = cov / (sd[t1] * sd[t2]);
    }
  return corr;
}

double mean_offdiagonal(const Eigen::MatrixXd& corr) {
  double total = 0.0;
  long count = 0;
  for (int i = 0; i < corr.rows(); ++i)
    for (int j = 0; j < corr.cols(); ++j) {
      if (i == j || std::isnan(corr(i, j))) continue;
      total += corr(i, j);
      ++count;
    }
  return count > 0 ? total / count : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace switchsim
