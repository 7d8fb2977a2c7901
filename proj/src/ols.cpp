#include "switchsim/estimators/ols.hpp"

#include <limits>

#include "switchsim/core/dgp.hpp"

namespace switchsim {

namespace {
constexpr double kConditionLimit = 1e12;
}

Eigen::MatrixXd lstsq_checked(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                              const std::string& label, double* condition_out) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(X);
  const Eigen::MatrixXd R =
      qr.matrixQR().topRows(X.cols()).template triangularView<Eigen::Upper>();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(R);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  const double cond = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
  if (condition_out) *condition_out = cond;
  if (!(cond < kConditionLimit))
    throw SingularFitError("singular regression at " + label +
                           " (condition number " + std::to_string(cond) + ")");
  return qr.solve(Y);
}

OlsFit fit_ols(const Panel& panel) {
  panel.validate();
  const int n = panel.n, T = panel.T, d = panel.d;
  if (n < d + 3)
    throw std::invalid_argument("fit_ols: need at least d+3 days, got " + std::to_string(n));

  OlsFit fit;
  fit.T = T;
  fit.d = d;
  fit.alpha.resize(T);
  fit.beta.resize(T, d);
  fit.gamma.resize(T);
  fit.phi.resize(T - 1);
  fit.Phi.resize(T - 1);
  fit.Gamma.resize(T - 1);
  fit.Gamma_var.resize(std::max(T - 1, 0), d);

  Eigen::MatrixXd X(n, d + 2);
  for (int t = 0; t < T; ++t) {
    for (int i = 0; i < n; ++i) {
      X(i, 0) = 1.0;
      X.row(i).segment(1, d) = panel.states.row(panel.row(i, t));
      X(i, d + 1) = panel.actions(i, t);
    }
    const bool with_transition = t < T - 1;
    Eigen::MatrixXd Y(n, 1 + (with_transition ? d : 0));
    Y.col(0) = panel.rewards.col(t);
    if (with_transition)
      for (int i = 0; i < n; ++i)
        Y.row(i).tail(d) = panel.next_states.row(panel.row(i, t));

    double cond = 0.0;
    const Eigen::MatrixXd B = lstsq_checked(X, Y, "t=" + std::to_string(t + 1), &cond);
    fit.max_condition = std::max(fit.max_condition, cond);

    fit.alpha[t] = B(0, 0);
    fit.beta.row(t) = B.col(0).segment(1, d);
    fit.gamma[t] = B(d + 1, 0);
    if (with_transition) {
      fit.phi[t].resize(d);
      fit.Phi[t].resize(d, d);
      fit.Gamma[t].resize(d);
      for (int j = 0; j < d; ++j) {
        fit.phi[t][j] = B(0, 1 + j);
        fit.Phi[t].row(j) = B.col(1 + j).segment(1, d);
        fit.Gamma[t][j] = B(d + 1, 1 + j);
      }
      // Gamma-hat sampling variance: s^2_j * [(X'X)^-1]_{aa}.
      const Eigen::MatrixXd xtx_inv = (X.transpose() * X).ldlt().solve(
          Eigen::MatrixXd::Identity(d + 2, d + 2));
      const double g_aa = xtx_inv(d + 1, d + 1);
      const int dof = std::max(n - (d + 2), 1);
      for (int j = 0; j < d; ++j) {
        const double rss = (Y.col(1 + j) - X * B.col(1 + j)).squaredNorm();
        fit.Gamma_var(t, j) = rss / dof * g_aa;
      }
    }
  }
  return fit;
}

double ate_ols(const OlsFit& fit) {
  // ate_from_coeffs only reads transition indices 1..T-1.
  return ate_from_coeffs(fit.gamma, fit.beta, fit.Phi, fit.Gamma);
}

}  // namespace switchsim
