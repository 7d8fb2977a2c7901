#include "switchsim/estimators/lstd.hpp"

#include <cmath>

#include "switchsim/estimators/ols.hpp"

namespace switchsim {

Eigen::VectorXd Basis::eval(const Eigen::VectorXd& s) const {
  const int d = static_cast<int>(s.size());
  Eigen::VectorXd out(dim(d));
  out[0] = 1.0;
  Eigen::VectorXd power = Eigen::VectorXd::Ones(d);
  for (int p = 1; p <= degree; ++p) {
    power = power.cwiseProduct(s);
    out.segment(1 + (p - 1) * d, d) = power;
  }
  return out;
}

LstdCoeffs lstd_coeffs(const Panel& panel, const Basis& basis) {
  panel.validate();
  const int n = panel.n, T = panel.T;
  const int L = basis.dim(panel.d);

  LstdCoeffs out;
  out.T = T;
  out.L = L;
  out.theta.resize(T);

  std::vector<Eigen::VectorXd> feat(n);
  std::vector<Eigen::VectorXd> feat_next(n);
  for (int t = T - 1; t >= 0; --t) {
    for (int i = 0; i < n; ++i) {
      feat[i] = basis.eval(panel.state(i, t));
      if (t + 1 < T) feat_next[i] = basis.eval(panel.state(i, t + 1));
    }
    for (int a = 0; a < 2; ++a) {
      Eigen::MatrixXd M = Eigen::MatrixXd::Zero(L, L);
      Eigen::VectorXd b = Eigen::VectorXd::Zero(L);
      for (int i = 0; i < n; ++i) {
        if (panel.actions(i, t) != a) continue;
        M.noalias() += feat[i] * feat[i].transpose();
        double target = panel.rewards(i, t);
        if (t + 1 < T) target += feat_next[i].dot(out.theta[t + 1][a]);
        b.noalias() += feat[i] * target;
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const double smax = svd.singularValues()(0);
      const double smin = svd.singularValues()(L - 1);
      if (!(smin > 0.0) || smax / smin > 1e12)
        throw SingularFitError("singular LSTD moment matrix at (t=" + std::to_string(t + 1) +
                               ", a=" + std::to_string(a) + ")");
      out.theta[t][a] = svd.solve(b);
    }
  }
  return out;
}

double estimate_lstd(const Panel& panel, const Basis& basis) {
  const LstdCoeffs coeffs = lstd_coeffs(panel, basis);
  double total = 0.0;
  for (int i = 0; i < panel.n; ++i) {
    const Eigen::VectorXd f = basis.eval(panel.state(i, 0));
    total += f.dot(coeffs.theta[0][1] - coeffs.theta[0][0]);
  }
  return total / (static_cast<double>(panel.n) * panel.T);
}

double lstd_normal_equation_residual(const Panel& panel, const Basis& basis,
                                     const LstdCoeffs& coeffs) {
  const int n = panel.n, T = panel.T;
  double worst = 0.0;
  for (int t = 0; t < T; ++t)
    for (int a = 0; a < 2; ++a) {
      Eigen::VectorXd resid = Eigen::VectorXd::Zero(coeffs.L);
      for (int i = 0; i < n; ++i) {
        if (panel.actions(i, t) != a) continue;
        const Eigen::VectorXd f = basis.eval(panel.state(i, t));
        double td = panel.rewards(i, t) - f.dot(coeffs.theta[t][a]);
        if (t + 1 < T) td += basis.eval(panel.state(i, t + 1)).dot(coeffs.theta[t + 1][a]);
        resid += f * td;
      }
      worst = std::max(worst, resid.cwiseAbs().maxCoeff() / n);
    }
  return worst;
}

}  // namespace switchsim
