#include "switchsim/estimators/drl.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "switchsim/estimators/model_value.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

namespace {

std::uint64_t hash_double(std::uint64_t h, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  h ^= bits;
  return splitmix64(h);
}

// Seeded hash of one day's trajectory; identical content hashes identically
// regardless of its position in the panel.
std::uint64_t day_hash(const Panel& panel, int i, std::uint64_t seed) {
  std::uint64_t h = splitmix64(seed);
  for (int t = 0; t < panel.T; ++t) {
    for (int j = 0; j < panel.d; ++j) h = hash_double(h, panel.states(panel.row(i, t), j));
    h ^= static_cast<std::uint64_t>(panel.actions(i, t)) + 0x9e37;
    h = splitmix64(h);
    h = hash_double(h, panel.rewards(i, t));
  }
  return h;
}

struct Nuisances {
  const ModelValue* value = nullptr;
  const LstdCoeffs* lstd = nullptr;
  const Basis* basis = nullptr;
  const RatioModel* ratio = nullptr;
  bool unit_ratio = false;
  bool zero_value = false;

  double V(int t, int a, const Eigen::VectorXd& s, int T) const {
    if (zero_value || t >= T) return 0.0;
    if (lstd) return basis->eval(s).dot(lstd->theta[t][a]);
    return value->value(t, a, s);
  }
  double W(int t, int a, const Eigen::VectorXd& s) const {
    if (unit_ratio) return 1.0;
    return ratio->ratio(t, a, s);
  }
};

double psi_day(const Panel& panel, int i, const Nuisances& nu) {
  const int T = panel.T;
  double psi = nu.V(0, 1, panel.state(i, 0), T) - nu.V(0, 0, panel.state(i, 0), T);
  for (int t = 0; t < T; ++t) {
    const int a = panel.actions(i, t);
    const Eigen::VectorXd s = panel.state(i, t);
    double td = panel.rewards(i, t) - nu.V(t, a, s, T);
    if (t + 1 < T) td += nu.V(t + 1, a, panel.state(i, t + 1), T);
    const double sign = (a == 1) ? 1.0 : -1.0;
    psi += sign * 2.0 * nu.W(t, a, s) * td;
  }
  return psi;
}

}  // namespace

double estimate_drl(const Panel& panel, const DesignSpec& design, const DrlOptions& options) {
  panel.validate();
  const int n = panel.n;
  const int K = options.k_folds;
  if (K < 2) throw std::invalid_argument("estimate_drl: K_folds must be >= 2");
  if (n < 2 * K)
    throw std::invalid_argument("estimate_drl: need n >= 2*K_folds (n=" + std::to_string(n) +
                                ", K=" + std::to_string(K) + ")");

  // Content-keyed fold assignment.
  std::vector<std::uint64_t> keys(n);
  for (int i = 0; i < n; ++i) keys[i] = day_hash(panel, i, options.split_seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return a < b;
  });

  double total = 0.0;
  for (int k = 0; k < K; ++k) {
    std::vector<int> eval_days, train_days;
    for (int pos = 0; pos < n; ++pos)
      (pos % K == k ? eval_days : train_days).push_back(order[pos]);

    const Panel train = panel.subset(train_days);
    Nuisances nu;
    nu.unit_ratio = options.force_unit_ratio;
    nu.zero_value = options.force_zero_value;

    std::optional<OlsFit> fit;
    std::optional<ModelValue> mv;
    std::optional<LstdCoeffs> lstd;
    std::optional<RatioModel> ratio;

    if (!options.force_unit_ratio) {
      fit = fit_ols(train);
      ratio = RatioModel::fit(*fit, train, design, options.ratio);
      nu.ratio = &*ratio;
    }
    if (!options.force_zero_value) {
      if (options.nuisance == DrlNuisance::LstdValueModelRatio) {
        lstd = lstd_coeffs(train, options.lstd_basis);
        nu.lstd = &*lstd;
        nu.basis = &options.lstd_basis;
      } else {
        if (!fit) fit = fit_ols(train);
        mv = ModelValue::from_fit(*fit);
        nu.value = &*mv;
      }
    }

    for (int i : eval_days) total += psi_day(panel, i, nu);
  }
  return total / (static_cast<double>(n) * panel.T);
}

DrlLstdGap drl_equals_lstd_check(const Panel& panel, const Basis& basis,
                                 double theta_perturbation) {
  panel.validate();
  const int n = panel.n, T = panel.T;
  const int L = basis.dim(panel.d);

  LstdCoeffs coeffs = lstd_coeffs(panel, basis);
  if (theta_perturbation != 0.0) coeffs.theta[0][1][0] += theta_perturbation;

  const double lstd_value = [&] {
    double tot = 0.0;
    for (int i = 0; i < n; ++i)
      tot += basis.eval(panel.state(i, 0)).dot(coeffs.theta[0][1] - coeffs.theta[0][0]);
    return tot / (static_cast<double>(n) * T);
  }();

  // Forward recursion for the linear ratio weights alpha_{t,a}:
  //   alpha_1 = [sum_i phi phi' I(A_1=a)]^{-1} [sum_i phi],
  //   alpha_t = Sigma_t^{-1} Cross_{t,t-1} alpha_{t-1}.
  std::vector<std::array<Eigen::VectorXd, 2>> alpha(T);
  std::vector<Eigen::VectorXd> feat(n), feat_prev(n);
  for (int t = 0; t < T; ++t) {
    for (int i = 0; i < n; ++i) feat[i] = basis.eval(panel.state(i, t));
    for (int a = 0; a < 2; ++a) {
      Eigen::MatrixXd Sigma = Eigen::MatrixXd::Zero(L, L);
      for (int i = 0; i < n; ++i)
        if (panel.actions(i, t) == a) Sigma.noalias() += feat[i] * feat[i].transpose();
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(L);
      if (t == 0) {
        for (int i = 0; i < n; ++i) rhs += feat[i];
      } else {
        Eigen::MatrixXd cross = Eigen::MatrixXd::Zero(L, L);
        for (int i = 0; i < n; ++i)
          if (panel.actions(i, t - 1) == a) cross.noalias() += feat[i] * feat_prev[i].transpose();
        rhs = cross * alpha[t - 1][a];
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(Sigma, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const double smin = svd.singularValues()(L - 1);
      if (!(smin > 0.0) || svd.singularValues()(0) / smin > 1e12)
        throw SingularFitError("drl_equals_lstd_check: singular moment matrix at (t=" +
                               std::to_string(t + 1) + ", a=" + std::to_string(a) + ")");
      alpha[t][a] = svd.solve(rhs);
    }
    feat_prev = feat;
  }

  // psi with LSTD values and the linear state-action weights (the factor-2
  // and the propensity live inside alpha by construction).
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd f1 = basis.eval(panel.state(i, 0));
    double psi = f1.dot(coeffs.theta[0][1] - coeffs.theta[0][0]);
    for (int t = 0; t < T; ++t) {
      const int a = panel.actions(i, t);
      const Eigen::VectorXd f = basis.eval(panel.state(i, t));
      double td = panel.rewards(i, t) - f.dot(coeffs.theta[t][a]);
      if (t + 1 < T) td += basis.eval(panel.state(i, t + 1)).dot(coeffs.theta[t + 1][a]);
      const double w = f.dot(alpha[t][a]);
      psi += ((a == 1) ? 1.0 : -1.0) * w * td;
    }
    total += psi;
  }

  DrlLstdGap out;
  out.drl = total / (static_cast<double>(n) * T);
  out.lstd = lstd_value;
  out.gap = std::abs(out.drl - out.lstd);
  return out;
}

}  // namespace switchsim
