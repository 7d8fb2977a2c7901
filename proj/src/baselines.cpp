#include "switchsim/estimators/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace switchsim {

double estimate_simple_is(const Panel& panel) {
  panel.validate();
  double total = 0.0;
  for (int i = 0; i < panel.n; ++i)
    for (int t = 0; t < panel.T; ++t)
      total += (panel.actions(i, t) - 0.5) * panel.rewards(i, t);
  return 4.0 * total / (static_cast<double>(panel.n) * panel.T);
}

double estimate_multistep_is(const Panel& panel, const DesignSpec& design,
                             std::optional<int> m_override) {
  panel.validate();
  if (design.kind != DesignKind::RegularBernoulli)
    throw std::invalid_argument(
        "estimate_multistep_is: run probabilities are closed-form only under the regular "
        "Bernoulli switchback design");
  if (design.T != panel.T) throw std::invalid_argument("estimate_multistep_is: horizon mismatch");
  const int m = m_override.value_or(design.m);
  if (m < 0) throw std::invalid_argument("estimate_multistep_is: m must be >= 0");
  if (m == 0) return estimate_simple_is(panel);

  const int T = panel.T;
  double total = 0.0;
  for (int i = 0; i < panel.n; ++i)
    for (int t = 1; t <= T; ++t) {
      const int lo = std::max(1, t - m);  // run window lo..t (1-based)
      // Each block whose head lies in [lo, t] (plus the block containing lo)
      // contributes one fair coin to the run probability.
      const int n_blocks = design.block_of(t) - design.block_of(lo) + 1;
      const double prob = std::pow(0.5, n_blocks);
      if (!(prob > 0.0))
        throw std::runtime_error("estimate_multistep_is: zero-probability action run");
      int all_one = 1, all_zero = 1;
      for (int k = lo; k <= t; ++k) {
        if (panel.actions(i, k - 1) != 1) all_one = 0;
        if (panel.actions(i, k - 1) != 0) all_zero = 0;
      }
      if (all_one) total += panel.rewards(i, t - 1) / prob;
      if (all_zero) total -= panel.rewards(i, t - 1) / prob;
    }
  return total / (static_cast<double>(panel.n) * T);
}

BurninResult estimate_burnin_dim(const Panel& panel, const DesignSpec& design, int b) {
  panel.validate();
  if (design.T != panel.T) throw std::invalid_argument("estimate_burnin_dim: horizon mismatch");
  const int m = design.m;
  if (b < 0 || b >= m)
    throw std::invalid_argument("estimate_burnin_dim: burn-in must satisfy 0 <= b < m");

  const int blocks = design.blocks();
  BurninResult out;
  double total = 0.0;
  int used = 0;
  for (int i = 0; i < panel.n; ++i) {
    double sum1 = 0.0, sum0 = 0.0;
    int k1 = 0, k0 = 0;
    for (int blk = 0; blk < blocks; ++blk) {
      const int head = panel.actions(i, blk * m);
      double s = 0.0;
      for (int j = b; j < m; ++j) s += panel.rewards(i, blk * m + j);
      if (head == 1) {
        sum1 += s;
        ++k1;
      } else {
        sum0 += s;
        ++k0;
      }
    }
    if (k1 == 0 || k0 == 0) {
      ++out.skipped_days;
      continue;
    }
    total += sum1 / (k1 * static_cast<double>(m - b)) - sum0 / (k0 * static_cast<double>(m - b));
    ++used;
  }
  if (used == 0)
    throw std::runtime_error("estimate_burnin_dim: every day lacks one of the arms");
  out.value = total / used;
  return out;
}

}  // namespace switchsim
