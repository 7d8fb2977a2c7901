#include "switchsim/core/design.hpp"

#include <stdexcept>

namespace switchsim {

namespace {
void check(int m, int T) {
  if (T < 1) throw std::invalid_argument("design: T must be >= 1");
  if (m < 1) throw std::invalid_argument("design: m must be >= 1");
  if (T % m != 0)
    throw std::invalid_argument("design: m must divide T (m=" + std::to_string(m) +
                                ", T=" + std::to_string(T) + ")");
}
}  // namespace

DesignSpec DesignSpec::m_switchback(int m, int T) {
  check(m, T);
  return DesignSpec{DesignKind::MSwitchback, m, T};
}

DesignSpec DesignSpec::alternating_day(int T) {
  check(T, T);
  return DesignSpec{DesignKind::AlternatingDay, T, T};
}

DesignSpec DesignSpec::regular_bernoulli(int m, int T) {
  check(m, T);
  return DesignSpec{DesignKind::RegularBernoulli, m, T};
}

int DesignSpec::implied_action(int t, int a, int k) const {
  if (kind == DesignKind::RegularBernoulli)
    throw std::invalid_argument("implied_action: regular Bernoulli designs are not deterministic given A_t");
  const bool same_parity = ((block_of(t) - block_of(k)) % 2) == 0;
  return same_parity ? a : 1 - a;
}

std::string DesignSpec::describe() const {
  switch (kind) {
    case DesignKind::MSwitchback:
      return "m-switchback(m=" + std::to_string(m) + ", T=" + std::to_string(T) + ")";
    case DesignKind::AlternatingDay:
      return "alternating-day(T=" + std::to_string(T) + ")";
    default:
      return "regular-bernoulli(m=" + std::to_string(m) + ", T=" + std::to_string(T) + ")";
  }
}

Eigen::ArrayXXi generate_actions(const DesignSpec& design, int n, Rng& rng,
                                 std::optional<int> forced_first) {
  if (n < 1) throw std::invalid_argument("generate_actions: n must be >= 1");
  const int T = design.T;
  const int m = design.m;
  Eigen::ArrayXXi actions(n, T);

  if (design.kind == DesignKind::RegularBernoulli) {
    for (int i = 0; i < n; ++i) {
      for (int b = 0; b < design.blocks(); ++b) {
        int head;
        if (i == 0 && b == 0 && forced_first.has_value())
          head = *forced_first;
        else
          head = rng.bernoulli_half() ? 1 : 0;
        for (int j = 0; j < m; ++j) actions(i, b * m + j) = head;
      }
    }
    return actions;
  }

  const int first = forced_first.has_value() ? *forced_first : (rng.bernoulli_half() ? 1 : 0);
  for (int i = 0; i < n; ++i) {
    const int day_head = (first + i) % 2;
    for (int t = 0; t < T; ++t) {
      const int parity = (t / m) % 2;
      actions(i, t) = (day_head + parity) % 2;
    }
  }
  return actions;
}

}  // namespace switchsim
