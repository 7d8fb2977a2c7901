// Treatment-assignment designs for switchback experiments.
#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "switchsim/rng.hpp"

namespace switchsim {

enum class DesignKind { MSwitchback, AlternatingDay, RegularBernoulli };

// An m-block design over T intervals per day. m must divide T; an
// alternating-day design is the m = T switchback.
struct DesignSpec {
  DesignKind kind;
  int m;
  int T;

  static DesignSpec m_switchback(int m, int T);
  static DesignSpec alternating_day(int T);
  static DesignSpec regular_bernoulli(int m, int T);

  int blocks() const { return T / m; }
  // 0-based block index of a 1-based interval.
  int block_of(int t) const { return (t - 1) / m; }

  // Action at interval k implied by A_t = a. Deterministic for the
  // m-switchback family (the whole day is pinned by any one interval).
  int implied_action(int t, int a, int k) const;

  std::string describe() const;
};

// n x T binary actions. MSwitchback: day-1 head uniform (or forced), blocks
// flip within a day, day heads alternate across days. RegularBernoulli: every
// block head is a fresh fair coin, and the block grid restarts each day.
Eigen::ArrayXXi generate_actions(const DesignSpec& design, int n, Rng& rng,
                                 std::optional<int> forced_first = std::nullopt);

}  // namespace switchsim
