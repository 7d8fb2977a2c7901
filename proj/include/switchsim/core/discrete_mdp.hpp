// Finite-state finite-horizon MDP used for brute-force oracles.
#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

namespace switchsim {

// transitions[t][a] is an S x S row-stochastic matrix, row = current state s,
// column = next state s'. rewards[t][a] is the length-S vector r_t(a, s).
struct DiscreteMdp {
  int S = 0;
  int T = 0;
  std::vector<std::array<Eigen::MatrixXd, 2>> transitions;  // T-1 stages (or T; last may be unused)
  std::vector<std::array<Eigen::VectorXd, 2>> rewards;      // T stages
  Eigen::VectorXd init_dist;                                // length S

  void validate() const;
};

}  // namespace switchsim
