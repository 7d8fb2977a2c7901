#include "switchsim/core/discrete_mdp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace switchsim {

void DiscreteMdp::validate() const {
  if (S < 1 || T < 1) throw std::invalid_argument("discrete_mdp: S and T must be >= 1");
  if (static_cast<int>(rewards.size()) != T)
    throw std::invalid_argument("discrete_mdp: need T reward stages");
  if (static_cast<int>(transitions.size()) < T - 1)
    throw std::invalid_argument("discrete_mdp: need at least T-1 transition stages");
  if (init_dist.size() != S || std::abs(init_dist.sum() - 1.0) > 1e-12 || init_dist.minCoeff() < 0)
    throw std::invalid_argument("discrete_mdp: init_dist must be a probability vector");
  for (std::size_t t = 0; t < transitions.size(); ++t)
    for (int a = 0; a < 2; ++a) {
      const Eigen::MatrixXd& P = transitions[t][a];
      if (P.rows() != S || P.cols() != S)
        throw std::invalid_argument("discrete_mdp: transition matrix shape mismatch");
      if (P.minCoeff() < 0.0)
        throw std::invalid_argument("discrete_mdp: negative transition probability");
      for (int s = 0; s < S; ++s)
        if (std::abs(P.row(s).sum() - 1.0) > 1e-12)
          throw std::invalid_argument("discrete_mdp: row " + std::to_string(s) + " at stage " +
                                      std::to_string(t + 1) + " does not sum to 1");
    }
  for (int t = 0; t < T; ++t)
    for (int a = 0; a < 2; ++a)
      if (rewards[t][a].size() != S)
        throw std::invalid_argument("discrete_mdp: reward vector shape mismatch");
}

}  // namespace switchsim
