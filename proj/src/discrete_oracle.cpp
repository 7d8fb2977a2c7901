#include "switchsim/theory/discrete_oracle.hpp"

namespace switchsim {

double brute_force_ate_discrete(const DiscreteMdp& mdp) {
  mdp.validate();
  double value[2] = {0.0, 0.0};
  for (int a = 0; a < 2; ++a) {
    Eigen::VectorXd dist = mdp.init_dist;
    for (int t = 0; t < mdp.T; ++t) {
      value[a] += dist.dot(mdp.rewards[t][a]);
      if (t + 1 < mdp.T) dist = mdp.transitions[t][a].transpose() * dist;
    }
  }
  return (value[1] - value[0]) / mdp.T;
}

double compute_delta(const DiscreteMdp& mdp) {
  mdp.validate();
  double delta = 0.0;
  for (const auto& stage : mdp.transitions)
    for (int s = 0; s < mdp.S; ++s) {
      const double tv = (stage[1].row(s) - stage[0].row(s)).lpNorm<1>();
      delta = std::max(delta, tv);
    }
  return delta;
}

}  // namespace switchsim
