// Exact oracles on finite MDPs: ATE by forward recursion over state
// distributions, and the carryover measure
//   delta = max_{s,t} sum_{s'} | p_t(s'|1,s) - p_t(s'|0,s) |.
#pragma once

#include "switchsim/core/discrete_mdp.hpp"

namespace switchsim {

double brute_force_ate_discrete(const DiscreteMdp& mdp);

double compute_delta(const DiscreteMdp& mdp);

}  // namespace switchsim
