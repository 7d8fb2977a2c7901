// Modified LSTD: the time index joins the state and data are pooled across
// intervals, one estimating equation per time gap.
#pragma once

#include "switchsim/core/panel.hpp"

namespace switchsim {

// Augmented-state features: tensor product of (1, s) with (1, t/T), so
// L = 2(d+1). Gap-j coefficients are solved forward for j = 0..T-1 pooling
// all start intervals; the estimate is
//   (1/n) sum_i phi(S~_{i,1})' (theta_{T-1,1} - theta_{T-1,0}).
double estimate_lstd_modified(const Panel& panel);

}  // namespace switchsim
