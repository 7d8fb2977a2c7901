// Doubly robust ATE estimation with sample splitting and cross-fitting.
//
// Estimating function per day:
//   psi = V_1^1(S_1) - V_1^0(S_1)
//       + sum_t sum_a (-1)^{a+1} 2 I(A_t = a) w_t^a(S_t)
//                     [ R_t + V_{t+1}^a(S_{t+1}) - V_t^a(S_t) ],
// with V_{T+1} = 0 and w the state-marginal IS ratio; the estimate is
// (1/(nT)) sum_i psi_i over the evaluation folds.
#pragma once

#include <cstdint>

#include "switchsim/core/design.hpp"
#include "switchsim/core/panel.hpp"
#include "switchsim/estimators/lstd.hpp"
#include "switchsim/estimators/ratio_model.hpp"

namespace switchsim {

enum class DrlNuisance {
  ModelBased,           // values from the fitted linear model, ratios from RatioModel
  LstdValueModelRatio,  // values from LSTD on the training fold, same ratios
};

struct DrlOptions {
  int k_folds = 8;
  DrlNuisance nuisance = DrlNuisance::ModelBased;
  RatioOptions ratio;           // EB shrinkage on by default
  bool force_unit_ratio = false;   // replace the ratio nuisance by 1
  bool force_zero_value = false;   // replace the value nuisance by 0
  Basis lstd_basis{1};
  std::uint64_t split_seed = 0;
};

// Folds are assigned by ranking days on a seeded content hash, so the split
// is random, equally sized, and invariant to day order.
double estimate_drl(const Panel& panel, const DesignSpec& design, const DrlOptions& options);

struct DrlLstdGap {
  double drl = 0.0;
  double lstd = 0.0;
  double gap = 0.0;
};

// Single-fold identity check: LSTD values plus the linearly parameterized
// ratio weights built by the forward moment recursion make the augmentation
// vanish, so the psi-average must reproduce the LSTD estimate exactly.
// `theta_perturbation`, when nonzero, is added to one coefficient entry to
// verify the identity is specific to the exact LSTD solution.
DrlLstdGap drl_equals_lstd_check(const Panel& panel, const Basis& basis,
                                 double theta_perturbation = 0.0);

}  // namespace switchsim
