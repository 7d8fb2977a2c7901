// Cross-interval correlation of fitted reward residuals.
#pragma once

#include <Eigen/Dense>

#include "switchsim/core/panel.hpp"

namespace switchsim {

// Per interval, residuals from the OLS reward fit on (1, S_t, A_t); the
// action column is dropped when it does not vary that interval. Returns the
// T x T correlation matrix of residuals across days (diagonal 1); entries
// with a zero-variance column are NaN.
Eigen::MatrixXd residual_correlation(const Panel& panel);

// Mean of the finite off-diagonal entries; NaN when none are defined.
double mean_offdiagonal(const Eigen::MatrixXd& corr);

}  // namespace switchsim
