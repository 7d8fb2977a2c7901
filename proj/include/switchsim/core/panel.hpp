// Experimental panel: n i.i.d. day trajectories of (state, action, reward).
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace switchsim {

// Row (i*T + t) of `states` is S_{i,t+1}; `next_states` holds S_{i,t+2}, so
// its last per-day row is the S_{T+1} column simulated one step past T.
struct Panel {
  int n = 0;
  int T = 0;
  int d = 0;
  Eigen::MatrixXd states;       // (n*T) x d
  Eigen::MatrixXd next_states;  // (n*T) x d
  Eigen::ArrayXXi actions;      // n x T
  Eigen::MatrixXd rewards;      // n x T

  static Panel zeros(int n, int T, int d);

  int row(int i, int t) const { return i * T + t; }  // 0-based i, t
  Eigen::VectorXd state(int i, int t) const { return states.row(row(i, t)); }
  Eigen::VectorXd next_state(int i, int t) const { return next_states.row(row(i, t)); }

  // New panel holding the listed days (duplicates allowed), in the given order.
  Panel subset(const std::vector<int>& days) const;

  void validate() const;
};

// Columnar text format with a one-line header: day,t,s1,...,sd,a,r.
// Day and t are 1-based. The S_{T+1} column is not exported; on import the
// last next_states row of each day is zero-filled (no estimator reads it).
void write_panel_csv(const Panel& panel, const std::string& path);
Panel read_panel_csv(const std::string& path);

}  // namespace switchsim
