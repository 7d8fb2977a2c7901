#include "switchsim/core/panel.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace switchsim {

Panel Panel::zeros(int n, int T, int d) {
  Panel p;
  p.n = n;
  p.T = T;
  p.d = d;
  p.states = Eigen::MatrixXd::Zero(n * T, d);
  p.next_states = Eigen::MatrixXd::Zero(n * T, d);
  p.actions = Eigen::ArrayXXi::Zero(n, T);
  p.rewards = Eigen::MatrixXd::Zero(n, T);
  return p;
}

Panel Panel::subset(const std::vector<int>& days) const {
  Panel out = Panel::zeros(static_cast<int>(days.size()), T, d);
  for (int k = 0; k < out.n; ++k) {
    const int i = days[k];
    if (i < 0 || i >= n) throw std::out_of_range("panel subset: day index out of range");
    out.states.middleRows(k * T, T) = states.middleRows(i * T, T);
    out.next_states.middleRows(k * T, T) = next_states.middleRows(i * T, T);
    out.actions.row(k) = actions.row(i);
    out.rewards.row(k) = rewards.row(i);
  }
  return out;
}

void Panel::validate() const {
  if (n < 1 || T < 1 || d < 1) throw std::invalid_argument("panel: empty dimensions");
  if (states.rows() != n * T || next_states.rows() != n * T || states.cols() != d ||
      next_states.cols() != d || actions.rows() != n || actions.cols() != T ||
      rewards.rows() != n || rewards.cols() != T)
    throw std::invalid_argument("panel: inconsistent array shapes");
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < T; ++t)
      if (actions(i, t) != 0 && actions(i, t) != 1)
        throw std::invalid_argument("panel: actions must be binary");
}

namespace {
std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

void write_panel_csv(const Panel& panel, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_panel_csv: cannot open " + path);
  out << "day,t";
  for (int j = 1; j <= panel.d; ++j) out << ",s" << j;
  out << ",a,r\n";
  for (int i = 0; i < panel.n; ++i)
    for (int t = 0; t < panel.T; ++t) {
      out << (i + 1) << ',' << (t + 1);
      for (int j = 0; j < panel.d; ++j) out << ',' << fmt_double(panel.states(panel.row(i, t), j));
      out << ',' << panel.actions(i, t) << ',' << fmt_double(panel.rewards(i, t)) << '\n';
    }
  if (!out) throw std::runtime_error("write_panel_csv: write failed for " + path);
}

Panel read_panel_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_panel_csv: cannot open " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("read_panel_csv: empty file " + path);

  std::vector<std::string> cols;
  {
    std::stringstream ss(header);
    std::string c;
    while (std::getline(ss, c, ',')) cols.push_back(c);
  }
  if (cols.size() < 5 || cols[0] != "day" || cols[1] != "t" || cols[cols.size() - 2] != "a" ||
      cols.back() != "r")
    throw std::runtime_error("read_panel_csv: bad header, expected day,t,s1..sd,a,r");
  const int d = static_cast<int>(cols.size()) - 4;
  for (int j = 0; j < d; ++j)
    if (cols[2 + j] != "s" + std::to_string(j + 1))
      throw std::runtime_error("read_panel_csv: bad state column name " + cols[2 + j]);

  struct Row {
    int day, t, a;
    std::vector<double> s;
    double r;
  };
  std::vector<Row> rows;
  std::string line;
  int max_day = 0, max_t = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string tok;
    Row rw;
    rw.s.resize(d);
    auto next = [&]() {
      if (!std::getline(ss, tok, ',')) throw std::runtime_error("read_panel_csv: short row");
      return tok;
    };
    rw.day = std::stoi(next());
    rw.t = std::stoi(next());
    for (int j = 0; j < d; ++j) rw.s[j] = std::stod(next());
    rw.a = std::stoi(next());
    rw.r = std::stod(next());
    max_day = std::max(max_day, rw.day);
    max_t = std::max(max_t, rw.t);
    rows.push_back(std::move(rw));
  }
  if (rows.empty()) throw std::runtime_error("read_panel_csv: no data rows in " + path);
  if (static_cast<long long>(rows.size()) != 1LL * max_day * max_t)
    throw std::runtime_error("read_panel_csv: panel grid is not dense");

  Panel p = Panel::zeros(max_day, max_t, d);
  std::vector<char> seen(rows.size(), 0);
  for (const Row& rw : rows) {
    if (rw.day < 1 || rw.t < 1) throw std::runtime_error("read_panel_csv: day/t must be 1-based");
    const int idx = (rw.day - 1) * max_t + (rw.t - 1);
    if (seen[idx]) throw std::runtime_error("read_panel_csv: duplicate (day,t) row");
    seen[idx] = 1;
    for (int j = 0; j < d; ++j) p.states(idx, j) = rw.s[j];
    p.actions(rw.day - 1, rw.t - 1) = rw.a;
    p.rewards(rw.day - 1, rw.t - 1) = rw.r;
  }
  for (int i = 0; i < p.n; ++i)
    for (int t = 0; t + 1 < p.T; ++t) p.next_states.row(p.row(i, t)) = p.states.row(p.row(i, t + 1));
  p.validate();
  return p;
}

}  // namespace switchsim
