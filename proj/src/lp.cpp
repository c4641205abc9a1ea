#include "gkz/lp.hpp"

#include "gkz/errors.hpp"

namespace gkz {

namespace {

struct Tableau {
  std::vector<Vec> t;               // m rows, last entry is the rhs
  std::vector<std::size_t> basis;   // basic column of each row
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || sgn(t[i][c]) == 0) continue;
      Rat f = t[i][c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (sgn(t[r][j]) != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Returns false when unbounded.
  bool optimize(const Vec& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols && enter == ncols; ++j) {
        if (!allowed[j]) continue;
        Rat d = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i)
          if (sgn(t[i][j]) != 0) d -= cost[basis[i]] * t[i][j];
        if (sgn(d) > 0) enter = j;
      }
      if (enter == ncols) return true;
      std::size_t leave = t.size();
      Rat best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (sgn(t[i][enter]) <= 0) continue;
        Rat ratio = t[i][ncols] / t[i][enter];
        if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }

  Rat value(const Vec& cost) const {
    Rat v = 0;
    for (std::size_t i = 0; i < t.size(); ++i) v += cost[basis[i]] * t[i][ncols];
    return v;
  }
};

}  // namespace

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), free_(num_vars, false), objective_(zeros(num_vars)) {}

void LinearProgram::set_free(std::size_t var) { free_.at(var) = true; }

void LinearProgram::set_all_free() { free_.assign(num_vars_, true); }

void LinearProgram::add_constraint(Vec coeffs, Relation rel, Rat rhs) {
  if (coeffs.size() != num_vars_) throw DimensionMismatch("LinearProgram: constraint length mismatch");
  rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::maximize(Vec objective) {
  if (objective.size() != num_vars_) throw DimensionMismatch("LinearProgram: objective length mismatch");
  objective_ = std::move(objective);
}

LpResult LinearProgram::solve() const {
  // column layout: structural (free vars split), slacks, artificials
  std::vector<std::size_t> pos_col(num_vars_), neg_col(num_vars_, SIZE_MAX);
  std::size_t ncol = 0;
  for (std::size_t j = 0; j < num_vars_; ++j) {
    pos_col[j] = ncol++;
    if (free_[j]) neg_col[j] = ncol++;
  }
  std::vector<std::size_t> slack_col(rows_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].rel != Relation::Equal) slack_col[i] = ncol++;
  const std::size_t first_art = ncol;
  ncol += rows_.size();

  Tableau tab;
  tab.ncols = ncol;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Vec row = zeros(ncol + 1);
    for (std::size_t j = 0; j < num_vars_; ++j) {
      row[pos_col[j]] = rows_[i].coeffs[j];
      if (free_[j]) row[neg_col[j]] = -rows_[i].coeffs[j];
    }
    if (rows_[i].rel == Relation::LessEq) row[slack_col[i]] = 1;
    if (rows_[i].rel == Relation::GreaterEq) row[slack_col[i]] = -1;
    row[ncol] = rows_[i].rhs;
    if (sgn(row[ncol]) < 0)
      for (auto& x : row) x = -x;
    row[first_art + i] = 1;
    tab.t.push_back(std::move(row));
    tab.basis.push_back(first_art + i);
  }

  Vec phase1 = zeros(ncol);
  for (std::size_t j = first_art; j < ncol; ++j) phase1[j] = -1;
  std::vector<bool> all(ncol, true);
  tab.optimize(phase1, all);
  LpResult res;
  if (sgn(tab.value(phase1)) < 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  // drive artificials out of the basis, dropping redundant rows
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < first_art) {
      ++i;
      continue;
    }
    std::size_t c = first_art;
    for (std::size_t j = 0; j < first_art; ++j)
      if (sgn(tab.t[i][j]) != 0) {
        c = j;
        break;
      }
    if (c < first_art) {
      tab.pivot(i, c);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  Vec cost = zeros(ncol);
  for (std::size_t j = 0; j < num_vars_; ++j) {
    cost[pos_col[j]] = objective_[j];
    if (free_[j]) cost[neg_col[j]] = -objective_[j];
  }
  std::vector<bool> allowed(ncol, true);
  for (std::size_t j = first_art; j < ncol; ++j) allowed[j] = false;
  if (!tab.optimize(cost, allowed)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  Vec colval = zeros(ncol);
  for (std::size_t i = 0; i < tab.t.size(); ++i) colval[tab.basis[i]] = tab.t[i][ncol];
  res.x = zeros(num_vars_);
  for (std::size_t j = 0; j < num_vars_; ++j) {
    res.x[j] = colval[pos_col[j]];
    if (free_[j]) res.x[j] -= colval[neg_col[j]];
  }
  res.objective = dot(objective_, res.x);
  res.status = LpStatus::Optimal;
  return res;
}

}  // namespace gkz
