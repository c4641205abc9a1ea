#pragma once

#include "gkz/rational.hpp"

namespace gkz {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Relation { LessEq, Equal, GreaterEq };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective = 0;
  Vec x;
};

/// Exact rational LP, maximization, two-phase simplex with Bland's rule.
/// Variables are nonnegative unless marked free.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  void set_free(std::size_t var);
  void set_all_free();
  void add_constraint(Vec coeffs, Relation rel, Rat rhs);
  void maximize(Vec objective);

  LpResult solve() const;

 private:
  struct Row {
    Vec coeffs;
    Relation rel;
    Rat rhs;
  };
  std::size_t num_vars_;
  std::vector<bool> free_;
  std::vector<Row> rows_;
  Vec objective_;
};

}  // namespace gkz
