#pragma once

#include "gkz/gkzfan.hpp"

#include <map>

namespace gkz {

/// Element (d, eta) of the graded semigroup S generated by (1, chi), chi in A.
struct GradedPoint {
  long d = 0;
  std::vector<long> eta;

  Vec as_vec() const;
  GradedPoint operator+(const GradedPoint& o) const;
  GradedPoint times(long k) const;
  friend bool operator==(const GradedPoint&, const GradedPoint&) = default;
  friend auto operator<=>(const GradedPoint&, const GradedPoint&) = default;
};

std::string to_string(const GradedPoint& u);

/// Degree-1 generator (1, chi_i).
GradedPoint generator(const PointConfig& cfg, Index i);

/// Finite linear combination of basis elements f_u; zero coefficients never stored.
using Expr = std::map<GradedPoint, Rat>;

Expr monomial(const GradedPoint& u, const Rat& coeff = 1);
Expr expr_add(const Expr& a, const Expr& b);
Expr expr_mul(const Expr& a, const Expr& b);
long max_degree(const Expr& f);

/// S_{<= D}, built by adding generators degree by degree.
std::vector<GradedPoint> semigroup_up_to(const PointConfig& cfg, long max_deg);
/// S_{<= D}, built by scanning lattice points of the cones over d P and testing representability.
std::vector<GradedPoint> semigroup_by_lattice_scan(const PointConfig& cfg, long max_deg);

/// Exponent vectors alpha in N^r with sum alpha = d and sum alpha_i chi_i = eta,
/// restricted to the indices in `allowed` (all when empty). `limit` > 0 stops early.
std::vector<std::vector<long>> rep_set(const PointConfig& cfg, const GradedPoint& u, const IndexSet& allowed = {},
                                       std::size_t limit = 0);

struct ValuationReport {
  LexValue value = LexValue::infinity();
  std::optional<GradedPoint> witness;         // support element attaining the minimum
  std::optional<std::vector<long>> alpha;     // representation attaining nu on the witness
  std::optional<std::size_t> cell;            // cell whose affine map attains V on the witness
};

/// Valuation data attached to (A, Psi): the subdivision, g_Psi and the degree bound.
class QuasiValuation {
 public:
  QuasiValuation(const PointConfig& cfg, const WeightMatrix& psi, long degree_bound = 12);

  const PointConfig& config() const { return cfg_; }
  const WeightMatrix& psi() const { return psi_; }
  const MarkedSubdivision& subdivision() const { return plm_.subdivision(); }
  const PiecewiseLinearMap& plm() const { return plm_; }
  long degree_bound() const { return degree_bound_; }

  /// g_Psi(u), homogeneous of degree one on K(P).
  LexVec g(const GradedPoint& u) const;
  /// nu(f_u) = max of Psi alpha over Rep_u.
  LexVec nu_basis(const GradedPoint& u, std::vector<long>* witness = nullptr) const;
  LexVec delta_basis(const GradedPoint& u) const;

  ValuationReport v_quasi(const Expr& f) const;
  /// V(f) evaluated only at the vertices of the Newton polytope of f.
  ValuationReport v_quasi_vertices(const Expr& f) const;
  ValuationReport nu_quasi(const Expr& f) const;
  LexValue delta(const Expr& f) const;

  bool in_SQ(const GradedPoint& u, std::size_t cell) const;
  bool in_SQ1(const GradedPoint& u, std::size_t cell) const;
  /// Cell indices j with u in S^1_{Q_j}.
  std::vector<std::size_t> SQ1_cells(const GradedPoint& u) const;

 private:
  PointConfig cfg_;
  WeightMatrix psi_;
  PiecewiseLinearMap plm_;
  long degree_bound_;
};

struct DeltaImage {
  std::set<LexVec> values;
  std::vector<std::set<LexVec>> per_cell;
  std::size_t elements = 0;
};

/// delta(f_u) over u in S_{<= D}; `descending` walks the semigroup in reverse.
DeltaImage delta_image(const QuasiValuation& qv, long max_deg, bool descending = false);

/// A valid stretch factor: l u lies in some S^1_Q for every u in S_Q.
Int stretch_factor(const PointConfig& cfg, const MarkedSubdivision& s);

struct PowerSeq {
  std::vector<LexVec> nu;          // nu(f^l), l = 1..L
  std::vector<LexVec> normalized;  // nu(f^l) / l
};

/// Throws DegreeBoundExceeded naming the first power beyond the bound.
PowerSeq power_seq(const QuasiValuation& qv, const Expr& f, long max_power);

struct Accumulation {
  bool resolved = false;   // an eventually periodic linear pattern was found in the window
  std::size_t period = 0;
  std::set<LexVec> points;
  LexVec liminf;
  std::string flag = "WINDOWED";
};

/// Accumulation points of nu(f^l)/l read off the window nu(f^1), ..., nu(f^L).
Accumulation windowed_accumulation(const std::vector<LexVec>& nu_values);

/// Unique strict minimiser of the leading nonzero component of V over supp f.
bool is_elementary(const QuasiValuation& qv, const Expr& f);

struct FullRankReport {
  bool full_rank = true;
  std::optional<std::pair<GradedPoint, GradedPoint>> collision;
};

/// Searches S_{<= D} for u != w with g(u) = g(w).
FullRankReport is_full_rank(const QuasiValuation& qv, long max_deg);

/// Sufficient criterion on a triangulation: the columns Psi(v), v in A_Q union A_Q',
/// are linearly independent for every pair of cells.
bool geometric_full_rank(const PointConfig& cfg, const WeightMatrix& psi, const MarkedSubdivision& s);

/// Psi with the homogenized coordinates (1, v) appended as least significant rows.
WeightMatrix stack(const WeightMatrix& psi, const PointConfig& cfg);

}  // namespace gkz
