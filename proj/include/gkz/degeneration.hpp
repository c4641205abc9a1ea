#pragma once

#include "gkz/quasival.hpp"

namespace gkz {

/// Multiplication table on basis classes: pair (u, w) with u <= w maps to
/// the class of u + w, or to nullopt when the product vanishes.
using ProductTable = std::map<std::pair<GradedPoint, GradedPoint>, std::optional<GradedPoint>>;

/// Membership of semigroup elements in the cones K(Q_j) and the monoids S^1_{Q_j}.
class CellMembership {
 public:
  CellMembership(const PointConfig& cfg, const MarkedSubdivision& s);

  std::size_t cell_count() const { return cones_.size(); }
  /// u in S_{Q_j} = S cap K(Q_j) (u assumed in S).
  bool in_SQ(const GradedPoint& u, std::size_t j) const;
  /// u in the monoid generated by (1, chi), chi in A_{Q_j}.
  bool in_SQ1(const GradedPoint& u, std::size_t j) const;
  bool in_some_SQ1(const GradedPoint& u) const;

 private:
  const PointConfig* cfg_;
  MarkedSubdivision sub_;
  std::vector<PolyCone> cones_;
};

struct GrVPresentation {
  std::vector<GradedPoint> basis;
  ProductTable table;
  /// sum of (1, chi) over chi in A cap Q; the class f_Q generates the prime annihilator.
  std::vector<GradedPoint> prime_witnesses;
  bool annihilators_verified = false;  // f_Q f_w = 0 exactly for w outside S_Q
  bool irredundant = false;            // f_Q' lies in every I(Q), Q != Q', and not in I(Q')
  bool intersection_zero = false;      // every basis element lies in some S_Q
  bool nilpotent_free = false;
  bool equidimensional = false;
};

/// gr_V of K[S] up to degree D: f_u f_w = f_{u+w} when u, w share a cell, else 0.
GrVPresentation gr_v_present(const PointConfig& cfg, const MarkedSubdivision& s, long max_deg);

/// The same table read off V: nonzero exactly when g(u + w) = g(u) + g(w).
ProductTable gr_v_table_from_valuation(const QuasiValuation& qv, long max_deg);

struct NilpotentWitness {
  GradedPoint u;
  long exponent;     // smallest l with l u in some S^1_Q
  std::size_t cell;  // such a cell
};

struct GrNuPresentation {
  std::vector<GradedPoint> basis;  // classes surviving in the reduced algebra
  ProductTable table;
  std::vector<NilpotentWitness> nilpotents;
};

/// Reduced gr_nu up to degree D: f_u f_w = f_{u+w} when u, w lie in a common S^1_Q.
GrNuPresentation gr_nu_reduced(const PointConfig& cfg, const MarkedSubdivision& s, long max_deg);

/// The reduced table read off nu: nonzero when nu is additive on (u, w) and delta(f_{u+w}) = 0.
ProductTable gr_nu_table_from_valuation(const QuasiValuation& qv, long max_deg);

/// Checks nu(f_{l u}) = l V(f_u) > l nu(f_u) for a nilpotent witness.
bool verify_nilpotent(const QuasiValuation& qv, const NilpotentWitness& w);

struct StanleyReisner {
  IndexSet variables;              // marked points
  std::vector<IndexSet> nonfaces;  // minimal non-faces
  IndexSet nilpotent;              // unmarked points
};

/// Throws DomainError unless t is a triangulation.
StanleyReisner stanley_reisner(const PointConfig& cfg, const MarkedSubdivision& t);

/// Product rule of K[x]/I_SR on the monomials attached to u, w in the union of the S^1_Q.
bool sr_product_nonzero(const PointConfig& cfg, const MarkedSubdivision& t, const StanleyReisner& sr,
                        const GradedPoint& u, const GradedPoint& w);

struct KhovanskiiReport {
  /// per cell: elements of S_Q of degree >= 2 that are not products of lower classes
  std::vector<std::vector<GradedPoint>> extra_generators;
  bool degree_one_suffices = true;
  long max_degree = 0;
};

KhovanskiiReport khovanskii_report(const PointConfig& cfg, const MarkedSubdivision& s, long max_deg);

}  // namespace gkz
