#pragma once

#include "gkz/dd.hpp"
#include "gkz/lexvec.hpp"

namespace gkz {

/// Polyhedral cone in Q^r held in both descriptions at once:
/// C = cone(generators) = {x : n . x <= 0 for every normal n}.
class PolyCone {
 public:
  static PolyCone from_generators(std::size_t dim, const Matrix& gens);
  static PolyCone from_normals(std::size_t dim, const Matrix& normals);
  static PolyCone zero(std::size_t dim) { return from_generators(dim, {}); }
  static PolyCone full(std::size_t dim) { return from_normals(dim, {}); }

  std::size_t ambient_dim() const { return dim_; }

  /// Canonical basis of the lineality space L_C = C cap -C.
  const Matrix& lineality() const { return primal_.lineality; }
  /// Extreme rays of the pointed part, inside the complement of L_C.
  const Matrix& rays() const { return primal_.rays; }
  /// rays() followed by +l, -l for each lineality basis vector.
  Matrix generators() const;

  /// Canonical basis of the orthogonal complement of span C.
  const Matrix& equations() const { return dual_.lineality; }
  const Matrix& facets() const { return dual_.rays; }
  /// facets() followed by +e, -e for each equation.
  Matrix normals() const;
  /// U_C, the span of the normals (the orthogonal complement of L_C).
  Matrix normal_space() const;

  std::size_t dim() const { return dim_ - equations().size(); }
  bool is_pointed() const { return lineality().empty(); }
  bool contains(const Vec& x) const;
  bool in_relative_interior(const Vec& x) const;
  bool is_subset_of(const PolyCone& other) const;

  friend bool operator==(const PolyCone& a, const PolyCone& b);

 private:
  std::size_t dim_ = 0;
  ConeGenerators primal_;
  ConeGenerators dual_;
};

/// H-description (facet normals and equations) of cone(gens).
Matrix dd_convert(std::size_t dim, const Matrix& gens);

PolyCone cone_sum(const PolyCone& a, const PolyCone& b);
PolyCone cone_intersection(const PolyCone& a, const PolyCone& b);

/// C + R u for u in C, from the normals tight at u.
PolyCone coface(const PolyCone& c, const Vec& u);
/// Same cone computed as cone(generators, u, -u).
PolyCone coface_by_sum(const PolyCone& c, const Vec& u);

struct Face {
  std::vector<std::size_t> rays;  // indices into rays() spanning the face with L_C
  Vec interior_point;             // sum of those rays
  PolyCone coface;
};

/// Every face of C together with its co-face, smallest face (L_C) first.
std::vector<Face> cofaces(const PolyCone& c);

/// mu-polyhedral cone of N x r matrices, stored through its co-polar cone.
struct MuCone {
  std::size_t N = 1;
  PolyCone copolar;

  std::size_t cols() const { return copolar.ambient_dim(); }
  Matrix generators() const { return copolar.generators(); }
  friend bool operator==(const MuCone&, const MuCone&) = default;
};

/// P(C) = {Psi : Psi v <= 0 lexicographically for all v in C}.
MuCone polar_N(const PolyCone& c, std::size_t n_rows);
PolyCone copolar(const MuCone& m);

struct MuMembership {
  bool member = false;
  std::vector<int> signs;           // lex sign of Psi v per canonical generator
  std::vector<std::size_t> tight;   // generators with Psi v = 0
};

MuMembership mu_member(const MuCone& m, const WeightMatrix& psi);
bool mu_contains(const MuCone& m, const WeightMatrix& psi);

/// N * codim L_C.
std::size_t mu_dim(const MuCone& m);
/// The euclidean closure as an ordinary cone in Q^{N r} (row-major coordinates).
PolyCone euclidean_closure(const MuCone& m);

/// P(C + R u) = P(C) cap H_u^0, for u in C.
MuCone mu_face(const MuCone& m, const Vec& u);
MuCone mu_intersection(const MuCone& a, const MuCone& b);

}  // namespace gkz
