#pragma once

#include "gkz/linalg.hpp"

namespace gkz {

/// Generators of a polyhedral cone, split into a lineality basis and the
/// extreme rays of the pointed part (taken inside the orthogonal complement
/// of the lineality space). Both lists are canonical.
struct ConeGenerators {
  Matrix lineality;
  Matrix rays;
};

/// Double description: generators of {x in Q^dim : a . x <= 0 for all rows a}.
ConeGenerators cone_from_inequalities(std::size_t dim, const Matrix& rows);

}  // namespace gkz
