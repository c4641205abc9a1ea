#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gkz {

using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

/// Parses "p/q", "p" or "-p/q"; the result is canonical (q > 0, gcd 1).
Rat parse_rat(std::string_view text);

/// Canonical p/q.
Rat frac(long p, long q);

/// Inverse of parse_rat: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& q);
std::string to_string(const Vec& v);

inline int sign_of(const Rat& q) { return sgn(q); }

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rat& s);
Vec negate(const Vec& a);
bool is_zero(const Vec& a);

/// Scales a nonzero vector to coprime integers with the same direction.
Vec primitive(const Vec& v);

/// Total order on equal-length vectors, used to sort canonical lists.
bool vec_less(const Vec& a, const Vec& b);

Int lcm_of_denominators(const Vec& v);

}  // namespace gkz
