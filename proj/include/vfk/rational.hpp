#pragma once

// Exact rational scalars. All lattice and graph quantities are held as
// GMP rationals kept in canonical form (lowest terms, positive denominator).

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace vfk {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Builds num/den in lowest terms. Throws Error(InvalidArgument) on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p/q", "p" or a finite decimal such as "-0.25" into an exact value.
/// Returns false (leaving `out` untouched) when the token is malformed.
bool try_parse_rational(std::string_view token, Rational& out);

/// Throwing variant of try_parse_rational (Error with code ParseError).
Rational parse_rational(std::string_view token);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Least common multiple of all denominators in the matrix (1 for an empty matrix).
Integer common_denominator(const RationalMatrix& m);

/// Result of exact symmetric elimination of a square rational matrix.
struct SymmetricFactorInfo {
  std::size_t rank = 0;
  bool positive_semidefinite = true;
};

/// Exact rank and semidefiniteness of a symmetric rational matrix.
/// Semidefiniteness (and the rank of semidefinite input) comes from
/// symmetric elimination on positive diagonal pivots; the rank of an
/// indefinite matrix from fraction-free Bareiss elimination over the
/// integers after clearing denominators.
SymmetricFactorInfo symmetric_rank_psd(const RationalMatrix& m);

}  // namespace vfk
