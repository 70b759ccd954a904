#pragma once

// Example superbases and random Selling matrices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "vfk/lattice.hpp"

namespace vfk {

/// Cyclic shifts of (1, -1, 0, ..., 0) in dimension n+1: the root lattice A_n.
Superbase gen_an(std::size_t n);

/// Cyclic shifts of (n, -1, ..., -1) / (n+1): the dual lattice A_n*.
Superbase gen_anstar(std::size_t n);

/// b_i = e_i for i < n and b_n = -(1, ..., 1): a superbase of Z^n.
Superbase gen_zn(std::size_t n);

/// The 3-dimensional superbase (1,-1/2,0), (-1/2,1,0), (0,0,1), (-1/2,-1/2,-1),
/// whose shortest vector b_1 + b_2 is not a superbase vector.
Superbase gen_paper_example();

struct RandomGramConfig {
  /// Off-diagonal magnitudes lie in (0, qmax].
  std::uint64_t qmax = 4;
  /// Denominators are drawn from 1..max_denominator.
  std::uint64_t max_denominator = 8;
};

/// Random Selling matrix of size n+1. A random spanning tree keeps the
/// support connected; every other pair is nonzero with probability
/// `density`. Diagonals make each row sum to zero. Deterministic in
/// (n, seed, density, config). Throws InvalidArgument unless n >= 1 and
/// 0 < density <= 1.
GramMatrix gen_random_gram(std::size_t n, std::uint64_t seed, const Rational& density = Rational(1, 2),
                           const RandomGramConfig& config = {});

enum class Family { An, AnStar, Zn, PaperExample, RandomGram };

/// Accepts "an", "anstar", "zn", "paper_example", "random_gram".
std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family family);

struct InstanceSpec {
  Family family = Family::An;
  std::size_t n = 1;
  std::optional<std::uint64_t> seed;
  std::optional<Rational> density;
};

/// Exactly one of the two is set: a superbase for coordinate families, a
/// Gram matrix for random_gram.
struct Instance {
  std::optional<Superbase> superbase;
  std::optional<GramMatrix> gram;

  GramMatrix selling() const;
};

/// Throws InvalidArgument when the InstanceSpec breaks its invariants (n >= 1,
/// paper_example needs n = 3, random_gram needs a seed).
Instance generate(const InstanceSpec& spec);

}  // namespace vfk
