#pragma once

// Shortest nonzero vector of a lattice of Voronoi's first kind.
//
// With graph weights w_ij = -q_ij the cut weight of (C, V \ C) equals Q(u)
// for u the indicator of C, so a global minimum cut selects a subset I whose
// superbase sum is a shortest vector, with squared length the cut weight.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vfk/lattice.hpp"
#include "vfk/mincut.hpp"

namespace vfk {

struct StoerWagner {};
struct KargerStein {
  std::uint64_t seed = 0;
  /// nullopt selects default_karger_trials(n+1).
  std::optional<std::size_t> trials;
};
struct BruteForce {};

using Algorithm = std::variant<StoerWagner, KargerStein, BruteForce>;

/// "stoer-wagner", "karger" or "brute".
std::string algorithm_name(const Algorithm& algorithm);

struct ShortVectorResult {
  /// Sorted 0-based indices I, nonempty and proper.
  std::vector<std::size_t> subset;
  Rational squared_length;
  /// sum_{i in I} b_i, present when the caller supplied a superbase.
  std::optional<RationalVector> coordinates;
};

/// Minimizes Q over proper nonempty assignments. When `coords` is given it
/// must reproduce `g` exactly (GramCoordsMismatch otherwise). Throws
/// ZeroWeightCut if the minimum cut weighs zero and TooLarge for BruteForce
/// above kMaxBruteForceVertices.
ShortVectorResult short_vector(const GramMatrix& g, const Algorithm& algorithm = StoerWagner{},
                               const Superbase* coords = nullptr);

/// Exhaustive search over all 2^(n+1) - 2 subsets. Ties: smaller squared
/// length, then fewer elements, then lexicographically smaller subset.
ShortVectorResult brute_force_short_vector(const GramMatrix& g);

struct Candidate {
  std::vector<std::size_t> subset;
  /// Present when enumerated from a superbase.
  std::optional<RationalVector> coordinates;
  Rational squared_length;
};

/// Every sum over a nonempty proper subset, ascending by squared length with
/// the brute-force tie-break. Throws TooLarge above kMaxBruteForceVertices.
std::vector<Candidate> candidate_vectors(const Superbase& sb);

/// Gram-only variant: subsets and squared lengths, no coordinates.
std::vector<Candidate> candidate_vectors(const GramMatrix& g);

struct ReductionCheck {
  Rational quadratic_value;
  Rational cut_value;
};

/// Q(u) from the Selling parameters and W(C, V \ C) from the graph, with
/// C = {i : u_i = 1}. Throws ImproperAssignment or LengthMismatch.
ReductionCheck verify_reduction(const GramMatrix& g, const BinaryAssignment& u);

}  // namespace vfk
