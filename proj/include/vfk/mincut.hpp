#pragma once

// Weighted undirected graphs on the superbase index set and global minimum
// cuts: Stoer-Wagner (deterministic), Karger-Stein (randomized recursive
// contraction) and exhaustive enumeration.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "vfk/lattice.hpp"
#include "vfk/rational.hpp"

namespace vfk {

struct Edge {
  std::size_t u;
  std::size_t v;
  Rational weight;
};

/// Undirected graph with strictly positive rational edge weights. Absent
/// pairs have weight 0; loops are never stored since they cannot affect a cut.
class WeightedGraph {
 public:
  /// Parallel edges are summed, loops and zero weights dropped. Throws
  /// InvalidArgument on negative weights or out-of-range endpoints, and
  /// ShapeMismatch when vertex_count < 2.
  static WeightedGraph from_edges(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  /// Weight of {u, v}; 0 when absent or u == v.
  Rational weight(std::size_t u, std::size_t v) const;
  const std::map<std::size_t, Rational>& neighbors(std::size_t u) const { return adjacency_[u]; }
  /// Sum of weights incident to u.
  Rational degree(std::size_t u) const;
  /// Edges with u < v, ordered by (u, v).
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /// Same graph with every weight multiplied by c > 0.
  WeightedGraph scaled(const Rational& c) const;

 private:
  explicit WeightedGraph(std::size_t n) : adjacency_(n) {}
  std::vector<std::map<std::size_t, Rational>> adjacency_;
};

/// A cut (C, V \ C). `side` is C, sorted, nonempty and proper.
struct Cut {
  std::vector<std::size_t> side;
  Rational weight;
};

/// Edge {i,j} of weight -q_ij for every i < j with q_ij < 0.
WeightedGraph graph_from_gram(const GramMatrix& g);

/// Weight of the edges crossing (C, V \ C). Duplicates in `side` are
/// ignored. Throws EmptySide when C is empty or all of V, InvalidArgument on
/// out-of-range indices.
Cut cut_weight(const WeightedGraph& gr, const std::vector<std::size_t>& side);

std::vector<std::size_t> complement_side(std::size_t vertex_count,
                                         const std::vector<std::size_t>& side);

/// Deterministic global minimum cut. Each phase starts at the lowest-index
/// active vertex and breaks key ties towards the lower index. Disconnected
/// graphs yield a zero-weight cut. The reported side is the smaller of the
/// two, or the one containing vertex 0 when both have equal size.
Cut stoer_wagner(const WeightedGraph& gr);

/// ceil(log2(|V|)^2) + 8.
std::size_t default_karger_trials(std::size_t vertex_count);

/// Best cut over `trials` independent recursive-contraction runs. Trial k
/// draws from Xoshiro256(stream_seed(seed, k)); ties keep the lowest trial
/// index. The side is reported as in stoer_wagner. Throws InvalidArgument
/// when trials == 0.
Cut karger_stein(const WeightedGraph& gr, std::uint64_t seed, std::size_t trials);

inline constexpr std::size_t kMaxBruteForceVertices = 24;

/// Exhaustive minimum over the 2^(|V|-1) - 1 cuts whose side contains vertex
/// 0. Ties go to the smaller side, then the lexicographically smaller sorted
/// side. Throws TooLarge above kMaxBruteForceVertices.
Cut brute_force_mincut(const WeightedGraph& gr);

}  // namespace vfk
