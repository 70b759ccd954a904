#include "vfk/mincut.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <set>
#include <string>

#include "subset_enum.hpp"
#include "vfk/error.hpp"
#include "vfk/rng.hpp"

namespace vfk {

WeightedGraph WeightedGraph::from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count < 2) throw Error(ErrorCode::ShapeMismatch, "a graph needs at least 2 vertices");
  WeightedGraph g(vertex_count);
  for (const auto& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (e.weight < 0) {
      throw Error(ErrorCode::InvalidArgument, "negative edge weight " + to_string(e.weight),
                  {{e.u, e.v}, e.weight});
    }
    if (e.u == e.v || e.weight == 0) continue;
    g.adjacency_[e.u][e.v] += e.weight;
    g.adjacency_[e.v][e.u] += e.weight;
  }
  return g;
}

Rational WeightedGraph::weight(std::size_t u, std::size_t v) const {
  const auto& nbrs = adjacency_.at(u);
  auto it = nbrs.find(v);
  return it == nbrs.end() ? Rational(0) : it->second;
}

Rational WeightedGraph::degree(std::size_t u) const {
  Rational d = 0;
  for (const auto& [v, w] : adjacency_.at(u)) d += w;
  return d;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (const auto& [v, w] : adjacency_[u]) {
      if (u < v) out.push_back({u, v, w});
    }
  }
  return out;
}

std::size_t WeightedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency_) twice += nbrs.size();
  return twice / 2;
}

WeightedGraph WeightedGraph::scaled(const Rational& c) const {
  if (c <= 0) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  WeightedGraph g = *this;
  for (auto& nbrs : g.adjacency_) {
    for (auto& [v, w] : nbrs) w *= c;
  }
  return g;
}

WeightedGraph graph_from_gram(const GramMatrix& g) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g(i, j) < 0) edges.push_back({i, j, -g(i, j)});
    }
  }
  return WeightedGraph::from_edges(g.size(), edges);
}

std::vector<std::size_t> complement_side(std::size_t vertex_count,
                                         const std::vector<std::size_t>& side) {
  std::vector<bool> in(vertex_count, false);
  for (std::size_t v : side) in.at(v) = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

namespace {

// Reports the smaller side of a cut; on equal sizes, the side holding vertex 0.
std::vector<std::size_t> canonical_side(std::size_t vertex_count, std::vector<std::size_t> side) {
  std::sort(side.begin(), side.end());
  const std::size_t other = vertex_count - side.size();
  const bool flip = side.size() > other || (side.size() == other && side.front() != 0);
  return flip ? complement_side(vertex_count, side) : side;
}

}  // namespace

Cut cut_weight(const WeightedGraph& gr, const std::vector<std::size_t>& side) {
  const std::size_t n = gr.vertex_count();
  std::vector<bool> in(n, false);
  for (std::size_t v : side) {
    if (v >= n) throw Error(ErrorCode::InvalidArgument, "vertex index out of range", {{v}, {}});
    in[v] = true;
  }
  Cut cut;
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v]) cut.side.push_back(v);
  }
  if (cut.side.empty() || cut.side.size() == n) {
    throw Error(ErrorCode::EmptySide, "both sides of a cut must be nonempty");
  }
  cut.weight = 0;
  for (std::size_t u : cut.side) {
    for (const auto& [v, w] : gr.neighbors(u)) {
      if (!in[v]) cut.weight += w;
    }
  }
  return cut;
}

// ---------------------------------------------------------------------------
// Stoer-Wagner

namespace {

struct HeapEntry {
  Rational key;
  std::size_t vertex;
  std::uint64_t version;
};

// Max-heap on key; equal keys prefer the lower vertex index.
struct HeapOrder {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    if (a.key != b.key) return a.key < b.key;
    return a.vertex > b.vertex;
  }
};

}  // namespace

Cut stoer_wagner(const WeightedGraph& gr) {
  const std::size_t n = gr.vertex_count();
  std::vector<std::map<std::size_t, Rational>> adj(n);
  for (std::size_t v = 0; v < n; ++v) adj[v] = gr.neighbors(v);

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t v = 0; v < n; ++v) groups[v] = {v};
  std::set<std::size_t> active;
  for (std::size_t v = 0; v < n; ++v) active.insert(v);

  std::optional<Rational> best_weight;
  std::vector<std::size_t> best_side;

  std::vector<Rational> key(n);
  std::vector<std::uint64_t> version(n, 0);
  std::vector<bool> visited(n, false);

  while (active.size() > 1) {
    // Maximum adjacency search over the contracted graph.
    std::set<std::size_t> unvisited = active;
    for (std::size_t v : active) {
      key[v] = 0;
      visited[v] = false;
    }
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapOrder> heap;
    std::size_t prev = n;
    std::size_t last = n;
    Rational last_key;

    while (!unvisited.empty()) {
      std::size_t v = n;
      while (!heap.empty()) {
        const HeapEntry& top = heap.top();
        if (!visited[top.vertex] && top.version == version[top.vertex]) {
          v = top.vertex;
          heap.pop();
          break;
        }
        heap.pop();
      }
      // Every vertex still holding key 0 has no heap entry.
      if (v == n) v = *unvisited.begin();

      visited[v] = true;
      unvisited.erase(v);
      prev = last;
      last = v;
      last_key = key[v];
      for (const auto& [x, w] : adj[v]) {
        if (visited[x]) continue;
        key[x] += w;
        heap.push({key[x], x, ++version[x]});
      }
    }

    if (!best_weight || last_key < *best_weight) {
      best_weight = last_key;
      best_side = groups[last];
    }

    // Merge `last` into `prev`.
    for (const auto& [x, w] : adj[last]) {
      adj[x].erase(last);
      if (x == prev) continue;
      adj[prev][x] += w;
      adj[x][prev] += w;
    }
    adj[prev].erase(last);
    adj[last].clear();
    groups[prev].insert(groups[prev].end(), groups[last].begin(), groups[last].end());
    groups[last].clear();
    active.erase(last);
  }

  return Cut{canonical_side(n, std::move(best_side)), *best_weight};
}

// ---------------------------------------------------------------------------
// Karger-Stein

std::size_t default_karger_trials(std::size_t vertex_count) {
  const double l = std::log2(static_cast<double>(vertex_count));
  return static_cast<std::size_t>(std::ceil(l * l)) + 8;
}

namespace {

constexpr std::size_t kKargerBaseSize = 6;

// Contracted multigraph held as a dense symmetric weight matrix over
// super-vertices; members[i] lists the original vertices merged into i.
struct DenseGraph {
  std::vector<RationalVector> w;
  std::vector<Rational> degree;
  std::vector<std::vector<std::size_t>> members;

  std::size_t size() const { return w.size(); }
};

DenseGraph to_dense(const WeightedGraph& gr) {
  const std::size_t n = gr.vertex_count();
  DenseGraph d;
  d.w.assign(n, RationalVector(n, Rational(0)));
  d.degree.assign(n, Rational(0));
  d.members.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    d.members[u] = {u};
    for (const auto& [v, w] : gr.neighbors(u)) {
      d.w[u][v] = w;
      d.degree[u] += w;
    }
  }
  return d;
}

// Index i with probability weights[i] / sum. Falls back to the last positive
// entry when floating-point round-off overshoots.
std::size_t sample_index(const std::vector<double>& weights, Xoshiro256& rng) {
  double total = 0;
  for (double x : weights) total += x;
  const double r = uniform_unit(rng) * total;
  double acc = 0;
  std::size_t last_positive = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) continue;
    acc += weights[i];
    last_positive = i;
    if (r < acc) return i;
  }
  return last_positive;
}

void merge_into(DenseGraph& g, std::size_t keep, std::size_t drop) {
  const std::size_t k = g.size();
  g.degree[keep] += g.degree[drop];
  g.degree[keep] -= 2 * g.w[keep][drop];
  for (std::size_t x = 0; x < k; ++x) {
    if (x == keep || x == drop) continue;
    g.w[keep][x] += g.w[drop][x];
    g.w[x][keep] = g.w[keep][x];
  }
  g.w[keep][keep] = 0;
  g.members[keep].insert(g.members[keep].end(), g.members[drop].begin(), g.members[drop].end());

  // Move the last super-vertex into slot `drop`.
  const std::size_t tail = k - 1;
  if (drop != tail) {
    g.w[drop] = std::move(g.w[tail]);
    for (std::size_t x = 0; x < tail; ++x) g.w[x][drop] = g.w[x][tail];
    g.degree[drop] = g.degree[tail];
    g.members[drop] = std::move(g.members[tail]);
  }
  g.w.pop_back();
  for (auto& row : g.w) row.pop_back();
  g.degree.pop_back();
  g.members.pop_back();
}

DenseGraph contract(DenseGraph g, std::size_t target, Xoshiro256& rng) {
  while (g.size() > target) {
    const std::size_t k = g.size();
    std::vector<double> deg(k);
    bool any_positive = false;
    for (std::size_t i = 0; i < k; ++i) {
      deg[i] = g.degree[i].get_d();
      any_positive = any_positive || g.degree[i] > 0;
    }
    std::size_t u, v;
    if (!any_positive) {
      // Every cut of the remaining graph weighs 0; merge an arbitrary pair.
      u = static_cast<std::size_t>(uniform_below(rng, k));
      v = static_cast<std::size_t>(uniform_below(rng, k - 1));
      if (v >= u) ++v;
    } else {
      u = sample_index(deg, rng);
      std::vector<double> row(k);
      for (std::size_t x = 0; x < k; ++x) row[x] = (x == u) ? 0.0 : g.w[u][x].get_d();
      v = sample_index(row, rng);
      if (v == k || v == u) {
        // Degree positive but all neighbours rounded to zero in double.
        for (std::size_t x = 0; x < k; ++x) {
          if (x != u && g.w[u][x] > 0) {
            v = x;
            break;
          }
        }
      }
    }
    if (u > v) std::swap(u, v);
    merge_into(g, u, v);
  }
  return g;
}

Cut dense_brute_force(const DenseGraph& g) {
  const std::size_t k = g.size();
  std::optional<Rational> best;
  std::uint32_t best_mask = 0;
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  for (std::uint32_t mask = 1; mask < full; mask += 2) {  // contains super-vertex 0
    Rational w = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1U)) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (!(mask >> j & 1U)) w += g.w[i][j];
      }
    }
    if (!best || w < *best) {
      best = w;
      best_mask = mask;
    }
  }
  Cut cut;
  cut.weight = *best;
  for (std::size_t i = 0; i < k; ++i) {
    if (best_mask >> i & 1U) {
      cut.side.insert(cut.side.end(), g.members[i].begin(), g.members[i].end());
    }
  }
  std::sort(cut.side.begin(), cut.side.end());
  return cut;
}

Cut recursive_contraction(const DenseGraph& g, Xoshiro256& rng) {
  const std::size_t k = g.size();
  if (k <= kKargerBaseSize) return dense_brute_force(g);
  const auto target =
      static_cast<std::size_t>(std::ceil(1.0 + static_cast<double>(k) / std::sqrt(2.0)));
  Cut a = recursive_contraction(contract(g, target, rng), rng);
  Cut b = recursive_contraction(contract(g, target, rng), rng);
  return b.weight < a.weight ? b : a;
}

}  // namespace

Cut karger_stein(const WeightedGraph& gr, std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trial count must be positive");
  const DenseGraph dense = to_dense(gr);
  std::optional<Cut> best;
  for (std::size_t t = 0; t < trials; ++t) {
    Xoshiro256 rng(stream_seed(seed, t));
    Cut c = recursive_contraction(dense, rng);
    if (!best || c.weight < best->weight) best = std::move(c);
  }
  best->side = canonical_side(gr.vertex_count(), std::move(best->side));
  return *best;
}

// ---------------------------------------------------------------------------

Cut brute_force_mincut(const WeightedGraph& gr) {
  const std::size_t n = gr.vertex_count();
  if (n > kMaxBruteForceVertices) {
    throw Error(ErrorCode::TooLarge, "exhaustive min-cut limited to " +
                                         std::to_string(kMaxBruteForceVertices) +
                                         " vertices, got " + std::to_string(n));
  }
  // Cut weight of S is the Laplacian quadratic form of its indicator.
  RationalMatrix laplacian(n, RationalVector(n, Rational(0)));
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto& [v, w] : gr.neighbors(u)) {
      laplacian[u][v] = -w;
      laplacian[u][u] += w;
    }
  }
  const auto best = detail::minimize_subset_value(laplacian, /*pin_first=*/true);
  return Cut{detail::mask_to_indices(best.mask), best.value};
}

}  // namespace vfk
