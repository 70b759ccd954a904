#pragma once

// Gray-code enumeration of f(S) = sum_{i,j in S} M_ij over vertex subsets S,
// updated in O(|V|) per step. Rational entries are scaled to integers by
// their common denominator; int64 is used when every partial sum provably
// fits, GMP integers otherwise.

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "vfk/rational.hpp"

namespace vfk::detail {

using Mask = std::uint32_t;

inline std::vector<std::size_t> mask_to_indices(Mask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

/// Ordering used by every exhaustive search: smaller value, then fewer
/// elements, then lexicographically smaller sorted index list.
inline bool subset_precedes(Mask a, Mask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

template <class T>
struct IntegerProblem {
  std::vector<std::vector<T>> m;
};

template <class T, class Visit>
void gray_walk(const IntegerProblem<T>& p, bool pin_first, Visit&& visit) {
  const std::size_t n = p.m.size();
  const Mask full = (n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::vector<T> s(n, T(0));  // s[x] = sum_{j in S, j != x} m[x][j]
  T value = 0;
  Mask mask = 0;

  auto flip = [&](std::size_t v) {
    const Mask bit = Mask{1} << v;
    if (mask & bit) {
      value -= p.m[v][v];
      value -= 2 * s[v];
      mask &= ~bit;
      for (std::size_t x = 0; x < n; ++x) {
        if (x != v) s[x] -= p.m[x][v];
      }
    } else {
      value += p.m[v][v];
      value += 2 * s[v];
      mask |= bit;
      for (std::size_t x = 0; x < n; ++x) {
        if (x != v) s[x] += p.m[x][v];
      }
    }
  };

  std::size_t offset = 0;
  if (pin_first) {
    flip(0);
    offset = 1;
    if (mask != full) visit(mask, value);
  }
  const std::size_t free_bits = n - offset;
  const std::uint64_t steps = std::uint64_t{1} << free_bits;
  for (std::uint64_t k = 1; k < steps; ++k) {
    flip(offset + static_cast<std::size_t>(std::countr_zero(k)));
    if (mask != full) visit(mask, value);
  }
}

inline bool fits_int64(const std::vector<std::vector<Integer>>& m) {
  Integer total = 0;
  for (const auto& row : m) {
    for (const auto& x : row) total += abs(x);
  }
  // Each step touches value and s by at most 2 * total.
  return total < (Integer(1) << 60);
}

/// Calls visit(mask, exact_value) for every subset (proper, nonempty; with
/// vertex 0 when pin_first). exact_value is a Rational.
template <class Visit>
void for_each_subset_value(const RationalMatrix& m, bool pin_first, Visit&& visit) {
  const Integer scale = common_denominator(m);
  std::vector<std::vector<Integer>> big(m.size(), std::vector<Integer>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) big[i][j] = m[i][j].get_num() * (scale / m[i][j].get_den());
  }
  if (fits_int64(big)) {
    IntegerProblem<std::int64_t> p;
    p.m.assign(m.size(), std::vector<std::int64_t>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) p.m[i][j] = big[i][j].get_si();
    }
    gray_walk(p, pin_first, [&](Mask mask, std::int64_t v) {
      visit(mask, std::int64_t{v}, scale);
    });
  } else {
    IntegerProblem<Integer> p{std::move(big)};
    gray_walk(p, pin_first, [&](Mask mask, const Integer& v) { visit(mask, v, scale); });
  }
}

struct SubsetMinimum {
  Mask mask = 0;
  Rational value;
};

/// Minimum under subset_precedes tie-breaking.
inline SubsetMinimum minimize_subset_value(const RationalMatrix& m, bool pin_first) {
  bool have = false;
  Mask best_mask = 0;
  Integer best_big;
  std::int64_t best_small = 0;
  bool small = false;
  Integer scale_seen = 1;
  for_each_subset_value(m, pin_first, [&](Mask mask, const auto& v, const Integer& scale) {
    using V = std::decay_t<decltype(v)>;
    scale_seen = scale;
    if constexpr (std::is_same_v<V, std::int64_t>) {
      small = true;
      if (!have || v < best_small || (v == best_small && subset_precedes(mask, best_mask))) {
        have = true;
        best_small = v;
        best_mask = mask;
      }
    } else {
      if (!have || v < best_big || (v == best_big && subset_precedes(mask, best_mask))) {
        have = true;
        best_big = v;
        best_mask = mask;
      }
    }
  });
  SubsetMinimum out;
  out.mask = best_mask;
  Integer num = small ? Integer(static_cast<long>(best_small)) : best_big;
  out.value = make_rational(num, scale_seen);
  return out;
}

}  // namespace vfk::detail
