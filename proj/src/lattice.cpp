#include "vfk/lattice.hpp"

#include <algorithm>
#include <string>

#include "vfk/error.hpp"

namespace vfk {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Full Gram matrix, using each vector's nonzero support to skip zero terms.
RationalMatrix gram_of(const RationalMatrix& vectors) {
  const std::size_t count = vectors.size();
  std::vector<std::vector<std::size_t>> support(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < vectors[i].size(); ++k) {
      if (sgn(vectors[i][k]) != 0) support[i].push_back(k);
    }
  }
  RationalMatrix q(count, RationalVector(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) {
      const bool i_shorter = support[i].size() <= support[j].size();
      const auto& sup = i_shorter ? support[i] : support[j];
      const auto& other = i_shorter ? vectors[j] : vectors[i];
      const auto& self = i_shorter ? vectors[i] : vectors[j];
      Rational s = 0;
      for (std::size_t k : sup) {
        if (sgn(other[k]) != 0) s += self[k] * other[k];
      }
      q[i][j] = s;
      q[j][i] = std::move(s);
    }
  }
  return q;
}

}  // namespace

RationalVector Superbase::subset_sum(const std::vector<std::size_t>& subset) const {
  RationalVector out(ambient_dimension(), Rational(0));
  for (std::size_t i : subset) {
    if (i >= size()) throw Error(ErrorCode::InvalidArgument, "subset index out of range");
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += vectors_[i][k];
  }
  return out;
}

BinaryAssignment::BinaryAssignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw Error(ErrorCode::InvalidArgument, "assignment entries must be 0 or 1");
  }
}

BinaryAssignment BinaryAssignment::from_subset(std::size_t length,
                                               const std::vector<std::size_t>& subset) {
  std::vector<std::uint8_t> bits(length, 0);
  for (std::size_t i : subset) {
    if (i >= length) throw Error(ErrorCode::InvalidArgument, "subset index out of range");
    bits[i] = 1;
  }
  return BinaryAssignment(std::move(bits));
}

bool BinaryAssignment::is_proper() const noexcept {
  const auto ones_count = std::count(bits_.begin(), bits_.end(), std::uint8_t{1});
  return ones_count > 0 && static_cast<std::size_t>(ones_count) < bits_.size();
}

BinaryAssignment BinaryAssignment::complement() const {
  std::vector<std::uint8_t> c(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) c[i] = bits_[i] ? 0 : 1;
  return BinaryAssignment(std::move(c));
}

std::vector<std::size_t> BinaryAssignment::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

Superbase validate_superbase(RationalMatrix vectors) {
  if (vectors.size() < 2) {
    throw Error(ErrorCode::ShapeMismatch, "a superbase needs at least 2 vectors");
  }
  const std::size_t m = vectors.front().size();
  if (m == 0) throw Error(ErrorCode::ShapeMismatch, "vectors must have positive length");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != m) {
      throw Error(ErrorCode::ShapeMismatch,
                  "vector " + std::to_string(i + 1) + " has length " +
                      std::to_string(vectors[i].size()) + ", expected " + std::to_string(m),
                  {{i}, std::nullopt});
    }
  }

  for (std::size_t k = 0; k < m; ++k) {
    Rational s = 0;
    for (const auto& v : vectors) s += v[k];
    if (s != 0) {
      throw Error(ErrorCode::SumNotZero,
                  "component " + std::to_string(k + 1) + " sums to " + to_string(s), {{k}, s});
    }
  }

  const std::size_t count = vectors.size();
  RationalMatrix gram = gram_of(vectors);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const Rational& q = gram[i][j];
      if (q > 0) {
        throw Error(ErrorCode::ObtuseViolation,
                    "pair " + pair_label(i, j) + " has inner product " + to_string(q),
                    {{i, j}, q});
      }
    }
  }

  // Rank of b_0..b_{n-1} equals the rank of their Gram matrix.
  const std::size_t n = count - 1;
  RationalMatrix basis_gram(n);
  for (std::size_t i = 0; i < n; ++i) {
    basis_gram[i].assign(gram[i].begin(), gram[i].begin() + static_cast<std::ptrdiff_t>(n));
  }
  const auto info = symmetric_rank_psd(basis_gram);
  if (info.rank != n) {
    throw Error(ErrorCode::RankDeficient,
                "first " + std::to_string(n) + " vectors span a space of dimension " +
                    std::to_string(info.rank));
  }
  return Superbase(std::move(vectors), std::move(gram));
}

GramMatrix selling_parameters(const Superbase& sb) { return GramMatrix(sb.gram_); }

GramMatrix validate_gram(RationalMatrix entries) {
  const std::size_t count = entries.size();
  if (count < 2) throw Error(ErrorCode::ShapeMismatch, "Gram matrix side must be at least 2");
  for (const auto& row : entries) {
    if (row.size() != count) throw Error(ErrorCode::ShapeMismatch, "Gram matrix is not square");
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (entries[i][j] != entries[j][i]) {
        throw Error(ErrorCode::NotSymmetric, "entries " + pair_label(i, j) + " and " +
                                                 pair_label(j, i) + " differ",
                    {{i, j}, std::nullopt});
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (entries[i][j] > 0) {
        throw Error(ErrorCode::ObtuseViolation,
                    "entry " + pair_label(i, j) + " is " + to_string(entries[i][j]),
                    {{i, j}, entries[i][j]});
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    Rational s = 0;
    for (const auto& x : entries[i]) s += x;
    if (s != 0) {
      throw Error(ErrorCode::RowSumNotZero,
                  "row " + std::to_string(i + 1) + " sums to " + to_string(s), {{i}, s});
    }
  }
  const auto info = symmetric_rank_psd(entries);
  if (!info.positive_semidefinite) {
    throw Error(ErrorCode::WrongRank, "matrix is not positive semidefinite");
  }
  if (info.rank != count - 1) {
    throw Error(ErrorCode::WrongRank, "rank is " + std::to_string(info.rank) + ", expected " +
                                          std::to_string(count - 1));
  }
  return GramMatrix(std::move(entries));
}

Rational quadratic_form(const GramMatrix& g, const BinaryAssignment& u) {
  if (u.size() != g.size()) {
    throw Error(ErrorCode::LengthMismatch, "assignment has length " + std::to_string(u.size()) +
                                               ", expected " + std::to_string(g.size()));
  }
  const auto idx = u.ones();
  Rational s = 0;
  for (std::size_t i : idx) {
    for (std::size_t j : idx) s += g(i, j);
  }
  return s;
}

}  // namespace vfk
