#pragma once

// Obtuse superbases, their Selling parameters and the binary quadratic form
//
//   Q(u) = || sum_i u_i b_i ||^2 = sum_i sum_j q_ij u_i u_j,   u in {0,1}^(n+1).
//
// Indices are 0-based throughout the library; user-facing output is 1-based.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vfk/rational.hpp"

namespace vfk {

class GramMatrix;
class Superbase;
GramMatrix selling_parameters(const Superbase& sb);

/// n+1 vectors b_0..b_n of ambient dimension m that sum to zero, have
/// pairwise nonpositive inner products, and whose first n are independent.
/// Only obtainable through validate_superbase.
class Superbase {
 public:
  const RationalMatrix& vectors() const noexcept { return vectors_; }
  const RationalVector& operator[](std::size_t i) const { return vectors_[i]; }
  /// Number of vectors, n+1.
  std::size_t size() const noexcept { return vectors_.size(); }
  /// Lattice dimension n.
  std::size_t dimension() const noexcept { return vectors_.size() - 1; }
  /// Ambient dimension m.
  std::size_t ambient_dimension() const noexcept { return vectors_.front().size(); }

  /// Sum of the vectors selected by `subset` (0-based indices).
  RationalVector subset_sum(const std::vector<std::size_t>& subset) const;

  friend bool operator==(const Superbase& a, const Superbase& b) {
    return a.vectors_ == b.vectors_;
  }

 private:
  friend Superbase validate_superbase(RationalMatrix vectors);
  friend GramMatrix selling_parameters(const Superbase& sb);
  Superbase(RationalMatrix v, RationalMatrix gram)
      : vectors_(std::move(v)), gram_(std::move(gram)) {}
  RationalMatrix vectors_;
  // Pairwise inner products, computed once during validation.
  RationalMatrix gram_;
};

/// Symmetric (n+1)x(n+1) matrix of Selling parameters: obtuse, zero row
/// sums, positive semidefinite of rank n. Only obtainable through
/// validate_gram or selling_parameters.
class GramMatrix {
 public:
  const RationalMatrix& entries() const noexcept { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t dimension() const noexcept { return entries_.size() - 1; }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  friend GramMatrix validate_gram(RationalMatrix entries);
  friend GramMatrix selling_parameters(const Superbase& sb);
  explicit GramMatrix(RationalMatrix e) : entries_(std::move(e)) {}
  RationalMatrix entries_;
};

/// A {0,1} vector u of length n+1.
class BinaryAssignment {
 public:
  BinaryAssignment() = default;
  explicit BinaryAssignment(std::vector<std::uint8_t> bits);

  static BinaryAssignment from_subset(std::size_t length, const std::vector<std::size_t>& subset);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// At least one 1 and at least one 0.
  bool is_proper() const noexcept;
  BinaryAssignment complement() const;
  /// Sorted 0-based indices i with u_i = 1.
  std::vector<std::size_t> ones() const;

  friend bool operator==(const BinaryAssignment&, const BinaryAssignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Throws Error with ShapeMismatch, SumNotZero, ObtuseViolation or
/// RankDeficient (checked in that order).
Superbase validate_superbase(RationalMatrix vectors);

GramMatrix selling_parameters(const Superbase& sb);

/// Throws Error with ShapeMismatch, NotSymmetric, ObtuseViolation,
/// RowSumNotZero or WrongRank (checked in that order).
GramMatrix validate_gram(RationalMatrix entries);

/// sum_ij q_ij u_i u_j. Throws LengthMismatch when |u| != n+1.
Rational quadratic_form(const GramMatrix& g, const BinaryAssignment& u);

}  // namespace vfk
