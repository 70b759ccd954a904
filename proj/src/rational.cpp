#include "vfk/rational.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "vfk/error.hpp"

namespace vfk {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool try_parse_rational(std::string_view token, Rational& out) {
  if (token.empty()) return false;
  bool negative = false;
  std::string_view body = token;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Integer num;
  Integer den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view p = body.substr(0, slash);
    std::string_view q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) return false;
    num.set_str(std::string(p), 10);
    den.set_str(std::string(q), 10);
    if (den == 0) return false;
  } else if (auto dot_pos = body.find('.'); dot_pos != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot_pos);
    std::string_view frac = body.substr(dot_pos + 1);
    if (whole.empty() && frac.empty()) return false;
    if (!whole.empty() && !all_digits(whole)) return false;
    if (!frac.empty() && !all_digits(frac)) return false;
    std::string digits = std::string(whole) + std::string(frac);
    num.set_str(digits, 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(body)) return false;
    num.set_str(std::string(body), 10);
  }
  if (negative) num = -num;
  out = make_rational(num, den);
  return true;
}

Rational parse_rational(std::string_view token) {
  Rational r;
  if (!try_parse_rational(token, r)) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(token) + "'");
  }
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "dot product of vectors of different length");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Integer common_denominator(const RationalMatrix& m) {
  Integer l = 1;
  for (const auto& row : m) {
    for (const auto& x : row) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
  }
  return l;
}

namespace {

using IntegerMatrix = std::vector<std::vector<Integer>>;

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  const Integer l = common_denominator(m);
  IntegerMatrix a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    a[i].reserve(m[i].size());
    for (const auto& x : m[i]) {
      Integer v = x.get_num() * (l / x.get_den());
      a[i].push_back(std::move(v));
    }
  }
  return a;
}

// Bareiss elimination with full pivoting; returns the rank.
std::size_t bareiss_rank(IntegerMatrix a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::vector<std::size_t> col_order(cols);
  for (std::size_t j = 0; j < cols; ++j) col_order[j] = j;

  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows && pr == rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (a[i][col_order[j]] != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    std::swap(a[k], a[pr]);
    std::swap(col_order[k], col_order[pc]);
    const Integer& p = a[k][col_order[k]];
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Integer& x = a[i][col_order[j]];
        x = p * x - a[i][col_order[k]] * a[k][col_order[j]];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col_order[k]] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

// Symmetric elimination over the rationals, pivoting on the first positive
// diagonal entry. Only rows/columns with a nonzero entry in the pivot row
// are updated, so sparse (graph-Laplacian) matrices stay cheap. Returns the
// pivot count, or nullopt when the matrix is not positive semidefinite.
std::optional<std::size_t> psd_rank(RationalMatrix a) {
  const std::size_t n = a.size();
  std::vector<bool> active(n, true);
  std::vector<std::size_t> nz;
  std::size_t pivots = 0;
  for (;;) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (sgn(a[i][i]) < 0) return std::nullopt;
      if (sgn(a[i][i]) > 0 && pivot == n) pivot = i;
    }
    if (pivot == n) {
      // Remaining block has zero diagonal; PSD forces it to vanish.
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (active[j] && sgn(a[i][j]) != 0) return std::nullopt;
        }
      }
      return pivots;
    }
    nz.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (active[j] && j != pivot && sgn(a[pivot][j]) != 0) nz.push_back(j);
    }
    const Rational p = a[pivot][pivot];
    Rational f;
    for (std::size_t i : nz) {
      f = a[i][pivot] / p;
      for (std::size_t j : nz) a[i][j] -= f * a[pivot][j];
    }
    active[pivot] = false;
    ++pivots;
  }
}

}  // namespace

SymmetricFactorInfo symmetric_rank_psd(const RationalMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) {
      throw Error(ErrorCode::ShapeMismatch, "matrix is not square");
    }
  }
  SymmetricFactorInfo info;
  if (auto rank = psd_rank(m)) {
    info.rank = *rank;
  } else {
    info.positive_semidefinite = false;
    info.rank = bareiss_rank(clear_denominators(m));
  }
  return info;
}

}  // namespace vfk
