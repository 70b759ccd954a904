#pragma once

// Text format for superbases and Gram matrices:
//
//   # comment
//   superbase <count> <m>      or      gram <count>
//   <count rows of whitespace-separated rationals>
//
// Rationals are "p/q", "p" or finite decimals. '#' starts a comment
// anywhere on a line; blank lines are ignored.

#include <cstddef>
#include <string>
#include <string_view>

#include "vfk/lattice.hpp"
#include "vfk/rational.hpp"

namespace vfk {

enum class DocumentKind { Superbase, Gram };

struct InputDocument {
  DocumentKind kind = DocumentKind::Gram;
  std::size_t count = 0;
  /// Ambient dimension for superbases, equal to count for Gram matrices.
  std::size_t width = 0;
  RationalMatrix entries;
};

/// Throws ParseError (with line/column) on malformed text and ShapeError
/// when the rows disagree with the header.
InputDocument parse_input(std::string_view text);

std::string format_superbase(const Superbase& sb, std::string_view comment = {});
std::string format_gram(const GramMatrix& g, std::string_view comment = {});

}  // namespace vfk
