#include "vfk/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "vfk/error.hpp"

namespace vfk {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void parse_fail(ErrorCode code, const std::string& what, std::size_t line,
                             std::size_t column) {
  ErrorDetail d;
  d.line = line;
  d.column = column;
  throw Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what,
              std::move(d));
}

std::size_t parse_count(const Token& t, std::size_t line) {
  std::size_t v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    parse_fail(ErrorCode::ParseError, "expected a nonnegative integer, got '" + std::string(t.text) + "'",
               line, t.column);
  }
  return v;
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  InputDocument doc;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    last_line = line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      const auto& kw = tokens[0].text;
      if (kw == "superbase") {
        if (tokens.size() != 3) {
          parse_fail(ErrorCode::ParseError, "header must be 'superbase <count> <m>'", line_no,
                     tokens[0].column);
        }
        doc.kind = DocumentKind::Superbase;
        doc.count = parse_count(tokens[1], line_no);
        doc.width = parse_count(tokens[2], line_no);
      } else if (kw == "gram") {
        if (tokens.size() != 2) {
          parse_fail(ErrorCode::ParseError, "header must be 'gram <count>'", line_no, tokens[0].column);
        }
        doc.kind = DocumentKind::Gram;
        doc.count = parse_count(tokens[1], line_no);
        doc.width = doc.count;
      } else {
        parse_fail(ErrorCode::ParseError,
                   "expected header 'superbase' or 'gram', got '" + std::string(kw) + "'", line_no,
                   tokens[0].column);
      }
      have_header = true;
      continue;
    }

    if (doc.entries.size() == doc.count) {
      parse_fail(ErrorCode::ShapeError, "more than " + std::to_string(doc.count) + " rows", line_no,
                 tokens[0].column);
    }
    if (tokens.size() != doc.width) {
      parse_fail(ErrorCode::ShapeError,
                 "row has " + std::to_string(tokens.size()) + " entries, expected " +
                     std::to_string(doc.width),
                 line_no, tokens[0].column);
    }
    RationalVector row;
    row.reserve(tokens.size());
    for (const auto& t : tokens) {
      Rational r;
      if (!try_parse_rational(t.text, r)) {
        parse_fail(ErrorCode::ParseError, "not a rational: '" + std::string(t.text) + "'", line_no,
                   t.column);
      }
      row.push_back(std::move(r));
    }
    doc.entries.push_back(std::move(row));
  }

  if (!have_header) parse_fail(ErrorCode::ParseError, "missing header", last_line, 1);
  if (doc.entries.size() != doc.count) {
    parse_fail(ErrorCode::ShapeError,
               "expected " + std::to_string(doc.count) + " rows, found " +
                   std::to_string(doc.entries.size()),
               last_line, 1);
  }
  return doc;
}

namespace {

void write_rows(std::ostringstream& out, const RationalMatrix& rows) {
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << to_string(row[j]);
    }
    out << '\n';
  }
}

void write_comment(std::ostringstream& out, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
}

}  // namespace

std::string format_superbase(const Superbase& sb, std::string_view comment) {
  std::ostringstream out;
  write_comment(out, comment);
  out << "superbase " << sb.size() << ' ' << sb.ambient_dimension() << '\n';
  write_rows(out, sb.vectors());
  return out.str();
}

std::string format_gram(const GramMatrix& g, std::string_view comment) {
  std::ostringstream out;
  write_comment(out, comment);
  out << "gram " << g.size() << '\n';
  write_rows(out, g.entries());
  return out.str();
}

}  // namespace vfk
