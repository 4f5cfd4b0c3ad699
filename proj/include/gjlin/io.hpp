#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gjlin/solver.hpp"

namespace gjlin {

namespace detail {

struct matrix_text {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::string>> tokens; // rows x cols
};

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Shared lexical pass: header "m n", then m data lines of n tokens each.
// '#' lines are comments; blank lines are skipped.
inline matrix_text scan_matrix_text(const std::string& text) {
  matrix_text out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t data_rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 2)
        throw error(errc::parse, "line " + std::to_string(line_no) +
                                     ": expected header 'm n', got " +
                                     std::to_string(tokens.size()) + " tokens");
      auto all_digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
      };
      if (!all_digits(tokens[0]) || !all_digits(tokens[1]))
        throw error(errc::parse, "line " + std::to_string(line_no) + ": malformed header '" + line + "'");
      out.rows = std::stoull(tokens[0]);
      out.cols = std::stoull(tokens[1]);
      if (out.rows == 0 || out.cols == 0)
        throw error(errc::parse, "line " + std::to_string(line_no) + ": dimensions must be >= 1");
      have_header = true;
      continue;
    }
    ++data_rows;
    if (data_rows > out.rows)
      throw error(errc::parse, "line " + std::to_string(line_no) + ": more than " +
                                   std::to_string(out.rows) + " data rows");
    if (tokens.size() != out.cols)
      throw error(errc::parse, "row " + std::to_string(data_rows) + ": expected " +
                                   std::to_string(out.cols) + " tokens, got " +
                                   std::to_string(tokens.size()));
    out.tokens.push_back(std::move(tokens));
  }
  if (!have_header) throw error(errc::parse, "empty input: missing 'm n' header");
  if (out.tokens.size() != out.rows)
    throw error(errc::parse, "expected " + std::to_string(out.rows) + " data rows, got " +
                                 std::to_string(out.tokens.size()));
  return out;
}

} // namespace detail

template <typename F>
matrix<F> parse_matrix(const std::string& text, const F& f) {
  auto scanned = detail::scan_matrix_text(text);
  matrix<F> out(f, scanned.rows, scanned.cols);
  for (std::size_t i = 0; i < scanned.rows; ++i) {
    for (std::size_t j = 0; j < scanned.cols; ++j) {
      try {
        out(i, j) = f.parse(scanned.tokens[i][j]);
      } catch (const error& e) {
        throw error(e.code(), "row " + std::to_string(i + 1) + ", column " +
                                  std::to_string(j + 1) + ": " + e.what());
      }
    }
  }
  return out;
}

/// Vectors use the matrix format restricted to a single column (header "n 1").
template <typename F>
vec<F> parse_vector(const std::string& text, const F& f) {
  matrix<F> m = parse_matrix(text, f);
  if (m.cols() != 1)
    throw error(errc::parse, "vector file must have exactly one column, got " +
                                 std::to_string(m.cols()));
  vec<F> v(f, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v.entries[i] = m(i, 0);
  return v;
}

template <typename F>
std::string format_matrix(const matrix<F>& a) {
  const F& f = a.field();
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += f.format(a(i, j));
    }
    out += '\n';
  }
  return out;
}

template <typename F>
std::string format_vector_line(const vec<F>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v.field.format(v.entries[i]);
  }
  return out;
}

/// "BASIS k n" header followed by k vector lines.
template <typename F>
std::string format_basis(const basis<F>& b) {
  std::string out = "BASIS " + std::to_string(b.dim()) + " " + std::to_string(b.ambient_dim) + "\n";
  for (const auto& v : b.vectors) out += format_vector_line(v) + "\n";
  return out;
}

/// Status line; for consistent systems a PARTICULAR line with the solution
/// vector and the null-space basis block follow.
template <typename F>
std::string format_solution(const solution_set<F>& s) {
  std::string out = solve_status_name(s.status);
  out += '\n';
  if (s.status == solve_status::inconsistent) return out;
  out += "PARTICULAR\n";
  out += format_vector_line(*s.particular) + "\n";
  out += format_basis(*s.null_basis);
  return out;
}

} // namespace gjlin
