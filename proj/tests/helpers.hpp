// Test-only helpers: matrix builders and independent oracles (cofactor
// determinant, minor-based rank, exhaustive gf2 enumeration). The oracles
// share no code with the elimination engine they check.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "gjlin/bench.hpp"

namespace gjtest {

using namespace gjlin;

template <typename F>
matrix<F> make(const F& f, std::initializer_list<std::initializer_list<const char*>> rows) {
  matrix<F> out(f, rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* tok : row) out(i, j++) = f.parse(tok);
    ++i;
  }
  return out;
}

template <typename F>
vec<F> make_vec(const F& f, std::initializer_list<const char*> entries) {
  vec<F> out(f, entries.size());
  std::size_t i = 0;
  for (const char* tok : entries) out.entries[i++] = f.parse(tok);
  return out;
}

// Laplace expansion along the first row; exponential, for small matrices only.
template <typename F>
typename F::element cofactor_det(const matrix<F>& a) {
  const F& f = a.field();
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  auto acc = f.zero();
  for (std::size_t j = 0; j < n; ++j) {
    matrix<F> minor(f, n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    auto term = f.mul(a(0, j), cofactor_det(minor));
    acc = (j % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace detail

// Rank as the largest k admitting a k x k submatrix with nonzero determinant.
template <typename F>
std::size_t minor_rank(const matrix<F>& a) {
  const F& f = a.field();
  std::size_t max_k = std::min(a.rows(), a.cols());
  for (std::size_t k = max_k; k >= 1; --k) {
    std::vector<std::size_t> rows(k), cols(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i) cols[i] = i;
      do {
        matrix<F> sub(f, k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
        if (!f.is_zero(cofactor_det(sub))) return k;
      } while (detail::next_combination(cols, a.cols()));
    } while (detail::next_combination(rows, a.rows()));
  }
  return 0;
}

// The gf2 matrix whose row-major entries are the bits of `code`.
inline matrix<gf2_field> gf2_from_bits(std::size_t m, std::size_t n, std::uint64_t code) {
  matrix<gf2_field> out(gf2_field{}, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = static_cast<std::uint8_t>((code >> (i * n + j)) & 1);
  return out;
}

inline vec<gf2_field> gf2_vec_from_bits(std::size_t n, std::uint64_t code) {
  vec<gf2_field> out(gf2_field{}, n);
  for (std::size_t i = 0; i < n; ++i)
    out.entries[i] = static_cast<std::uint8_t>((code >> i) & 1);
  return out;
}

inline matrix<rational_field> random_rat(std::size_t m, std::size_t n, std::uint64_t seed) {
  return random_matrix(rational_field{}, m, n, seed);
}

inline matrix<gf2_field> random_gf2(std::size_t m, std::size_t n, std::uint64_t seed) {
  return random_matrix(gf2_field{}, m, n, seed);
}

} // namespace gjtest
