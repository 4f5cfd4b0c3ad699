#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gjlin/error.hpp"
#include "gjlin/field.hpp"

namespace gjlin {

/// Dense row-major matrix over a field. Dimensions are fixed at construction
/// and must be at least 1x1. Public operations never modify their inputs.
template <typename F>
class matrix {
public:
  using field_type = F;
  using element = typename F::element;

  matrix(F f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0)
      throw error(errc::shape, "matrix: dimensions must be >= 1, got " +
                                   std::to_string(rows) + "x" + std::to_string(cols));
    data_.assign(rows * cols, field_.zero());
  }

  static matrix identity(F f, std::size_t n) {
    matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  static matrix zeros(F f, std::size_t rows, std::size_t cols) { return matrix(std::move(f), rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }

  element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const element& at(std::size_t i, std::size_t j) const {
    check_row(i);
    if (j >= cols_)
      throw error(errc::bounds, "matrix: column index " + std::to_string(j) + " out of range");
    return (*this)(i, j);
  }

  bool equals(const matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!field_.eq(data_[i], other.data_[i])) return false;
    return true;
  }

  void check_row(std::size_t i) const {
    if (i >= rows_)
      throw error(errc::bounds, "matrix: row index " + std::to_string(i) + " out of range");
  }

  // in-place row primitives; used by the elimination engine on working copies
  void swap_rows_raw(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void scale_row_raw(std::size_t i, const element& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = field_.mul((*this)(i, c), factor);
  }
  // row t += factor * row l
  void add_row_raw(std::size_t t, std::size_t l, const element& factor) {
    for (std::size_t c = 0; c < cols_; ++c)
      (*this)(t, c) = field_.add((*this)(t, c), field_.mul(factor, (*this)(l, c)));
  }

private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<element> data_;
};

/// Column vector with at least one entry.
template <typename F>
struct vec {
  using element = typename F::element;

  vec(F f, std::size_t len) : field(std::move(f)) {
    if (len == 0) throw error(errc::shape, "vec: length must be >= 1");
    entries.assign(len, field.zero());
  }

  std::size_t size() const { return entries.size(); }
  bool equals(const vec& other) const {
    if (entries.size() != other.entries.size()) return false;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (!field.eq(entries[i], other.entries[i])) return false;
    return true;
  }

  F field;
  std::vector<element> entries;
};

// --- elementary row operations ----------------------------------------------

template <typename F>
matrix<F> interchange_rows(const matrix<F>& a, std::size_t i, std::size_t j) {
  a.check_row(i);
  a.check_row(j);
  matrix<F> out = a;
  out.swap_rows_raw(i, j);
  return out;
}

template <typename F>
matrix<F> mult_row(const matrix<F>& a, std::size_t i, const typename F::element& c) {
  a.check_row(i);
  matrix<F> out = a;
  out.scale_row_raw(i, c);
  return out;
}

template <typename F>
matrix<F> row_add(const matrix<F>& a, std::size_t t, std::size_t l, const typename F::element& c) {
  a.check_row(t);
  a.check_row(l);
  if (t == l) throw error(errc::domain, "row_add: target and source row must differ");
  matrix<F> out = a;
  out.add_row_raw(t, l, c);
  return out;
}

// --- products, transpose ----------------------------------------------------

template <typename F>
matrix<F> transpose(const matrix<F>& a) {
  matrix<F> out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

template <typename F>
matrix<F> mat_mul(const matrix<F>& a, const matrix<F>& b) {
  if (a.cols() != b.rows())
    throw error(errc::shape, "mat_mul: inner dimensions disagree (" + std::to_string(a.cols()) +
                                 " vs " + std::to_string(b.rows()) + ")");
  const F& f = a.field();
  matrix<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

template <typename F>
vec<F> mat_vec_mul(const matrix<F>& a, const vec<F>& x) {
  if (a.cols() != x.size())
    throw error(errc::shape, "mat_vec_mul: dimension mismatch");
  const F& f = a.field();
  vec<F> out(f, a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto acc = f.zero();
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a(i, j), x.entries[j]));
    out.entries[i] = acc;
  }
  return out;
}

// --- function-backed reference representation -------------------------------

/// Matrix as a pure index function; the reference representation the dense
/// form refines.
template <typename F>
struct func_matrix {
  using element = typename F::element;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::function<element(std::size_t, std::size_t)> at;
};

template <typename F>
func_matrix<F> to_func(const matrix<F>& a) {
  return {a.rows(), a.cols(), [a](std::size_t i, std::size_t j) { return a(i, j); }};
}

template <typename F>
matrix<F> from_func(const F& f, const func_matrix<F>& fm) {
  matrix<F> out(f, fm.rows, fm.cols);
  for (std::size_t i = 0; i < fm.rows; ++i)
    for (std::size_t j = 0; j < fm.cols; ++j) out(i, j) = fm.at(i, j);
  return out;
}

template <typename F>
func_matrix<F> interchange_rows(const func_matrix<F>& a, std::size_t i, std::size_t j) {
  return {a.rows, a.cols, [a, i, j](std::size_t r, std::size_t c) {
            return a.at(r == i ? j : r == j ? i : r, c);
          }};
}

template <typename F>
func_matrix<F> mult_row(const F& f, const func_matrix<F>& a, std::size_t i,
                        const typename F::element& factor) {
  return {a.rows, a.cols, [f, a, i, factor](std::size_t r, std::size_t c) {
            return r == i ? f.mul(a.at(r, c), factor) : a.at(r, c);
          }};
}

template <typename F>
func_matrix<F> row_add(const F& f, const func_matrix<F>& a, std::size_t t, std::size_t l,
                       const typename F::element& factor) {
  return {a.rows, a.cols, [f, a, t, l, factor](std::size_t r, std::size_t c) {
            return r == t ? f.add(a.at(r, c), f.mul(factor, a.at(l, c))) : a.at(r, c);
          }};
}

} // namespace gjlin
