#pragma once

#include <optional>

#include "gjlin/rref.hpp"

namespace gjlin {

/// Ordered list of linearly independent vectors spanning a subspace of the
/// ambient space; empty for the trivial subspace.
template <typename F>
struct basis {
  F field;
  std::size_t ambient_dim = 0;
  std::vector<vec<F>> vectors;

  std::size_t dim() const { return vectors.size(); }
};

template <typename F>
std::size_t rank(const matrix<F>& a) {
  return gauss_jordan(a).rank;
}

template <typename F>
std::size_t nullity(const matrix<F>& a) {
  return a.cols() - rank(a);
}

/// det(A) = b * product of the diagonal of rref(A).
template <typename F>
typename F::element det(const matrix<F>& a, op_counter* ops = nullptr) {
  const F& f = a.field();
  auto trace = gauss_jordan_det(a, ops);
  auto d = trace.scale;
  for (std::size_t i = 0; i < a.rows(); ++i) d = f.mul(d, trace.rref(i, i));
  return d;
}

/// The transformation matrix P of the tracked run, when rref(A) is the
/// identity; absent for singular input.
template <typename F>
std::optional<matrix<F>> inverse(const matrix<F>& a, op_counter* ops = nullptr) {
  if (a.rows() != a.cols()) throw error(errc::shape, "inverse: matrix must be square");
  auto tracked = gauss_jordan_tracked(a, ops);
  if (tracked.rank != a.cols()) return std::nullopt;
  return std::move(tracked.transform);
}

namespace detail {

template <typename F>
vec<F> row_vector(const matrix<F>& a, std::size_t i) {
  vec<F> v(a.field(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) v.entries[j] = a(i, j);
  return v;
}

template <typename F>
basis<F> nonzero_rows(const rref_result<F>& r) {
  basis<F> b{r.rref.field(), r.rref.cols(), {}};
  for (std::size_t i = 0; i < r.rank; ++i) b.vectors.push_back(row_vector(r.rref, i));
  return b;
}

} // namespace detail

/// Nonzero rows of rref(A).
template <typename F>
basis<F> basis_row_space(const matrix<F>& a) {
  return detail::nonzero_rows(gauss_jordan(a));
}

/// Nonzero rows of rref(A^T); spans the column space of A.
template <typename F>
basis<F> basis_col_space(const matrix<F>& a) {
  return detail::nonzero_rows(gauss_jordan(transpose(a)));
}

/// Rows of the transformation matrix of the tracked run on A^T with index at
/// or above rank(A); each satisfies A*v = 0.
template <typename F>
basis<F> basis_null_space(const matrix<F>& a) {
  auto tracked = gauss_jordan_tracked(transpose(a));
  basis<F> b{a.field(), a.cols(), {}};
  for (std::size_t i = tracked.rank; i < a.cols(); ++i)
    b.vectors.push_back(detail::row_vector(tracked.transform, i));
  return b;
}

/// Rows of the transformation matrix of the tracked run on A with index at or
/// above rank(A); each satisfies v^T * A = 0.
template <typename F>
basis<F> basis_left_null_space(const matrix<F>& a) {
  auto tracked = gauss_jordan_tracked(a);
  basis<F> b{a.field(), a.rows(), {}};
  for (std::size_t i = tracked.rank; i < a.rows(); ++i)
    b.vectors.push_back(detail::row_vector(tracked.transform, i));
  return b;
}

} // namespace gjlin
