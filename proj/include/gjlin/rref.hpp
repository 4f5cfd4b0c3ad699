#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gjlin/matrix.hpp"

namespace gjlin {

/// Counts of elementary operations and the field operations inside them.
struct op_counter {
  std::uint64_t interchanges = 0;
  std::uint64_t scalings = 0;
  std::uint64_t row_adds = 0;
  std::uint64_t entry_ops = 0; // field mul/add inside elimination loops

  std::uint64_t total() const { return interchanges + scalings + row_adds + entry_ops; }
};

template <typename F>
struct rref_result {
  matrix<F> rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// (P, rref) with P * A = rref; P is the accumulated product of the
/// elementary matrices applied.
template <typename F>
struct tracked_rref {
  matrix<F> transform;
  matrix<F> rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// rref plus the scalar b with det(A) = b * det(rref) throughout elimination.
template <typename F>
struct det_trace {
  typename F::element scale;
  matrix<F> rref;
  std::size_t rank = 0;
};

// Observers see every elementary operation the engine performs, in order.
// scale_row reports the pivot value p; the engine scaled the row by inv(p).
template <typename F>
struct null_observer {
  void swap_rows(std::size_t, std::size_t) {}
  void scale_row(std::size_t, const typename F::element&) {}
  void add_row(std::size_t, std::size_t, const typename F::element&) {}
  void after_pivot(const matrix<F>&, std::size_t, std::size_t) {}
};

/// Mirrors every row operation onto a second matrix, starting from identity.
template <typename F>
struct track_observer {
  matrix<F>& target;
  op_counter* ops = nullptr;

  void swap_rows(std::size_t i, std::size_t l) {
    target.swap_rows_raw(i, l);
    if (ops) ops->interchanges += 1;
  }
  void scale_row(std::size_t l, const typename F::element& pivot) {
    target.scale_row_raw(l, target.field().inv(pivot));
    if (ops) {
      ops->scalings += 1;
      ops->entry_ops += target.cols();
    }
  }
  void add_row(std::size_t t, std::size_t l, const typename F::element& c) {
    target.add_row_raw(t, l, c);
    if (ops) {
      ops->row_adds += 1;
      ops->entry_ops += 2 * target.cols();
    }
  }
  void after_pivot(const matrix<F>&, std::size_t, std::size_t) {}
};

/// Maintains the determinant scalar: a genuine interchange flips the sign,
/// scaling row l by inv(p) multiplies the scalar by p, row adds change nothing.
template <typename F>
struct det_observer {
  const F& f;
  typename F::element& scale;

  void swap_rows(std::size_t, std::size_t) { scale = f.neg(scale); }
  void scale_row(std::size_t, const typename F::element& pivot) { scale = f.mul(scale, pivot); }
  void add_row(std::size_t, std::size_t, const typename F::element&) {}
  void after_pivot(const matrix<F>&, std::size_t, std::size_t) {}
};

template <typename F, typename ObsA, typename ObsB>
struct chain_observer {
  ObsA& a;
  ObsB& b;

  void swap_rows(std::size_t i, std::size_t l) { a.swap_rows(i, l); b.swap_rows(i, l); }
  void scale_row(std::size_t l, const typename F::element& p) { a.scale_row(l, p); b.scale_row(l, p); }
  void add_row(std::size_t t, std::size_t l, const typename F::element& c) {
    a.add_row(t, l, c);
    b.add_row(t, l, c);
  }
  void after_pivot(const matrix<F>& m, std::size_t l, std::size_t k) {
    a.after_pivot(m, l, k);
    b.after_pivot(m, l, k);
  }
};

/// Gauss-Jordan elimination over a working copy. Columns are traversed left to
/// right; in each column the pivot is the first row at or below the pivot
/// counter with a nonzero entry (no magnitude-based pivoting). The pivot row is
/// swapped up (only when it actually moves), scaled so the pivot becomes 1, and
/// every other row is cleared in the same pass. Returns the pivot columns.
template <typename F, typename Obs>
std::vector<std::size_t> eliminate(matrix<F>& a, Obs&& obs, op_counter* ops = nullptr) {
  const F& f = a.field();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t l = 0;
  for (std::size_t k = 0; k < n && l < m; ++k) {
    std::optional<std::size_t> pivot_row;
    for (std::size_t i = l; i < m; ++i) {
      if (!f.is_zero(a(i, k))) {
        pivot_row = i;
        break;
      }
    }
    if (!pivot_row) continue;
    if (*pivot_row != l) {
      a.swap_rows_raw(*pivot_row, l);
      obs.swap_rows(*pivot_row, l);
      if (ops) ops->interchanges += 1;
    }
    auto pivot = a(l, k);
    a.scale_row_raw(l, f.inv(pivot));
    obs.scale_row(l, pivot);
    if (ops) {
      ops->scalings += 1;
      ops->entry_ops += n;
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (t == l) continue;
      auto c = f.neg(a(t, k));
      a.add_row_raw(t, l, c);
      obs.add_row(t, l, c);
      if (ops) {
        ops->row_adds += 1;
        ops->entry_ops += 2 * n;
      }
    }
    pivot_cols.push_back(k);
    ++l;
    obs.after_pivot(a, l, k);
  }
  return pivot_cols;
}

/// One pivot step at (l, k): requires some row at or below l to be nonzero in
/// column k. Swaps the first such row up, normalizes it, clears column k
/// everywhere else.
template <typename F>
matrix<F> gj_pivot_step(const matrix<F>& a, std::size_t l, std::size_t k) {
  const F& f = a.field();
  a.check_row(l);
  if (k >= a.cols()) throw error(errc::bounds, "gj_pivot_step: column index out of range");
  std::optional<std::size_t> pivot_row;
  for (std::size_t i = l; i < a.rows(); ++i) {
    if (!f.is_zero(a(i, k))) {
      pivot_row = i;
      break;
    }
  }
  if (!pivot_row)
    throw error(errc::domain, "gj_pivot_step: no pivot in column " + std::to_string(k) +
                                  " at or below row " + std::to_string(l));
  matrix<F> out = a;
  if (*pivot_row != l) out.swap_rows_raw(*pivot_row, l);
  out.scale_row_raw(l, f.inv(out(l, k)));
  for (std::size_t t = 0; t < out.rows(); ++t) {
    if (t == l) continue;
    out.add_row_raw(t, l, f.neg(out(t, k)));
  }
  return out;
}

template <typename F>
rref_result<F> gauss_jordan(const matrix<F>& a, op_counter* ops = nullptr) {
  matrix<F> work = a;
  null_observer<F> obs;
  auto pivots = eliminate(work, obs, ops);
  return {std::move(work), pivots.size(), std::move(pivots)};
}

template <typename F>
tracked_rref<F> gauss_jordan_tracked(const matrix<F>& a, op_counter* ops = nullptr) {
  matrix<F> work = a;
  matrix<F> p = matrix<F>::identity(a.field(), a.rows());
  track_observer<F> obs{p, ops};
  auto pivots = eliminate(work, obs, ops);
  return {std::move(p), std::move(work), pivots.size(), std::move(pivots)};
}

template <typename F>
det_trace<F> gauss_jordan_det(const matrix<F>& a, op_counter* ops = nullptr) {
  if (a.rows() != a.cols())
    throw error(errc::shape, "gauss_jordan_det: matrix must be square");
  matrix<F> work = a;
  auto b = a.field().one();
  det_observer<F> obs{a.field(), b};
  auto pivots = eliminate(work, obs, ops);
  return {std::move(b), std::move(work), pivots.size()};
}

/// Reduced row echelon form check: leading entries are 1, strictly staircased,
/// alone in their column, with zero rows at the bottom.
template <typename F>
bool is_rref(const matrix<F>& a) {
  const F& f = a.field();
  bool seen_zero_row = false;
  std::size_t prev_lead = 0;
  bool have_prev = false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::optional<std::size_t> lead;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!f.is_zero(a(i, j))) {
        lead = j;
        break;
      }
    }
    if (!lead) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false; // nonzero row below a zero row
    if (!f.is_zero(f.sub(a(i, *lead), f.one()))) return false;
    if (have_prev && *lead <= prev_lead) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != i && !f.is_zero(a(r, *lead))) return false;
    prev_lead = *lead;
    have_prev = true;
  }
  return true;
}

/// Replaces entries the field considers zero by the exact zero element. Used
/// as a post-pass over approximate-real results.
template <typename F>
matrix<F> snap_zeros(const matrix<F>& a) {
  matrix<F> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.field().is_zero(out(i, j))) out(i, j) = a.field().zero();
  return out;
}

// --- reference run over the function representation --------------------------

/// One pivot step in function-matrix semantics: built as a composition of the
/// functional elementary operations and a pointwise lambda over them.
template <typename F>
func_matrix<F> gj_pivot_step_func(const F& f, const func_matrix<F>& a, std::size_t l,
                                  std::size_t k) {
  std::optional<std::size_t> pivot_row;
  for (std::size_t i = l; i < a.rows; ++i) {
    if (!f.is_zero(a.at(i, k))) {
      pivot_row = i;
      break;
    }
  }
  if (!pivot_row) throw error(errc::domain, "gj_pivot_step_func: no pivot available");
  func_matrix<F> interchanged = interchange_rows(a, *pivot_row, l);
  func_matrix<F> scaled = mult_row(f, interchanged, l, f.inv(interchanged.at(l, k)));
  return {a.rows, a.cols, [f, interchanged, scaled, l, k](std::size_t t, std::size_t j) {
            if (t == l) return scaled.at(l, j);
            auto c = f.neg(interchanged.at(t, k));
            return f.add(scaled.at(t, j), f.mul(c, scaled.at(l, j)));
          }};
}

/// Full elimination executed in function-matrix semantics, materializing after
/// each pivot step. Independent of the dense engine; used to cross-check it.
template <typename F>
rref_result<F> gauss_jordan_func(const matrix<F>& a) {
  const F& f = a.field();
  func_matrix<F> cur = to_func(a);
  std::vector<std::size_t> pivot_cols;
  std::size_t l = 0;
  for (std::size_t k = 0; k < a.cols() && l < a.rows(); ++k) {
    bool has_pivot = false;
    for (std::size_t i = l; i < cur.rows; ++i) {
      if (!f.is_zero(cur.at(i, k))) {
        has_pivot = true;
        break;
      }
    }
    if (!has_pivot) continue;
    cur = to_func(from_func(f, gj_pivot_step_func(f, cur, l, k)));
    pivot_cols.push_back(k);
    ++l;
  }
  matrix<F> dense = from_func(f, cur);
  return {std::move(dense), pivot_cols.size(), std::move(pivot_cols)};
}

} // namespace gjlin
