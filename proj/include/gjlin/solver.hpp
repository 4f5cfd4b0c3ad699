#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gjlin/apps.hpp"

namespace gjlin {

enum class solve_status { inconsistent, unique, infinite };

inline const char* solve_status_name(solve_status s) {
  switch (s) {
    case solve_status::inconsistent: return "INCONSISTENT";
    case solve_status::unique: return "UNIQUE";
    default: return "INFINITE";
  }
}

/// Full solution set of A*x = b: a particular solution plus a basis of the
/// homogeneous solutions, or the inconsistent marker.
template <typename F>
struct solution_set {
  solve_status status = solve_status::inconsistent;
  std::optional<vec<F>> particular;
  std::optional<basis<F>> null_basis;
};

/// Classifies and solves A*x = b from the tracked elimination: with
/// (P, R) = tracked rref of A and c = P*b, the system is inconsistent exactly
/// when c has a nonzero entry at or below rank(A). Otherwise the particular
/// solution assigns c_j to the j-th pivot column and zero to every free
/// variable, and the homogeneous part is the null-space basis of A.
template <typename F>
solution_set<F> solve(const matrix<F>& a, const vec<F>& b, op_counter* ops = nullptr) {
  if (b.size() != a.rows())
    throw error(errc::shape, "solve: rhs length must equal the number of rows");
  const F& f = a.field();
  auto tracked = gauss_jordan_tracked(a, ops);
  vec<F> c = mat_vec_mul(tracked.transform, b);
  for (std::size_t i = tracked.rank; i < a.rows(); ++i)
    if (!f.is_zero(c.entries[i])) return {solve_status::inconsistent, std::nullopt, std::nullopt};

  vec<F> particular(f, a.cols());
  for (std::size_t j = 0; j < tracked.pivot_cols.size(); ++j)
    particular.entries[tracked.pivot_cols[j]] = c.entries[j];

  // second tracked elimination, on A^T
  basis<F> kernel = basis_null_space(a);
  auto status = tracked.rank == a.cols() ? solve_status::unique : solve_status::infinite;
  return {status, std::move(particular), std::move(kernel)};
}

struct verify_report {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

/// Independent substitution check of a solution set: residual of the
/// particular solution, A*v = 0 for each basis vector, basis independence,
/// consistency classification against the augmented-rank criterion, and a
/// random-combination spot check.
template <typename F>
verify_report verify_solution(const matrix<F>& a, const vec<F>& b, const solution_set<F>& s,
                              std::uint64_t seed = 0) {
  if (b.size() != a.rows()) throw error(errc::shape, "verify_solution: rhs length mismatch");
  const F& f = a.field();
  verify_report report;

  // augmented-rank criterion, computed without the tracked machinery
  matrix<F> augmented(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) augmented(i, j) = a(i, j);
    augmented(i, a.cols()) = b.entries[i];
  }
  bool consistent_by_rank = rank(a) == rank(augmented);
  bool claimed_consistent = s.status != solve_status::inconsistent;
  if (consistent_by_rank != claimed_consistent)
    report.fail("classification disagrees with the augmented-rank criterion");

  if (!claimed_consistent) {
    if (s.particular || s.null_basis) report.fail("inconsistent result carries solution data");
    return report;
  }
  if (!s.particular || !s.null_basis) {
    report.fail("consistent result lacks particular solution or null basis");
    return report;
  }
  if (s.particular->size() != a.cols()) {
    report.fail("particular solution has wrong length");
    return report;
  }
  auto residual_zero = [&](const vec<F>& x, const vec<F>& rhs) {
    vec<F> ax = mat_vec_mul(a, x);
    for (std::size_t i = 0; i < ax.size(); ++i)
      if (!f.is_zero(f.sub(ax.entries[i], rhs.entries[i]))) return false;
    return true;
  };
  vec<F> zero_rhs(f, a.rows());
  if (!residual_zero(*s.particular, b)) report.fail("particular solution does not satisfy A*x = b");
  for (std::size_t i = 0; i < s.null_basis->vectors.size(); ++i)
    if (!residual_zero(s.null_basis->vectors[i], zero_rhs))
      report.fail("null-basis vector " + std::to_string(i) + " does not satisfy A*v = 0");

  if (s.null_basis->dim() != a.cols() - rank(a))
    report.fail("null-basis size differs from the nullity");
  if (!s.null_basis->vectors.empty()) {
    matrix<F> stacked(f, s.null_basis->dim(), a.cols());
    for (std::size_t i = 0; i < s.null_basis->dim(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        stacked(i, j) = s.null_basis->vectors[i].entries[j];
    if (rank(stacked) != s.null_basis->dim()) report.fail("null-basis vectors are dependent");
  }
  if ((s.status == solve_status::unique) != s.null_basis->vectors.empty())
    report.fail("unique/infinite tag disagrees with null-basis size");

  // random combinations stay on the solution set
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 4; ++trial) {
    vec<F> x = *s.particular;
    for (const auto& v : s.null_basis->vectors) {
      auto lambda = detail::sample_element(f, rng);
      for (std::size_t j = 0; j < x.size(); ++j)
        x.entries[j] = f.add(x.entries[j], f.mul(lambda, v.entries[j]));
    }
    if (!residual_zero(x, b)) {
      report.fail("random combination of basis vectors leaves the solution set");
      break;
    }
  }
  return report;
}

} // namespace gjlin
