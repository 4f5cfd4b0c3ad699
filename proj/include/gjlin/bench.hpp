#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "gjlin/io.hpp"

namespace gjlin {

enum class bench_op { rref, det, inverse, solve };

inline const char* bench_op_name(bench_op op) {
  switch (op) {
    case bench_op::rref: return "rref";
    case bench_op::det: return "det";
    case bench_op::inverse: return "inverse";
    default: return "solve";
  }
}

inline bench_op parse_bench_op(const std::string& s) {
  if (s == "rref") return bench_op::rref;
  if (s == "det") return bench_op::det;
  if (s == "inverse") return bench_op::inverse;
  if (s == "solve") return bench_op::solve;
  throw error(errc::domain, "unknown benchmark operation '" + s + "'");
}

struct bench_spec {
  bench_op op = bench_op::rref;
  field_id field = field_id::gf2;
  std::vector<std::size_t> sizes;
  std::size_t reps = 3;
  std::uint64_t seed = 0;
  bool big_int = false;        // rat only: integer entries up to 1e20
  double eps = 1e-12;          // real field configuration
  double timeout_seconds = 60; // per cell; exceeded cells report no time
};

struct bench_row {
  std::size_t n = 0;
  double median_seconds = 0;
  bool timed_out = false;
  std::uint64_t op_count = 0;
};

namespace detail {

// Generation is a pure function of (m, n, field, seed): the mt19937_64 stream
// is seeded by folding the parameters through splitmix64, and all bounded
// draws use rejection sampling, so output is identical across platforms.
inline std::mt19937_64 matrix_rng(std::size_t m, std::size_t n, field_id field,
                                  std::uint64_t seed) {
  std::uint64_t state = seed;
  splitmix64(state);
  state ^= static_cast<std::uint64_t>(m) * 0x9e3779b97f4a7c15ULL;
  splitmix64(state);
  state ^= static_cast<std::uint64_t>(n) * 0xbf58476d1ce4e5b9ULL;
  splitmix64(state);
  state ^= static_cast<std::uint64_t>(field);
  return std::mt19937_64(splitmix64(state));
}

inline mpz_class random_mpz_upto(std::mt19937_64& rng, const mpz_class& bound) {
  // uniform in [0, bound] by 128-bit rejection; bound < 2^127
  mpz_class range = bound + 1;
  for (;;) {
    mpz_class draw = rng();
    draw <<= 64;
    draw += mpz_class(rng());
    mpz_class limit = (mpz_class(1) << 128) - ((mpz_class(1) << 128) % range);
    if (draw < limit) return draw % range;
  }
}

} // namespace detail

template <typename F>
matrix<F> random_matrix(const F& f, std::size_t m, std::size_t n, std::uint64_t seed,
                        bool big_int = false) {
  auto rng = detail::matrix_rng(m, n, F::id, seed);
  matrix<F> out(f, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if constexpr (std::is_same_v<F, gf2_field>) {
        out(i, j) = static_cast<std::uint8_t>(detail::bounded(rng, 2));
      } else if constexpr (std::is_same_v<F, rational_field>) {
        if (big_int) {
          static const mpz_class big("200000000000000000000"); // 2e20
          mpz_class num = detail::random_mpz_upto(rng, big) - mpz_class("100000000000000000000");
          out(i, j) = mpq_class(num);
        } else {
          long num = static_cast<long>(detail::bounded(rng, 20001)) - 10000;
          long den = static_cast<long>(detail::bounded(rng, 100)) + 1;
          mpq_class q(num, den);
          q.canonicalize();
          out(i, j) = q;
        }
      } else {
        out(i, j) = 2.0 * detail::unit_double(rng) - 1.0;
      }
    }
  }
  return out;
}

namespace detail {

// One benchmark cell: verified once, op-counted once, then timed reps times.
template <typename F>
bench_row bench_cell(const F& f, const bench_spec& spec, std::size_t n) {
  matrix<F> a = random_matrix(f, n, n, spec.seed, spec.big_int);

  // correctness gate before any time is reported
  op_counter ops;
  switch (spec.op) {
    case bench_op::rref: {
      auto r = gauss_jordan(a, &ops);
      if (!is_rref(snap_zeros(r.rref)))
        throw error(errc::domain, "bench: rref output failed is_rref verification");
      break;
    }
    case bench_op::det: {
      auto trace = gauss_jordan_det(a, &ops);
      if (!is_rref(snap_zeros(trace.rref)))
        throw error(errc::domain, "bench: det trace rref failed verification");
      break;
    }
    case bench_op::inverse: {
      auto inv = inverse(a, &ops);
      if (inv) {
        auto prod = snap_zeros(mat_mul(a, *inv));
        if (!prod.equals(matrix<F>::identity(f, n)))
          throw error(errc::domain, "bench: inverse failed A*inv(A) = I verification");
      }
      break;
    }
    case bench_op::solve: {
      matrix<F> bm = random_matrix(f, n, 1, spec.seed + 1, spec.big_int);
      vec<F> b(f, n);
      for (std::size_t i = 0; i < n; ++i) b.entries[i] = bm(i, 0);
      auto s = solve(a, b, &ops);
      auto report = verify_solution(a, b, s, spec.seed);
      if (!report.ok) throw error(errc::domain, "bench: solve output failed verification");
      break;
    }
  }

  bench_row row{n, 0.0, false, ops.total()};
  std::vector<double> times;
  for (std::size_t rep = 0; rep < spec.reps; ++rep) {
    auto start = std::chrono::steady_clock::now();
    switch (spec.op) {
      case bench_op::rref: gauss_jordan(a); break;
      case bench_op::det: gauss_jordan_det(a); break;
      case bench_op::inverse: inverse(a); break;
      case bench_op::solve: {
        matrix<F> bm = random_matrix(f, n, 1, spec.seed + 1, spec.big_int);
        vec<F> b(f, n);
        for (std::size_t i = 0; i < n; ++i) b.entries[i] = bm(i, 0);
        solve(a, b);
        break;
      }
    }
    auto stop = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(stop - start).count();
    times.push_back(secs);
    if (secs > spec.timeout_seconds) {
      row.timed_out = true;
      break;
    }
  }
  if (!row.timed_out) {
    std::sort(times.begin(), times.end());
    row.median_seconds = times[times.size() / 2];
  }
  return row;
}

} // namespace detail

inline std::vector<bench_row> bench_run(const bench_spec& spec) {
  if (spec.reps < 1) throw error(errc::domain, "bench: reps must be >= 1");
  for (std::size_t i = 1; i < spec.sizes.size(); ++i)
    if (spec.sizes[i] <= spec.sizes[i - 1])
      throw error(errc::domain, "bench: sizes must be strictly increasing");
  std::vector<bench_row> rows;
  for (std::size_t n : spec.sizes) {
    switch (spec.field) {
      case field_id::gf2: rows.push_back(detail::bench_cell(gf2_field{}, spec, n)); break;
      case field_id::rat: rows.push_back(detail::bench_cell(rational_field{}, spec, n)); break;
      case field_id::real:
        rows.push_back(detail::bench_cell(real_field{spec.eps}, spec, n));
        break;
    }
  }
  return rows;
}

inline std::string bench_csv(const bench_spec& spec, const std::vector<bench_row>& rows) {
  std::string out = "operation,field,n,median_seconds,op_count\n";
  for (const auto& row : rows) {
    out += bench_op_name(spec.op);
    out += ',';
    out += field_name(spec.field);
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    if (row.timed_out) {
      out += '-';
    } else {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), row.median_seconds);
      (void)ec;
      out.append(buf, ptr);
    }
    out += ',';
    out += std::to_string(row.op_count);
    out += '\n';
  }
  return out;
}

} // namespace gjlin
