#include "gjlin.h"

#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "gjlin/bench.hpp"

using namespace gjlin;

namespace {

using any_matrix =
    std::variant<matrix<gf2_field>, matrix<rational_field>, matrix<real_field>>;

thread_local std::string g_last_error;

gjl_status status_of(const error& e) {
  switch (e.code()) {
    case errc::parse: return GJL_ERR_PARSE;
    case errc::shape: return GJL_ERR_SHAPE;
    case errc::bounds: return GJL_ERR_BOUNDS;
    case errc::domain: return GJL_ERR_DOMAIN;
  }
  return GJL_ERR_INTERNAL;
}

template <typename Fn>
gjl_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GJL_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
auto with_field(gjl_field field, double eps, Fn&& fn) {
  switch (field) {
    case GJL_FIELD_GF2: return fn(gf2_field{});
    case GJL_FIELD_RAT: return fn(rational_field{});
    case GJL_FIELD_REAL: return fn(real_field{eps});
  }
  throw error(errc::domain, "unknown field id");
}

field_id to_field_id(gjl_field field) {
  switch (field) {
    case GJL_FIELD_GF2: return field_id::gf2;
    case GJL_FIELD_RAT: return field_id::rat;
    case GJL_FIELD_REAL: return field_id::real;
  }
  throw error(errc::domain, "unknown field id");
}

template <typename F>
std::string bases_report(const matrix<F>& a) {
  std::string out;
  out += "ROWSPACE\n" + format_basis(basis_row_space(a));
  out += "COLSPACE\n" + format_basis(basis_col_space(a));
  out += "NULLSPACE\n" + format_basis(basis_null_space(a));
  out += "LEFTNULLSPACE\n" + format_basis(basis_left_null_space(a));
  return out;
}

template <typename F>
vec<F> column_as_vec(const matrix<F>& b) {
  if (b.cols() != 1) throw error(errc::shape, "right-hand side must be a single column");
  vec<F> v(b.field(), b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) v.entries[i] = b(i, 0);
  return v;
}

} // namespace

struct gjl_matrix {
  any_matrix value;
};

extern "C" {

const char* gjl_last_error(void) { return g_last_error.c_str(); }

void gjl_string_free(char* s) { std::free(s); }

void gjl_matrix_free(gjl_matrix* m) { delete m; }

gjl_status gjl_matrix_parse(const char* text, gjl_field field, double eps, gjl_matrix** out) {
  return guarded([&]() {
    *out = with_field(field, eps, [&](auto f) {
      return new gjl_matrix{any_matrix(parse_matrix(std::string(text), f))};
    });
    return GJL_OK;
  });
}

gjl_status gjl_vector_parse(const char* text, gjl_field field, double eps, gjl_matrix** out) {
  return guarded([&]() {
    *out = with_field(field, eps, [&](auto f) {
      vec v = parse_vector(std::string(text), f);
      matrix col(f, v.size(), std::size_t{1});
      for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v.entries[i];
      return new gjl_matrix{any_matrix(std::move(col))};
    });
    return GJL_OK;
  });
}

gjl_status gjl_matrix_format(const gjl_matrix* m, char** out) {
  return guarded([&]() {
    *out = std::visit([](const auto& a) { return dup_string(format_matrix(a)); }, m->value);
    return GJL_OK;
  });
}

size_t gjl_matrix_rows(const gjl_matrix* m) {
  return std::visit([](const auto& a) { return a.rows(); }, m->value);
}

size_t gjl_matrix_cols(const gjl_matrix* m) {
  return std::visit([](const auto& a) { return a.cols(); }, m->value);
}

gjl_status gjl_matrix_random(gjl_field field, double eps, size_t rows, size_t cols,
                             uint64_t seed, int big_int, gjl_matrix** out) {
  return guarded([&]() {
    *out = with_field(field, eps, [&](auto f) {
      return new gjl_matrix{any_matrix(random_matrix(f, rows, cols, seed, big_int != 0))};
    });
    return GJL_OK;
  });
}

gjl_status gjl_rref(const gjl_matrix* m, gjl_matrix** rref_out, gjl_matrix** transform_out,
                    uint64_t* rank_out, uint64_t* op_count_out) {
  return guarded([&]() {
    std::visit(
        [&](const auto& a) {
          op_counter ops;
          auto tracked = gauss_jordan_tracked(a, op_count_out ? &ops : nullptr);
          if (rref_out) *rref_out = new gjl_matrix{any_matrix(std::move(tracked.rref))};
          if (transform_out)
            *transform_out = new gjl_matrix{any_matrix(std::move(tracked.transform))};
          if (rank_out) *rank_out = tracked.rank;
          if (op_count_out) *op_count_out = ops.total();
        },
        m->value);
    return GJL_OK;
  });
}

gjl_status gjl_rank(const gjl_matrix* m, uint64_t* out) {
  return guarded([&]() {
    *out = std::visit([](const auto& a) { return static_cast<uint64_t>(rank(a)); }, m->value);
    return GJL_OK;
  });
}

gjl_status gjl_nullity(const gjl_matrix* m, uint64_t* out) {
  return guarded([&]() {
    *out = std::visit([](const auto& a) { return static_cast<uint64_t>(nullity(a)); }, m->value);
    return GJL_OK;
  });
}

gjl_status gjl_det(const gjl_matrix* m, char** out, uint64_t* op_count_out) {
  return guarded([&]() {
    std::visit(
        [&](const auto& a) {
          op_counter ops;
          auto d = det(a, op_count_out ? &ops : nullptr);
          *out = dup_string(a.field().format(d));
          if (op_count_out) *op_count_out = ops.total();
        },
        m->value);
    return GJL_OK;
  });
}

gjl_status gjl_inverse(const gjl_matrix* m, gjl_matrix** out, uint64_t* op_count_out) {
  return guarded([&]() {
    return std::visit(
        [&](const auto& a) {
          op_counter ops;
          auto inv = inverse(a, op_count_out ? &ops : nullptr);
          if (op_count_out) *op_count_out = ops.total();
          if (!inv) {
            *out = nullptr;
            return GJL_ABSENT;
          }
          *out = new gjl_matrix{any_matrix(std::move(*inv))};
          return GJL_OK;
        },
        m->value);
  });
}

gjl_status gjl_bases(const gjl_matrix* m, char** out) {
  return guarded([&]() {
    *out = std::visit([](const auto& a) { return dup_string(bases_report(a)); }, m->value);
    return GJL_OK;
  });
}

gjl_status gjl_solve(const gjl_matrix* a, const gjl_matrix* b, char** out,
                     uint64_t* op_count_out) {
  return guarded([&]() {
    if (a->value.index() != b->value.index())
      throw error(errc::shape, "matrix and right-hand side use different fields");
    return std::visit(
        [&](const auto& am) {
          using mat_t = std::decay_t<decltype(am)>;
          const auto& bm = std::get<mat_t>(b->value);
          op_counter ops;
          auto s = solve(am, column_as_vec(bm), op_count_out ? &ops : nullptr);
          if (op_count_out) *op_count_out = ops.total();
          *out = dup_string(format_solution(s));
          return s.status == solve_status::inconsistent ? GJL_ABSENT : GJL_OK;
        },
        a->value);
  });
}

gjl_status gjl_verify(const gjl_matrix* a, const gjl_matrix* b, char** report_out, int* ok_out) {
  return guarded([&]() {
    if (a->value.index() != b->value.index())
      throw error(errc::shape, "matrix and right-hand side use different fields");
    std::visit(
        [&](const auto& am) {
          using mat_t = std::decay_t<decltype(am)>;
          const auto& bm = std::get<mat_t>(b->value);
          auto rhs = column_as_vec(bm);
          auto report = verify_solution(am, rhs, solve(am, rhs));
          std::string text = report.ok ? "OK\n" : "";
          for (const auto& failure : report.failures) text += "FAIL " + failure + "\n";
          if (report_out) *report_out = dup_string(text);
          if (ok_out) *ok_out = report.ok ? 1 : 0;
        },
        a->value);
    return GJL_OK;
  });
}

gjl_status gjl_bench(const char* op, gjl_field field, double eps, const uint64_t* sizes,
                     size_t num_sizes, uint64_t reps, uint64_t seed, int big_int,
                     double timeout_seconds, char** csv_out) {
  return guarded([&]() {
    bench_spec spec;
    spec.op = parse_bench_op(op);
    spec.field = to_field_id(field);
    spec.eps = eps;
    spec.sizes.assign(sizes, sizes + num_sizes);
    spec.reps = reps;
    spec.seed = seed;
    spec.big_int = big_int != 0;
    spec.timeout_seconds = timeout_seconds;
    auto rows = bench_run(spec);
    *csv_out = dup_string(bench_csv(spec, rows));
    return GJL_OK;
  });
}

} // extern "C"
