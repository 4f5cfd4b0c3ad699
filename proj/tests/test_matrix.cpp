#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gjlin;
using gjtest::make;
using gjtest::make_vec;

namespace {
const rational_field Q;
const gf2_field B;
} // namespace

TEST_CASE("construction rejects empty dimensions") {
  CHECK_THROWS_AS(matrix<rational_field>(Q, 0, 3), error);
  CHECK_THROWS_AS(matrix<rational_field>(Q, 3, 0), error);
  CHECK_THROWS_AS(vec<rational_field>(Q, 0), error);
}

TEST_CASE("interchange_rows") {
  auto a = make(Q, {{"1", "2"}, {"3", "4"}});
  CHECK(interchange_rows(a, 0, 1).equals(make(Q, {{"3", "4"}, {"1", "2"}})));
  CHECK(interchange_rows(a, 1, 1).equals(a));
  auto b = make(B, {{"1"}, {"0"}});
  CHECK(interchange_rows(b, 0, 1).equals(make(B, {{"0"}, {"1"}})));
  CHECK_THROWS_AS(interchange_rows(a, 0, 2), error);
}

TEST_CASE("mult_row") {
  auto a = make(Q, {{"1", "2"}, {"3", "4"}});
  CHECK(mult_row(a, 0, Q.one()).equals(a));
  CHECK(mult_row(make(Q, {{"2", "4"}}), 0, Q.parse("1/2")).equals(make(Q, {{"1", "2"}})));
  CHECK(mult_row(make(Q, {{"1", "1"}}), 0, Q.zero()).equals(make(Q, {{"0", "0"}})));
  CHECK_THROWS_AS(mult_row(a, 5, Q.one()), error);
}

TEST_CASE("row_add") {
  auto a = make(Q, {{"1", "2"}, {"3", "4"}});
  CHECK(row_add(a, 1, 0, Q.parse("-3")).equals(make(Q, {{"1", "2"}, {"0", "-2"}})));
  CHECK(row_add(a, 1, 0, Q.zero()).equals(a));
  auto b = make(B, {{"1", "1"}, {"1", "0"}});
  CHECK(row_add(b, 1, 0, B.one()).equals(make(B, {{"1", "1"}, {"0", "1"}})));
  CHECK_THROWS_AS(row_add(a, 1, 1, Q.one()), error); // t == l
  CHECK_THROWS_AS(row_add(a, 2, 0, Q.one()), error);
}

TEST_CASE("transpose") {
  auto i3 = matrix<rational_field>::identity(Q, 3);
  CHECK(transpose(i3).equals(i3));
  CHECK(transpose(make(Q, {{"1", "2", "3"}})).equals(make(Q, {{"1"}, {"2"}, {"3"}})));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto a = gjtest::random_rat(4, 6, seed);
    CHECK(transpose(transpose(a)).equals(a));
  }
}

TEST_CASE("products and identities") {
  auto a = make(Q, {{"1", "2"}, {"3", "4"}});
  CHECK(mat_mul(matrix<rational_field>::identity(Q, 2), a).equals(a));
  CHECK(mat_mul(a, matrix<rational_field>::zeros(Q, 2, 3))
            .equals(matrix<rational_field>::zeros(Q, 2, 3)));
  auto x = make_vec(Q, {"1", "1"});
  CHECK(mat_vec_mul(a, x).equals(make_vec(Q, {"3", "7"})));
  CHECK_THROWS_AS(mat_mul(a, matrix<rational_field>::zeros(Q, 3, 2)), error);
  CHECK_THROWS_AS(mat_vec_mul(a, make_vec(Q, {"1"})), error);
}

// every elementary operation equals left-multiplication by the matrix obtained
// from applying it to the identity
template <typename F>
static void check_elementary_matrices(const F& f, const matrix<F>& a, std::mt19937_64& rng) {
  std::size_t m = a.rows();
  auto id = matrix<F>::identity(f, m);
  std::size_t i = detail::bounded(rng, m);
  std::size_t j = detail::bounded(rng, m);
  auto c = detail::sample_element(f, rng);

  CHECK(interchange_rows(a, i, j).equals(mat_mul(interchange_rows(id, i, j), a)));
  CHECK(mult_row(a, i, c).equals(mat_mul(mult_row(id, i, c), a)));
  if (i != j) CHECK(row_add(a, i, j, c).equals(mat_mul(row_add(id, i, j, c), a)));
}

TEST_CASE("elementary operations are elementary-matrix products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    check_elementary_matrices(Q, gjtest::random_rat(2 + trial % 4, 3, trial), rng);
    check_elementary_matrices(B, gjtest::random_gf2(2 + trial % 4, 3, trial), rng);
  }
}

TEST_CASE("elementary operations undo themselves") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = gjtest::random_rat(4, 4, trial + 100);
    std::size_t i = detail::bounded(rng, 4);
    std::size_t j = detail::bounded(rng, 4);
    auto c = detail::sample_element(Q, rng);
    CHECK(interchange_rows(interchange_rows(a, i, j), i, j).equals(a));
    if (i != j) CHECK(row_add(row_add(a, i, j, c), i, j, Q.neg(c)).equals(a));
    if (!Q.is_zero(c)) CHECK(mult_row(mult_row(a, i, c), i, Q.inv(c)).equals(a));
  }
}

TEST_CASE("func round-trips") {
  auto i3 = matrix<rational_field>::identity(Q, 3);
  CHECK(from_func(Q, to_func(i3)).equals(i3));
  auto a = gjtest::random_rat(5, 7, 3);
  CHECK(from_func(Q, to_func(a)).equals(a));
  func_matrix<rational_field> zero{2, 2, [](std::size_t, std::size_t) { return mpq_class(0); }};
  CHECK(from_func(Q, zero).equals(matrix<rational_field>::zeros(Q, 2, 2)));
}

TEST_CASE("func and dense elementary operations commute with materialization") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = gjtest::random_rat(4, 5, trial + 40);
    auto fa = to_func(a);
    std::size_t i = detail::bounded(rng, 4);
    std::size_t j = detail::bounded(rng, 4);
    auto c = detail::sample_element(Q, rng);
    CHECK(from_func(Q, interchange_rows(fa, i, j)).equals(interchange_rows(a, i, j)));
    CHECK(from_func(Q, mult_row(Q, fa, i, c)).equals(mult_row(a, i, c)));
    if (i != j) CHECK(from_func(Q, row_add(Q, fa, i, j, c)).equals(row_add(a, i, j, c)));
  }
}
