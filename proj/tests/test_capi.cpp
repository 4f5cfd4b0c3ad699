#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "gjlin.h"

namespace {

struct handle {
  gjl_matrix* m = nullptr;
  ~handle() { gjl_matrix_free(m); }
};

struct str {
  char* s = nullptr;
  ~str() { gjl_string_free(s); }
  std::string get() const { return s ? s : ""; }
};

handle parse(const char* text, gjl_field f = GJL_FIELD_RAT) {
  handle h;
  REQUIRE(gjl_matrix_parse(text, f, 1e-12, &h.m) == GJL_OK);
  return h;
}

} // namespace

TEST_CASE("parse, dimensions, format round trip") {
  auto a = parse("2 3\n1/2 0 -3\n1 1 1\n");
  CHECK(gjl_matrix_rows(a.m) == 2);
  CHECK(gjl_matrix_cols(a.m) == 3);
  str text;
  REQUIRE(gjl_matrix_format(a.m, &text.s) == GJL_OK);
  CHECK(text.get() == "2 3\n1/2 0 -3\n1 1 1\n");
}

TEST_CASE("parse errors set status and message") {
  gjl_matrix* m = nullptr;
  CHECK(gjl_matrix_parse("2 2\n1 0\n0", GJL_FIELD_RAT, 0, &m) == GJL_ERR_PARSE);
  CHECK(std::strlen(gjl_last_error()) > 0);
  CHECK(gjl_matrix_parse("1 1\n7", GJL_FIELD_GF2, 0, &m) == GJL_ERR_DOMAIN);
}

TEST_CASE("rref with transform and rank") {
  auto a = parse("2 2\n0 1\n1 0\n");
  handle rref, p;
  uint64_t rank = 0, ops = 0;
  REQUIRE(gjl_rref(a.m, &rref.m, &p.m, &rank, &ops) == GJL_OK);
  CHECK(rank == 2);
  CHECK(ops > 0);
  str rref_text, p_text;
  REQUIRE(gjl_matrix_format(rref.m, &rref_text.s) == GJL_OK);
  REQUIRE(gjl_matrix_format(p.m, &p_text.s) == GJL_OK);
  CHECK(rref_text.get() == "2 2\n1 0\n0 1\n");
  CHECK(p_text.get() == "2 2\n0 1\n1 0\n");
}

TEST_CASE("rank, nullity, det") {
  auto a = parse("2 2\n1 2\n3 4\n");
  uint64_t rank = 0, nullity = 0;
  CHECK(gjl_rank(a.m, &rank) == GJL_OK);
  CHECK(rank == 2);
  CHECK(gjl_nullity(a.m, &nullity) == GJL_OK);
  CHECK(nullity == 0);
  str d;
  CHECK(gjl_det(a.m, &d.s, nullptr) == GJL_OK);
  CHECK(d.get() == "-2");
}

TEST_CASE("det rejects rectangular input") {
  auto a = parse("1 2\n1 2\n");
  str d;
  CHECK(gjl_det(a.m, &d.s, nullptr) == GJL_ERR_SHAPE);
}

TEST_CASE("inverse present and absent") {
  auto a = parse("2 2\n2 0\n0 4\n");
  handle inv;
  REQUIRE(gjl_inverse(a.m, &inv.m, nullptr) == GJL_OK);
  str text;
  REQUIRE(gjl_matrix_format(inv.m, &text.s) == GJL_OK);
  CHECK(text.get() == "2 2\n1/2 0\n0 1/4\n");

  auto singular = parse("2 2\n1 2\n2 4\n");
  handle none;
  CHECK(gjl_inverse(singular.m, &none.m, nullptr) == GJL_ABSENT);
  CHECK(none.m == nullptr);
}

TEST_CASE("solve and verify through the C surface") {
  auto a = parse("2 2\n1 0\n0 1\n");
  handle b;
  REQUIRE(gjl_vector_parse("2 1\n5\n6\n", GJL_FIELD_RAT, 0, &b.m) == GJL_OK);
  str out;
  CHECK(gjl_solve(a.m, b.m, &out.s, nullptr) == GJL_OK);
  CHECK(out.get() == "UNIQUE\nPARTICULAR\n5 6\nBASIS 0 2\n");

  str report;
  int ok = 0;
  CHECK(gjl_verify(a.m, b.m, &report.s, &ok) == GJL_OK);
  CHECK(ok == 1);

  auto bad = parse("2 1\n1\n1\n");
  handle rhs;
  REQUIRE(gjl_vector_parse("2 1\n1\n2\n", GJL_FIELD_RAT, 0, &rhs.m) == GJL_OK);
  str out2;
  CHECK(gjl_solve(bad.m, rhs.m, &out2.s, nullptr) == GJL_ABSENT);
  CHECK(out2.get() == "INCONSISTENT\n");
}

TEST_CASE("field mismatch between A and b is a shape error") {
  auto a = parse("1 1\n1\n", GJL_FIELD_GF2);
  handle b;
  REQUIRE(gjl_vector_parse("1 1\n1\n", GJL_FIELD_RAT, 0, &b.m) == GJL_OK);
  str out;
  CHECK(gjl_solve(a.m, b.m, &out.s, nullptr) == GJL_ERR_SHAPE);
}

TEST_CASE("bases report") {
  auto a = parse("2 2\n1 2\n2 4\n");
  str out;
  REQUIRE(gjl_bases(a.m, &out.s) == GJL_OK);
  auto text = out.get();
  CHECK(text.find("ROWSPACE\nBASIS 1 2\n1 2\n") != std::string::npos);
  CHECK(text.find("COLSPACE\nBASIS 1 2\n1 2\n") != std::string::npos);
  CHECK(text.find("NULLSPACE\nBASIS 1 2\n") != std::string::npos);
  CHECK(text.find("LEFTNULLSPACE\nBASIS 1 2\n") != std::string::npos);
}

TEST_CASE("random generation and bench CSV") {
  handle a;
  REQUIRE(gjl_matrix_random(GJL_FIELD_GF2, 0, 8, 8, 42, 0, &a.m) == GJL_OK);
  CHECK(gjl_matrix_rows(a.m) == 8);

  uint64_t sizes[] = {8, 16};
  str csv;
  REQUIRE(gjl_bench("rref", GJL_FIELD_GF2, 0, sizes, 2, 2, 1, 0, 60.0, &csv.s) == GJL_OK);
  CHECK(csv.get().rfind("operation,field,n,median_seconds,op_count\n", 0) == 0);
  CHECK(csv.get().find("rref,gf2,16,") != std::string::npos);
}
