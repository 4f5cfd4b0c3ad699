// Command-line front end for the gjlin kernel; talks to the library through
// the C API only.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gjlin.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_absent = 1; // singular inverse
constexpr int exit_usage = 2;  // bad input or flags

struct options {
  std::string field;
  std::string input;
  std::string rhs;
  std::string output;
  double eps = 1e-12;
  bool track = false;
  bool count_ops = false;
};

gjl_field field_of(const std::string& name) {
  if (name == "gf2") return GJL_FIELD_GF2;
  if (name == "rat") return GJL_FIELD_RAT;
  return GJL_FIELD_REAL;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + opt.output + "'");
  out << text;
}

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(exit_usage);
}

void check(gjl_status st) {
  if (st != GJL_OK && st != GJL_ABSENT) die(gjl_last_error());
}

struct matrix_handle {
  gjl_matrix* m = nullptr;
  ~matrix_handle() { gjl_matrix_free(m); }
};

struct string_handle {
  char* s = nullptr;
  ~string_handle() { gjl_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

matrix_handle load_matrix(const options& opt) {
  matrix_handle h;
  check(gjl_matrix_parse(read_file(opt.input).c_str(), field_of(opt.field), opt.eps, &h.m));
  return h;
}

matrix_handle load_rhs(const options& opt) {
  matrix_handle h;
  check(gjl_vector_parse(read_file(opt.rhs).c_str(), field_of(opt.field), opt.eps, &h.m));
  return h;
}

std::string ops_line(const options& opt, uint64_t ops) {
  return opt.count_ops ? "OPS " + std::to_string(ops) + "\n" : "";
}

int cmd_rref(const options& opt) {
  auto a = load_matrix(opt);
  matrix_handle rref, transform;
  uint64_t rank = 0, ops = 0;
  check(gjl_rref(a.m, &rref.m, opt.track ? &transform.m : nullptr, &rank,
                 opt.count_ops ? &ops : nullptr));
  string_handle text;
  check(gjl_matrix_format(rref.m, &text.s));
  std::string out = text.str();
  if (opt.track) {
    string_handle ptext;
    check(gjl_matrix_format(transform.m, &ptext.s));
    out += "TRANSFORM\n" + ptext.str();
  }
  out += ops_line(opt, ops);
  write_output(opt, out);
  return exit_ok;
}

int cmd_rank(const options& opt) {
  auto a = load_matrix(opt);
  uint64_t rank = 0;
  check(gjl_rank(a.m, &rank));
  write_output(opt, std::to_string(rank) + "\n");
  return exit_ok;
}

int cmd_det(const options& opt) {
  auto a = load_matrix(opt);
  string_handle text;
  uint64_t ops = 0;
  check(gjl_det(a.m, &text.s, opt.count_ops ? &ops : nullptr));
  write_output(opt, text.str() + "\n" + ops_line(opt, ops));
  return exit_ok;
}

int cmd_inverse(const options& opt) {
  auto a = load_matrix(opt);
  matrix_handle inv;
  uint64_t ops = 0;
  gjl_status st = gjl_inverse(a.m, &inv.m, opt.count_ops ? &ops : nullptr);
  check(st);
  if (st == GJL_ABSENT) {
    write_output(opt, "SINGULAR\n" + ops_line(opt, ops));
    return exit_absent;
  }
  string_handle text;
  check(gjl_matrix_format(inv.m, &text.s));
  write_output(opt, text.str() + ops_line(opt, ops));
  return exit_ok;
}

int cmd_solve(const options& opt) {
  auto a = load_matrix(opt);
  auto b = load_rhs(opt);
  string_handle text;
  uint64_t ops = 0;
  gjl_status st = gjl_solve(a.m, b.m, &text.s, opt.count_ops ? &ops : nullptr);
  check(st); // GJL_ABSENT (inconsistent) still prints and exits 0
  write_output(opt, text.str() + ops_line(opt, ops));
  return exit_ok;
}

int cmd_bases(const options& opt) {
  auto a = load_matrix(opt);
  string_handle text;
  check(gjl_bases(a.m, &text.s));
  write_output(opt, text.str());
  return exit_ok;
}

int cmd_verify(const options& opt) {
  auto a = load_matrix(opt);
  auto b = load_rhs(opt);
  string_handle report;
  int ok = 0;
  check(gjl_verify(a.m, b.m, &report.s, &ok));
  write_output(opt, report.str());
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss-Jordan linear algebra kernel over gf2, exact rationals, and doubles"};
  app.require_subcommand(1);

  options opt;
  std::string bench_op = "rref";
  std::string sizes_arg = "64,128,256";
  std::string csv_path;
  uint64_t reps = 3, seed = 0;
  bool big_int = false;
  double timeout = 60.0;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    cmd->add_option("--field", opt.field, "scalar field")
        ->required()
        ->check(CLI::IsMember({"gf2", "rat", "real"}));
    cmd->add_option("--eps", opt.eps, "zero threshold for the real field");
    cmd->add_option("--output", opt.output, "write result to file instead of stdout");
    if (needs_input) cmd->add_option("--input", opt.input, "matrix file")->required();
  };

  auto* rref_cmd = app.add_subcommand("rref", "reduced row echelon form");
  add_common(rref_cmd, true);
  rref_cmd->add_flag("--track", opt.track, "also print the transformation matrix P");
  rref_cmd->add_flag("--count-ops", opt.count_ops, "print the elementary-operation count");

  auto* rank_cmd = app.add_subcommand("rank", "rank of the matrix");
  add_common(rank_cmd, true);

  auto* det_cmd = app.add_subcommand("det", "determinant of a square matrix");
  add_common(det_cmd, true);
  det_cmd->add_flag("--count-ops", opt.count_ops, "print the elementary-operation count");

  auto* inv_cmd = app.add_subcommand("inverse", "matrix inverse (SINGULAR when absent)");
  add_common(inv_cmd, true);
  inv_cmd->add_flag("--count-ops", opt.count_ops, "print the elementary-operation count");

  auto* solve_cmd = app.add_subcommand("solve", "general solution of A*x = b");
  add_common(solve_cmd, true);
  solve_cmd->add_option("--rhs", opt.rhs, "right-hand-side vector file")->required();
  solve_cmd->add_flag("--count-ops", opt.count_ops, "print the elementary-operation count");

  auto* bases_cmd = app.add_subcommand("bases", "bases of the four fundamental subspaces");
  add_common(bases_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify", "solve A*x = b and re-verify by substitution");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--rhs", opt.rhs, "right-hand-side vector file")->required();

  auto* bench_cmd = app.add_subcommand("bench", "timing and operation-count table");
  bench_cmd->add_option("--field", opt.field, "scalar field")
      ->required()
      ->check(CLI::IsMember({"gf2", "rat", "real"}));
  bench_cmd->add_option("--op", bench_op, "operation to benchmark")
      ->check(CLI::IsMember({"rref", "det", "inverse", "solve"}));
  bench_cmd->add_option("--sizes", sizes_arg, "comma-separated matrix sizes");
  bench_cmd->add_option("--reps", reps, "repetitions per size");
  bench_cmd->add_option("--seed", seed, "random seed");
  bench_cmd->add_option("--csv", csv_path, "write CSV to file instead of stdout");
  bench_cmd->add_flag("--big-int", big_int, "rat field: integer entries up to 1e20");
  bench_cmd->add_option("--eps", opt.eps, "zero threshold for the real field");
  bench_cmd->add_option("--timeout", timeout, "per-cell timeout in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (rref_cmd->parsed()) return cmd_rref(opt);
    if (rank_cmd->parsed()) return cmd_rank(opt);
    if (det_cmd->parsed()) return cmd_det(opt);
    if (inv_cmd->parsed()) return cmd_inverse(opt);
    if (solve_cmd->parsed()) return cmd_solve(opt);
    if (bases_cmd->parsed()) return cmd_bases(opt);
    if (verify_cmd->parsed()) return cmd_verify(opt);
    if (bench_cmd->parsed()) {
      std::vector<uint64_t> sizes;
      std::stringstream ss(sizes_arg);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) sizes.push_back(std::stoull(item));
      }
      if (sizes.empty()) die("--sizes must name at least one size");
      string_handle csv;
      check(gjl_bench(bench_op.c_str(), field_of(opt.field), opt.eps, sizes.data(),
                      sizes.size(), reps, seed, big_int ? 1 : 0, timeout, &csv.s));
      if (csv_path.empty()) {
        std::cout << csv.str();
      } else {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) die("cannot open CSV output file '" + csv_path + "'");
        out << csv.str();
      }
      return exit_ok;
    }
  } catch (const std::exception& e) {
    die(e.what());
  }
  return exit_usage;
}
