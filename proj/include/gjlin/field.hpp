#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gjlin/error.hpp"

namespace gjlin {

enum class field_id { gf2, rat, real };

inline const char* field_name(field_id f) {
  switch (f) {
    case field_id::gf2: return "gf2";
    case field_id::rat: return "rat";
    default: return "real";
  }
}

/// The two-element field. Addition is XOR, multiplication is AND; the only
/// nonzero element is its own inverse.
struct gf2_field {
  using element = std::uint8_t;
  static constexpr field_id id = field_id::gf2;

  element zero() const { return 0; }
  element one() const { return 1; }
  element add(element a, element b) const { return a ^ b; }
  element sub(element a, element b) const { return a ^ b; }
  element neg(element a) const { return a; }
  element mul(element a, element b) const { return a & b; }
  element inv(element a) const {
    if (a == 0) throw error(errc::domain, "gf2: inverse of zero");
    return 1;
  }
  element div(element a, element b) const { return mul(a, inv(b)); }
  bool is_zero(element a) const { return a == 0; }
  bool eq(element a, element b) const { return a == b; }

  element parse(std::string_view text) const {
    if (text == "0") return 0;
    if (text == "1") return 1;
    if (text.size() == 1 && text[0] >= '2' && text[0] <= '9')
      throw error(errc::domain, "gf2: digit outside {0,1}: '" + std::string(text) + "'");
    throw error(errc::parse, "gf2: expected 0 or 1, got '" + std::string(text) + "'");
  }
  std::string format(element a) const { return a ? "1" : "0"; }
};

/// Arbitrary-precision rationals kept in canonical form: positive denominator,
/// numerator and denominator coprime. Equality is structural.
struct rational_field {
  using element = mpq_class;
  static constexpr field_id id = field_id::rat;

  element zero() const { return mpq_class(0); }
  element one() const { return mpq_class(1); }
  element add(const element& a, const element& b) const { return a + b; }
  element sub(const element& a, const element& b) const { return a - b; }
  element neg(const element& a) const { return -a; }
  element mul(const element& a, const element& b) const { return a * b; }
  element inv(const element& a) const {
    if (sgn(a) == 0) throw error(errc::domain, "rat: inverse of zero");
    return 1 / a;
  }
  element div(const element& a, const element& b) const { return mul(a, inv(b)); }
  bool is_zero(const element& a) const { return sgn(a) == 0; }
  bool eq(const element& a, const element& b) const { return a == b; }

  // grammar: [+-]? digits ( '/' digits )?
  element parse(std::string_view text) const {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> error {
      return error(errc::parse, "rat: " + msg + " at position " + std::to_string(pos) +
                                    " in '" + std::string(text) + "'");
    };
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t num_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_start) throw fail("expected digit");
    if (pos < text.size()) {
      if (text[pos] != '/') throw fail("unexpected character");
      ++pos;
      std::size_t den_start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == den_start || pos != text.size()) throw fail("expected denominator digits");
    }
    std::string digits(text);
    if (digits[0] == '+') digits.erase(0, 1); // mpq set_str rejects a leading '+'
    mpq_class q(digits, 10);
    if (q.get_den() == 0) throw error(errc::domain, "rat: zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
  }
  std::string format(const element& a) const { return a.get_str(); }
};

/// Double-precision approximation of the reals. Zero detection is an absolute
/// threshold carried by the field instance, not by the elements.
struct real_field {
  using element = double;
  static constexpr field_id id = field_id::real;

  double eps = 1e-12;

  element zero() const { return 0.0; }
  element one() const { return 1.0; }
  element add(element a, element b) const { return a + b; }
  element sub(element a, element b) const { return a - b; }
  element neg(element a) const { return -a; }
  element mul(element a, element b) const { return a * b; }
  element inv(element a) const {
    if (is_zero(a)) throw error(errc::domain, "real: inverse of (near-)zero");
    return 1.0 / a;
  }
  element div(element a, element b) const { return mul(a, inv(b)); }
  bool is_zero(element a) const { return std::fabs(a) <= eps; }
  bool eq(element a, element b) const { return a == b; }

  element parse(std::string_view text) const {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
      throw error(errc::parse, "real: malformed number '" + std::string(text) + "' at position " +
                                   std::to_string(ptr - first));
    if (!std::isfinite(v))
      throw error(errc::domain, "real: non-finite value '" + std::string(text) + "'");
    return v;
  }
  std::string format(element a) const {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), a);
    (void)ec;
    return std::string(buf, ptr);
  }
};

// --- randomized field-law checking ------------------------------------------

struct law_violation {
  std::string law;
  std::string witness;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// uniform draw in [0, bound) by rejection; portable across platforms
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53; // [0,1)
}

inline gf2_field::element sample_element(const gf2_field&, std::mt19937_64& rng) {
  return static_cast<std::uint8_t>(bounded(rng, 2));
}

inline rational_field::element sample_element(const rational_field&, std::mt19937_64& rng) {
  long num = static_cast<long>(bounded(rng, 201)) - 100;
  long den = static_cast<long>(bounded(rng, 20)) + 1;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline real_field::element sample_element(const real_field&, std::mt19937_64& rng) {
  // mixed magnitudes so rounding effects show up
  double v = 2.0 * unit_double(rng) - 1.0;
  int scale = static_cast<int>(bounded(rng, 13)) - 6;
  return std::ldexp(v, 4 * scale);
}

} // namespace detail

/// Randomized check of the field axioms; violations are reported, not thrown.
/// Exact fields come back clean; doubles fail associativity/distributivity.
template <typename F>
std::vector<law_violation> field_laws_check(const F& f, int samples, std::uint64_t seed) {
  if (samples < 1) throw error(errc::domain, "field_laws_check: samples must be >= 1");
  std::vector<law_violation> out;
  std::mt19937_64 rng(seed);
  auto witness = [&f](const typename F::element& a, const typename F::element& b,
                      const typename F::element& c) {
    return "a=" + f.format(a) + " b=" + f.format(b) + " c=" + f.format(c);
  };
  auto report = [&](const char* law, const std::string& w) {
    out.push_back({law, w});
  };
  if (!f.is_zero(f.zero())) report("is_zero(zero)", "");
  if (f.is_zero(f.one())) report("!is_zero(one)", "");
  for (int s = 0; s < samples; ++s) {
    auto a = detail::sample_element(f, rng);
    auto b = detail::sample_element(f, rng);
    auto c = detail::sample_element(f, rng);
    if (!f.eq(f.add(a, b), f.add(b, a))) report("add commutative", witness(a, b, c));
    if (!f.eq(f.add(f.add(a, b), c), f.add(a, f.add(b, c)))) report("add associative", witness(a, b, c));
    if (!f.eq(f.mul(a, b), f.mul(b, a))) report("mul commutative", witness(a, b, c));
    if (!f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)))) report("mul associative", witness(a, b, c));
    if (!f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))))
      report("mul distributes over add", witness(a, b, c));
    if (!f.eq(f.add(a, f.zero()), a)) report("additive identity", witness(a, b, c));
    if (!f.eq(f.mul(a, f.one()), a)) report("multiplicative identity", witness(a, b, c));
    if (!f.is_zero(f.add(a, f.neg(a)))) report("additive inverse", witness(a, b, c));
    if (!f.is_zero(a)) {
      if (!f.eq(f.mul(a, f.inv(a)), f.one())) report("multiplicative inverse", witness(a, b, c));
      if (!f.eq(f.div(b, a), f.mul(b, f.inv(a)))) report("div = mul by inverse", witness(a, b, c));
    }
  }
  return out;
}

} // namespace gjlin
