#include <numeric>

#include "apngamma/error.hpp"
#include "apngamma/gf2n.hpp"
#include "apngamma/vecfn.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace apngamma;

namespace {
const FieldSpec kGF8(3, 0b1011);
}

TEST_CASE("GF(8) multiplication, powers and inverses") {
  CHECK(mul(kGF8, 2, 2) == 4);
  CHECK(mul(kGF8, 3, 2) == 6);
  for (Word x = 0; x < 8; ++x) CHECK(mul(kGF8, x, 1) == x);
  CHECK(pow(kGF8, 2, 7) == 1);
  CHECK(inv(kGF8, 2) == 5);
  CHECK(inv(kGF8, 1) == 1);
  CHECK_THROWS_AS(inv(kGF8, 0), Error);
  CHECK(pow(kGF8, 0, 0) == 1);
}

TEST_CASE("GF(8) trace") {
  CHECK(trace(kGF8, 0) == 0);
  CHECK(trace(kGF8, 1) == 1);
  CHECK(trace(kGF8, 2) == 0);
}

TEST_CASE("arithmetic against the polynomial oracles for every default field") {
  for (int n = 3; n <= 11; ++n) {
    const FieldSpec spec = FieldSpec::with_default_poly(n);
    const Word poly = spec.poly();
    REQUIRE(is_irreducible(poly));
    const Word size = Word{1} << n;
    const Word step = n <= 7 ? 1 : 37;
    for (Word x = 0; x < size; x += step) {
      for (Word y = 0; y < size; y += step) REQUIRE(mul(spec, x, y) == oracle::field_mul(x, y, poly, n));
      REQUIRE(trace(spec, x) == oracle::field_trace(x, poly, n));
      for (std::uint64_t d : {0u, 1u, 3u, 5u, 9u, 17u}) REQUIRE(pow(spec, x, d) == oracle::field_pow(x, d, poly, n));
      if (x != 0) REQUIRE(inv(spec, x) == oracle::field_inv(x, poly, n));
    }
  }
}

TEST_CASE("field axioms in GF(32)") {
  const FieldSpec spec = FieldSpec::with_default_poly(5);
  for (Word x = 0; x < 32; ++x) {
    for (Word y = 0; y < 32; ++y) {
      REQUIRE(mul(spec, x, y) == mul(spec, y, x));
      for (Word z = 0; z < 32; ++z) {
        REQUIRE(mul(spec, mul(spec, x, y), z) == mul(spec, x, mul(spec, y, z)));
        REQUIRE(mul(spec, x, y ^ z) == (mul(spec, x, y) ^ mul(spec, x, z)));
      }
      REQUIRE(trace(spec, x ^ y) == (trace(spec, x) ^ trace(spec, y)));
    }
    if (x) REQUIRE(mul(spec, x, inv(spec, x)) == 1);
  }
}

TEST_CASE("field construction validates the modulus") {
  CHECK_THROWS_AS(FieldSpec(3, 0b1111), Error);   // (x+1)(x^2+x+1)... reducible
  CHECK_THROWS_AS(FieldSpec(3, 0b10011), Error);  // wrong degree
  CHECK_THROWS_AS(FieldSpec(4, 0b10101), Error);  // (x^2+x+1)^2
  CHECK_NOTHROW(FieldSpec(4, 0b11001));
  CHECK_FALSE(is_irreducible(0b101));
  CHECK(is_irreducible(0b111));
}

TEST_CASE("monomial and Gold tables") {
  CHECK(monomial_vecfn(kGF8, 1) == VecFn::identity(3));
  CHECK(monomial_vecfn(kGF8, 3).table == std::vector<Word>{0, 1, 3, 4, 5, 6, 7, 2});
  CHECK(monomial_vecfn(kGF8, 0).table == std::vector<Word>(8, 1));
  CHECK(gold_vecfn(kGF8, 1).table == std::vector<Word>{0, 1, 3, 4, 5, 6, 7, 2});

  const FieldSpec gf32 = FieldSpec::with_default_poly(5);
  const VecFn x5 = gold_vecfn(gf32, 2);
  CHECK(x5 == monomial_vecfn(gf32, 5));
  CHECK(is_apn(x5));
  for (int n = 3; n <= 9; ++n) {
    const FieldSpec spec = FieldSpec::with_default_poly(n);
    for (int k = 1; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      REQUIRE(gold_vecfn(spec, k).table == oracle::gold_table(n, k, spec.poly()));
    }
  }
  CHECK_THROWS_AS(gold_vecfn(FieldSpec::with_default_poly(4), 2), Error);
  CHECK_THROWS_AS(gold_vecfn(kGF8, 0), Error);
  CHECK_THROWS_AS(gold_vecfn(kGF8, 3), Error);
}

TEST_CASE("degree of a power map is the 2-weight of its exponent") {
  for (int n = 3; n <= 8; ++n) {
    const FieldSpec spec = FieldSpec::with_default_poly(n);
    const std::uint64_t order = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t d = 1; d < order; ++d) {
      REQUIRE(vec_degree(monomial_vecfn(spec, d)) == std::popcount(d));
    }
  }
}

TEST_CASE("univariate polynomials") {
  // x^3 + x over GF(8) equals the Gold table plus the identity.
  const VecFn f = univariate_vecfn(kGF8, {{1, 3}, {1, 1}});
  for (Word x = 0; x < 8; ++x) CHECK(f(x) == (gold_vecfn(kGF8, 1)(x) ^ x));
  CHECK_THROWS_AS(univariate_vecfn(kGF8, {{8, 3}}), Error);
  const VecFn scaled = univariate_vecfn(kGF8, {{3, 3}});
  for (Word x = 0; x < 8; ++x) CHECK(scaled(x) == mul(kGF8, 3, pow(kGF8, x, 3)));
}

TEST_CASE("trace-dual map") {
  const LinearFn tau = trace_dual_map(kGF8);
  CHECK(tau(1) == 1);
  CHECK(tau(2) == 4);
  CHECK(tau.rank() == 3);
  for (int n = 3; n <= 9; ++n) {
    const FieldSpec spec = FieldSpec::with_default_poly(n);
    const LinearFn t = trace_dual_map(spec);
    REQUIRE(t.rank() == n);
    for (Word u = 0; u < (Word{1} << n); u += 3)
      for (Word y = 0; y < (Word{1} << n); y += 5)
        REQUIRE(bits::dot(t(u), y) == trace(spec, mul(spec, u, y)));
  }
}
