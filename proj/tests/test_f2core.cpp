#include <random>
#include <set>

#include "apngamma/error.hpp"
#include "apngamma/f2core.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace apngamma;

TEST_CASE("dot, weight and precedes on small vectors") {
  for (Word y = 0; y < 8; ++y) CHECK(dot(F2Vec(0, 3), F2Vec(y, 3)) == 0);
  CHECK(dot(F2Vec(0b101, 3), F2Vec(0b100, 3)) == 1);
  CHECK(dot(F2Vec(0b111, 3), F2Vec(0b111, 3)) == 1);

  CHECK(weight(F2Vec(0, 4)) == 0);
  CHECK(weight(F2Vec(0b1011, 4)) == 3);
  for (int n = 1; n <= 16; ++n) CHECK(weight(F2Vec::ones(n)) == n);

  for (Word y = 0; y < 8; ++y) CHECK(precedes(F2Vec(0, 3), F2Vec(y, 3)));
  CHECK(precedes(F2Vec(0b101, 3), F2Vec(0b111, 3)));
  CHECK_FALSE(precedes(F2Vec(0b100, 3), F2Vec(0b011, 3)));
}

TEST_CASE("dimension mismatch and range errors") {
  CHECK_THROWS_AS(dot(F2Vec(1, 3), F2Vec(1, 4)), Error);
  CHECK_THROWS_AS(F2Vec(8, 3), Error);
  CHECK_THROWS_AS(F2Vec(0, 17), Error);
  CHECK_THROWS_AS(F2Set(3, {0, 9}), Error);
  CHECK(F2Vec::unit(1, 3).value() == 1);
  CHECK(F2Vec::unit(3, 3).value() == 4);
  CHECK_THROWS_AS(F2Vec::unit(0, 3), Error);
}

TEST_CASE("dot is bilinear, exhaustively for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const Word size = Word{1} << n;
    for (Word x = 0; x < size; ++x)
      for (Word y = 0; y < size; ++y)
        for (Word z = 0; z < size; ++z)
          REQUIRE(bits::dot(x ^ y, z) == (bits::dot(x, z) ^ bits::dot(y, z)));
  }
}

TEST_CASE("precedes is a partial order") {
  const int n = 5;
  for (Word x = 0; x < 32; ++x) {
    CHECK(bits::precedes(x, x));
    for (Word y = 0; y < 32; ++y) {
      if (bits::precedes(x, y) && bits::precedes(y, x)) CHECK(x == y);
      for (Word z = 0; z < 32; ++z) {
        if (bits::precedes(x, y) && bits::precedes(y, z)) CHECK(bits::precedes(x, z));
      }
    }
  }
  (void)n;
}

TEST_CASE("subspace tests and dimension") {
  CHECK(is_linear_subspace(F2Set(3, {0})));
  CHECK(subspace_dimension(F2Set(3, {0})) == 0);
  CHECK(is_linear_subspace(F2Set(3, {0, 1, 2, 3})));
  CHECK(subspace_dimension(F2Set(3, {0, 1, 2, 3})) == 2);
  CHECK_FALSE(is_linear_subspace(F2Set(3, {0, 1, 2})));
  CHECK_FALSE(is_linear_subspace(F2Set(3, {1, 2, 3})));
  CHECK_THROWS_AS(subspace_dimension(F2Set(3, {0, 1, 2})), Error);
  for (int n = 1; n <= 10; ++n) CHECK(subspace_dimension(F2Set::full(n)) == n);
}

TEST_CASE("rank-based subspace test agrees with closure on random sets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4;
    std::set<Word> s;
    // Alternate random sets with spans of random generators.
    if (trial % 2 == 0) {
      for (Word x = 0; x < 16; ++x) {
        if (rng() % 3 == 0) s.insert(x);
      }
    } else {
      s.insert(0);
      for (int g = 0; g < 2; ++g) {
        const Word gen = rng() % 16;
        std::set<Word> next = s;
        for (Word x : s) next.insert(x ^ gen);
        s = next;
      }
    }
    const F2Set set(n, std::vector<Word>(s.begin(), s.end()));
    const bool sub = is_linear_subspace(set);
    REQUIRE(sub == oracle::is_subspace(s));
    if (sub) REQUIRE(set.size() == (std::size_t{1} << subspace_dimension(set)));
  }
}

TEST_CASE("coordinate hyperplane detection") {
  CHECK(coordinate_hyperplane_index(F2Set(3, {0, 1, 4, 5})) == std::optional<int>(2));
  CHECK_FALSE(coordinate_hyperplane_index(F2Set::full(3)).has_value());
  CHECK_FALSE(coordinate_hyperplane_index(F2Set(3, {0, 1, 2, 3, 4, 5, 6})).has_value());
  // Right size but not a coordinate hyperplane.
  CHECK_FALSE(coordinate_hyperplane_index(F2Set(3, {0, 3, 5, 6})).has_value());
  for (int n = 2; n <= 8; ++n) {
    for (int m = 1; m <= n; ++m) {
      std::vector<Word> h;
      for (Word x = 0; x < (Word{1} << n); ++x) {
        if (((x >> (m - 1)) & 1u) == 0) h.push_back(x);
      }
      const F2Set s(n, h);
      REQUIRE(coordinate_hyperplane_index(s) == std::optional<int>(m));
      REQUIRE(is_linear_subspace(s));
    }
  }
}

TEST_CASE("orthogonal complement and linear solve") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<Word> rows(rng() % (n + 2));
    for (Word& r : rows) r = static_cast<Word>(rng()) & bits::full_mask(n);
    const auto kernel = orthogonal_complement(rows, n);
    REQUIRE(static_cast<int>(kernel.size()) == n - rank(rows));
    REQUIRE(rank(kernel) == static_cast<int>(kernel.size()));
    for (Word v : kernel)
      for (Word r : rows) REQUIRE(bits::dot(v, r) == 0);

    std::vector<int> rhs(rows.size());
    for (int& b : rhs) b = static_cast<int>(rng() & 1u);
    const auto x = solve(rows, rhs, n);
    // Brute-force solvability.
    bool solvable = false;
    for (Word c = 0; c < (Word{1} << n) && !solvable; ++c) {
      bool ok = true;
      for (std::size_t k = 0; k < rows.size(); ++k) ok = ok && bits::dot(rows[k], c) == rhs[k];
      solvable = ok;
    }
    REQUIRE(x.has_value() == solvable);
    if (x) {
      for (std::size_t k = 0; k < rows.size(); ++k) REQUIRE(bits::dot(rows[k], *x) == rhs[k]);
    }
  }
}
