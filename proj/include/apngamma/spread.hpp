#pragma once

// Zero sets M_v = {x : v.Phi(x) = 0}, their partition into 2-dimensional
// subspaces, and the counting identities built on that partition.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apngamma/boolfn.hpp"
#include "apngamma/f2core.hpp"
#include "apngamma/vecfn.hpp"

namespace apngamma {

// Coordinates i, j below are 0-based bit positions.

F2Set zero_set(const GammaDecomp& decomp, Word v);
F2Set zero_set(const BoolFn& g);

enum class RestrictedSet {
  BothZero,    // x_i = 0 and x_j = 0   (M^{ij}_0)
  FirstZero,   // x_i = 0               (M^i)
  SecondZero,  // x_j = 0               (M^j)
  SumZero,     // x_i + x_j = 0         (M^{ij})
};

// |{x : g(x) = 0 and x in the selected coordinate subspace}|.
std::uint64_t restricted_zero_count(const BoolFn& g, int i, int j,
                                    RestrictedSet which = RestrictedSet::BothZero);

struct WalshSumIdentity {
  std::int64_t lhs = 0;          // W(0) + W(e^i) + W(e^j) + W(e^i + e^j)
  std::int64_t rhs = 0;          // 8 |M^{ij}_0| - 2^n
  std::int64_t rhs_halved = 0;   // 8 |M^{ij}_0| - 2^{n-1}
  bool equal = false;            // lhs == rhs
  bool equal_halved = false;     // lhs == rhs_halved
};

WalshSumIdentity walsh_sum_identity(const BoolFn& g, int i, int j);
WalshSumIdentity walsh_sum_identity(const BoolFn& g, const WalshSpectrum& w,
                                    int i, int j);

// First (i, j), i < j, whose four-term Walsh sum of g is not divisible by
// 16, i.e. the ANF of g contains the weight-(n-2) monomial missing x_i, x_j.
std::optional<std::pair<int, int>> degree_witness(const BoolFn& g);
// Same for g = v.Phi; requires odd n >= 5 and v != 0.
std::optional<std::pair<int, int>> degree_witness(const GammaDecomp& decomp,
                                                  Word v);

struct Triple {
  Word x = 0;
  Word y = 0;
  Word z = 0;  // x ^ y

  bool operator==(const Triple&) const = default;
};

struct SpreadDecomp {
  int n = 0;
  std::vector<Triple> triples;

  F2Set union_with_zero() const;
  // Disjointness, XOR-closure and exact coverage of m; throws on violation.
  void validate(const F2Set& m) const;
};

inline constexpr std::uint64_t kDefaultSearchNodes = 200'000'000;

// First partition of M \ {0} into XOR-closed triples in the deterministic
// order: smallest uncovered element first, partners ascending. nullopt when
// no partition exists.
std::optional<SpreadDecomp> decompose_triples(
    const F2Set& m, std::uint64_t node_limit = kDefaultSearchNodes);

// Number of distinct partitions, for |M| <= 32.
std::uint64_t count_triple_decompositions(
    const F2Set& m, std::uint64_t node_limit = kDefaultSearchNodes);

struct NijCounts {
  int i = 0;
  int j = 0;
  std::uint64_t n3 = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n0 = 0;
};

NijCounts count_nijk(const SpreadDecomp& d, int i, int j);

struct ParityLink {
  std::uint64_t m0 = 0;  // |M^{ij}_0|
  NijCounts counts;
  bool counting_identity = false;  // m0 == 1 + 3 N3 + N1
  bool parity_link = false;        // m0 odd <=> N0 odd

  bool ok() const { return counting_identity && parity_link; }
};

// d must partition the zero set of g.
ParityLink parity_link_check(const BoolFn& g, const SpreadDecomp& d, int i,
                             int j);

struct Conjecture3Verdict {
  // Side A: the union is a coordinate hyperplane {x : x_m = 0}.
  bool side_a = false;
  std::optional<int> hyperplane_coordinate;  // 1-based m
  // Side B: N^{ij}_0 is even for every pair i != j.
  bool side_b = false;
  std::optional<std::pair<int, int>> odd_pair;  // 0-based witness
  bool union_is_subspace = false;
  bool agree = false;
  std::string direction;  // "", "hyperplane-but-odd", "even-but-not-hyperplane"
};

Conjecture3Verdict conjecture3_check(const SpreadDecomp& d);

struct Conjecture3Options {
  int threads = 1;
  bool force = false;  // allow n != 5
  std::uint64_t max_nodes = 20'000'000'000ull;
};

struct Conjecture3Summary {
  int n = 0;
  std::uint64_t family_size = 0;
  std::uint64_t subspaces = 0;  // 2-dimensional subspaces of F_2^n
  std::uint64_t families = 0;
  std::uint64_t hyperplane_families = 0;
  std::uint64_t even_families = 0;      // side B holds
  std::uint64_t subspace_families = 0;  // union is any hyperplane
  std::uint64_t counterexamples = 0;
  std::uint64_t hyperplane_but_odd = 0;
  std::uint64_t even_but_not_hyperplane = 0;
  std::vector<Triple> first_counterexample;
};

// All families of (2^{n-1}-1)/3 pairwise trivially intersecting
// 2-dimensional subspaces, each family enumerated once in ascending order.
Conjecture3Summary conjecture3_exhaustive(int n,
                                          const Conjecture3Options& options = {});

// All 2-dimensional subspaces as sorted nonzero triples, lexicographic.
std::vector<Triple> two_dimensional_subspaces(int n);

struct Conjecture4Verdict {
  bool holds = true;
  std::optional<Word> violating_v;
};

// No zero set M_v, v != 0, is a linear subspace; n >= 5.
Conjecture4Verdict conjecture4_check(const GammaDecomp& decomp);

}  // namespace apngamma
