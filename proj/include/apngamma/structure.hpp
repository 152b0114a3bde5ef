#pragma once

// Checks on the image of Phi_F, the weight of phi_F and the algebraic
// degrees of Phi_F.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apngamma/boolfn.hpp"
#include "apngamma/vecfn.hpp"

namespace apngamma {

enum class Verdict { Pass, Fail, Skipped };
const char* to_string(Verdict v);

struct PreimageInfo {
  std::size_t size = 0;
  bool is_subspace_with_zero = false;
  int dimension = -1;  // meaningful when is_subspace_with_zero
};

struct ImageReport {
  std::size_t distinct_nonzero_values = 0;
  bool is_permutation = false;
  std::map<Word, PreimageInfo> preimages;  // keyed by nonzero value v
};

ImageReport image_stats(const VecFn& Phi);

// Preimage A_v as a sorted list (excluding 0 unless v == Phi(0)).
std::vector<Word> preimage(const VecFn& Phi, Word v);

struct RestrictionLinearity {
  bool ok = true;
  std::map<Word, Word> coefficients;  // v -> c_v
  std::map<Word, std::uint64_t> restricted_weight;  // v -> wt(phi on A_v)
  std::optional<Word> failing_value;
};

// Finds c_v with phi(x) = dot(c_v, x) on every x in A_v. Throws for odd n.
RestrictionLinearity phi_restriction_linearity(const GammaDecomp& decomp,
                                               const ImageReport& report);

struct ParityVerdict {
  std::uint64_t weight = 0;
  bool weight_odd = false;
  int degree = 0;
  bool expected_odd = false;
  // Even n: odd weight is proven; odd n: even weight is conjectured.
  bool is_theorem = false;
  bool pass = false;
};

ParityVerdict phi_weight_parity(const BoolFn& phi);

struct CoordinateShape {
  int coordinate = 0;  // 0-based output bit
  bool ok = false;
  int lambda = 0;
  int degree = 0;
  int top_monomials = 0;  // masks of weight >= n-1 present
};

struct DegreeReport {
  int n = 0;
  std::vector<int> per_component;  // index v; entry 0 is the zero component
  int min = 0;
  int max = 0;
  bool all_n_minus_2 = false;
  std::optional<Word> first_off_n_minus_2;
  std::vector<CoordinateShape> coordinate_structure;
};

DegreeReport component_degrees(const VecFn& Phi);

// Legal ANF shapes in the weight >= n-1 layer for even n >= 4: none of the
// top masks, or all n masks of weight n-1 together with the full mask.
std::vector<CoordinateShape> coordinate_structure(const VecFn& Phi);

// Max over the basis maps L_{ij}: x -> x_j e^i of deg(dot(L(a), Phi(a))).
// Returns the first (i, j), 0-based, reaching degree n.
std::optional<std::pair<int, int>> full_degree_linear_shift(const VecFn& Phi);

}  // namespace apngamma
