#pragma once

// Vectorial functions F_2^n -> F_2^n, the APN property and the associated
// Boolean function gamma_F(a, b) = Phi_F(a).b + phi_F(a) + 1.

#include <random>
#include <vector>

#include "apngamma/boolfn.hpp"
#include "apngamma/f2core.hpp"

namespace apngamma {

class FieldSpec;

struct VecFn {
  int n = 0;
  std::vector<Word> table;

  VecFn() = default;
  VecFn(int n, std::vector<Word> table);

  static VecFn identity(int n);

  Word operator()(Word x) const { return table[x]; }
  std::size_t size() const noexcept { return table.size(); }
  bool operator==(const VecFn&) const = default;
};

// L(x) = sum over set bits x_i of images[i]; L(0) = 0.
struct LinearFn {
  int n = 0;
  std::vector<Word> images;

  LinearFn() = default;
  LinearFn(int n, std::vector<Word> images);

  static LinearFn zero(int n) { return LinearFn(n, std::vector<Word>(n, 0)); }
  static LinearFn random(int n, std::mt19937_64& rng);

  Word operator()(Word x) const;
  VecFn table() const;
  int rank() const;
};

BoolFn component(const VecFn& f, Word v);
BoolFn coordinate(const VecFn& f, int i);  // 0-based bit i

int vec_degree(const VecFn& f);
bool is_quadratic(const VecFn& f);

// B_a(F) = {F(x) + F(x + a)}.
F2Set derivative_image(const VecFn& f, Word a);

bool is_apn(const VecFn& f);

// gamma_F on 2n variables, index a * 2^n + b.
inline constexpr int kMaxGammaDim = 11;
BoolFn gamma(const VecFn& f);

struct GammaDecomp {
  int n = 0;
  VecFn Phi;
  BoolFn phi{0};

  // Gamma rebuilt from the pair: dot(Phi(a), b) + phi(a) + 1 for a != 0.
  BoolFn reconstruct_gamma() const;
};

// Requires quadratic APN input. Both the direct (orthogonal complement of
// the translated B_a) and kernel (via L_a(e^j)) routes are run for every a
// and must agree.
GammaDecomp gamma_decompose(const VecFn& f);

VecFn add_linear(const VecFn& f, const LinearFn& l);

// u(a) with trace(u(a) * y) == dot(Phi(a), y).
std::vector<Word> trace_form_phi(const GammaDecomp& decomp,
                                 const FieldSpec& spec);

}  // namespace apngamma
