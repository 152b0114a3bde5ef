#pragma once

// GF(2^n) in polynomial basis. Elements share the F2Vec bit encoding:
// bit i is the coefficient of x^i.

#include <cstdint>
#include <vector>

#include "apngamma/f2core.hpp"

namespace apngamma {

struct VecFn;
struct LinearFn;

class FieldSpec {
 public:
  // poly includes the leading x^n bit; irreducibility is verified here.
  FieldSpec(int n, Word poly);

  static FieldSpec with_default_poly(int n);

  int degree() const noexcept { return n_; }
  Word poly() const noexcept { return poly_; }
  Word order_mask() const noexcept { return bits::full_mask(n_); }

 private:
  int n_;
  Word poly_;
};

// Default modulus per extension degree 3..11.
Word default_poly(int n);
bool is_irreducible(Word poly);

Word mul(const FieldSpec& spec, Word x, Word y);
Word pow(const FieldSpec& spec, Word x, std::uint64_t d);
Word inv(const FieldSpec& spec, Word x);
int trace(const FieldSpec& spec, Word x);

// Table of x -> x^d with 0^0 = 1.
VecFn monomial_vecfn(const FieldSpec& spec, std::uint64_t d);
// x^{2^k+1}; requires 1 <= k < n and gcd(n, k) = 1.
VecFn gold_vecfn(const FieldSpec& spec, int k);
// F(x) = sum c_i x^{e_i}.
struct UnivariateTerm {
  Word coeff;
  std::uint64_t exponent;
};
VecFn univariate_vecfn(const FieldSpec& spec,
                       const std::vector<UnivariateTerm>& terms);

// The linear map tau with dot(tau(u), y) == trace(u * y).
LinearFn trace_dual_map(const FieldSpec& spec);

}  // namespace apngamma
