#include "apngamma/gf2n.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "apngamma/error.hpp"
#include "apngamma/vecfn.hpp"

namespace apngamma {

namespace {

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
  return a;
}

}  // namespace

bool is_irreducible(Word poly) {
  if (poly < 2) return false;
  const int d = poly_degree(poly);
  for (std::uint64_t q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

Word default_poly(int n) {
  switch (n) {
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    case 6: return 0b1000011;
    case 7: return 0b10000011;
    case 8: return 0b100011011;
    case 9: return 0b1000010001;
    case 10: return 0b10000001001;
    case 11: return 0b100000000101;
    default:
      throw Error(ErrorKind::InvalidArgument,
                  "no default polynomial for n = " + std::to_string(n) +
                      " (pass one explicitly)");
  }
}

FieldSpec::FieldSpec(int n, Word poly) : n_(n), poly_(poly) {
  F2Set::check_dim(n);
  if (poly == 0 || poly_degree(poly) != n) {
    throw Error(ErrorKind::InvalidArgument,
                "polynomial " + std::to_string(poly) +
                    " does not have degree " + std::to_string(n));
  }
  if (!is_irreducible(poly)) {
    throw Error(ErrorKind::InvalidArgument,
                "polynomial " + std::to_string(poly) + " is reducible");
  }
}

FieldSpec FieldSpec::with_default_poly(int n) {
  return FieldSpec(n, default_poly(n));
}

Word mul(const FieldSpec& spec, Word x, Word y) {
  const int n = spec.degree();
  const Word top = Word{1} << n;
  Word acc = 0;
  while (y != 0) {
    if (y & 1u) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= spec.poly();
  }
  return acc;
}

Word pow(const FieldSpec& spec, Word x, std::uint64_t d) {
  Word result = 1;
  Word base = x;
  while (d != 0) {
    if (d & 1u) result = mul(spec, result, base);
    base = mul(spec, base, base);
    d >>= 1;
  }
  return result;
}

Word inv(const FieldSpec& spec, Word x) {
  if (x == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return pow(spec, x, (std::uint64_t{1} << spec.degree()) - 2);
}

int trace(const FieldSpec& spec, Word x) {
  Word acc = 0;
  Word conj = x;
  for (int i = 0; i < spec.degree(); ++i) {
    acc ^= conj;
    conj = mul(spec, conj, conj);
  }
  if (acc > 1) {
    throw Error(ErrorKind::AlgorithmMismatch, "trace left the prime field");
  }
  return static_cast<int>(acc);
}

VecFn monomial_vecfn(const FieldSpec& spec, std::uint64_t d) {
  const std::size_t size = std::size_t{1} << spec.degree();
  std::vector<Word> table(size);
  for (Word x = 0; x < size; ++x) table[x] = pow(spec, x, d);
  return VecFn(spec.degree(), std::move(table));
}

VecFn gold_vecfn(const FieldSpec& spec, int k) {
  const int n = spec.degree();
  if (k < 1 || k >= n) {
    throw Error(ErrorKind::InvalidArgument,
                "Gold parameter k = " + std::to_string(k) + " outside 1.." +
                    std::to_string(n - 1));
  }
  if (std::gcd(n, k) != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "gcd(n,k) != 1 for n = " + std::to_string(n) +
                    ", k = " + std::to_string(k));
  }
  return monomial_vecfn(spec, (std::uint64_t{1} << k) + 1);
}

VecFn univariate_vecfn(const FieldSpec& spec,
                       const std::vector<UnivariateTerm>& terms) {
  const std::size_t size = std::size_t{1} << spec.degree();
  std::vector<Word> table(size, 0);
  for (const auto& t : terms) {
    if (t.coeff > spec.order_mask()) {
      throw Error(ErrorKind::InvalidArgument,
                  "coefficient " + std::to_string(t.coeff) +
                      " is not a field element");
    }
    for (Word x = 0; x < size; ++x) {
      table[x] ^= mul(spec, t.coeff, pow(spec, x, t.exponent));
    }
  }
  return VecFn(spec.degree(), std::move(table));
}

LinearFn trace_dual_map(const FieldSpec& spec) {
  const int n = spec.degree();
  // Column j of tau is tau(x^j); its bit i is trace(x^j * x^i).
  std::vector<Word> images(n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (trace(spec, mul(spec, bits::unit(j), bits::unit(i)))) {
        images[j] |= bits::unit(i);
      }
    }
  }
  return LinearFn(n, std::move(images));
}

}  // namespace apngamma
