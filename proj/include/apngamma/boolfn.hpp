#pragma once

// Single-output Boolean functions on bit-packed truth tables.

#include <cstdint>
#include <span>
#include <vector>

#include "apngamma/f2core.hpp"

namespace apngamma {

// Truth-table functions support more variables than the vector core so that
// gamma_F (2n variables) fits for n <= 11.
inline constexpr int kMaxBoolVars = 24;

class BoolFn {
 public:
  explicit BoolFn(int n);  // constant zero
  // Table of 0/1 values indexed by input, length 2^n.
  static BoolFn from_table(int n, std::span<const std::uint8_t> table);
  static BoolFn constant(int n, int value);

  int vars() const noexcept { return n_; }
  std::size_t size() const noexcept { return std::size_t{1} << n_; }

  int get(std::uint64_t x) const noexcept {
    return static_cast<int>((words_[x >> 6] >> (x & 63)) & 1u);
  }
  void set(std::uint64_t x, int bit) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (x & 63);
    if (bit & 1) {
      words_[x >> 6] |= m;
    } else {
      words_[x >> 6] &= ~m;
    }
  }
  void flip(std::uint64_t x) noexcept {
    words_[x >> 6] ^= std::uint64_t{1} << (x & 63);
  }

  std::uint64_t weight() const noexcept;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool operator==(const BoolFn&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// ANF as the set of monomial masks with coefficient 1, sorted ascending.
struct AnfPoly {
  int n = 0;
  std::vector<Word> monomials;

  bool contains(Word mask) const;
  bool operator==(const AnfPoly&) const = default;
};

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> coefficients;

  std::int64_t operator[](std::size_t u) const { return coefficients[u]; }
};

// In-place binary Moebius transform over the packed table. It is an
// involution: applied to a truth table it yields the ANF coefficient table
// and vice versa.
void moebius_inplace(BoolFn& f) noexcept;

BoolFn anf_table(const BoolFn& f);
AnfPoly moebius(const BoolFn& f);
BoolFn from_anf(const AnfPoly& p);

// Algebraic degree; 0 for constants (including the zero function).
int degree(const BoolFn& f);
// Largest popcount over the set bits of a coefficient table.
int max_monomial_weight(const BoolFn& anf);

WalshSpectrum walsh(const BoolFn& f);

// ANF coefficient at a != 0 from Walsh values:
//   (2^{wt(a)-1} - 2^{wt(a)-n-1} * sum_{b <= a+1} W_f(b)) mod 2,
// evaluated with exact integers. Throws for a == 0.
int anf_coeff_via_walsh(const WalshSpectrum& spectrum, Word a);
int anf_coeff_via_walsh(const BoolFn& f, Word a);

// |W_f(u)| == 2^{n/2} for every u; n must be even.
bool is_bent(const WalshSpectrum& spectrum);
bool is_bent(const BoolFn& f);

}  // namespace apngamma
