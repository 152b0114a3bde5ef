#include "apngamma/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "apngamma/error.hpp"

namespace apngamma {

namespace {

constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

std::size_t word_count(int n) {
  return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
}

std::uint64_t valid_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1;
}

void check_vars(int n) {
  if (n < 0 || n > kMaxBoolVars) {
    throw Error(ErrorKind::InvalidArgument,
                "Boolean function with " + std::to_string(n) +
                    " variables unsupported (max " +
                    std::to_string(kMaxBoolVars) + ")");
  }
}

}  // namespace

BoolFn::BoolFn(int n) : n_(n) {
  check_vars(n);
  words_.assign(word_count(n), 0);
}

BoolFn BoolFn::from_table(int n, std::span<const std::uint8_t> table) {
  BoolFn f(n);
  if (table.size() != f.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "truth table needs " + std::to_string(f.size()) +
                    " entries, got " + std::to_string(table.size()));
  }
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x] > 1) {
      throw Error(ErrorKind::InvalidArgument, "truth table entry not 0/1");
    }
    f.set(x, table[x]);
  }
  return f;
}

BoolFn BoolFn::constant(int n, int value) {
  BoolFn f(n);
  if (value & 1) {
    std::fill(f.words_.begin(), f.words_.end(), ~std::uint64_t{0});
    f.words_.back() &= valid_mask(n);
  }
  return f;
}

std::uint64_t BoolFn::weight() const noexcept {
  std::uint64_t w = 0;
  for (std::uint64_t word : words_) w += std::popcount(word);
  return w;
}

bool AnfPoly::contains(Word mask) const {
  return std::binary_search(monomials.begin(), monomials.end(), mask);
}

void moebius_inplace(BoolFn& f) noexcept {
  const int n = f.vars();
  auto words = f.words();
  const int inner = std::min(n, 6);
  for (int s = 0; s < inner; ++s) {
    const unsigned shift = 1u << s;
    for (std::uint64_t& w : words) w ^= (w & kLowHalf[s]) << shift;
  }
  for (std::size_t stride = 1; stride < words.size(); stride <<= 1) {
    for (std::size_t base = 0; base < words.size(); base += 2 * stride) {
      for (std::size_t j = base; j < base + stride; ++j) {
        words[j + stride] ^= words[j];
      }
    }
  }
}

BoolFn anf_table(const BoolFn& f) {
  BoolFn g = f;
  moebius_inplace(g);
  return g;
}

AnfPoly moebius(const BoolFn& f) {
  if (f.vars() > kMaxCoreDim) {
    throw Error(ErrorKind::InvalidArgument,
                "monomial masks limited to " + std::to_string(kMaxCoreDim) +
                    " variables");
  }
  const BoolFn g = anf_table(f);
  AnfPoly p;
  p.n = f.vars();
  const auto words = g.words();
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    std::uint64_t w = words[wi];
    while (w != 0) {
      const int b = std::countr_zero(w);
      p.monomials.push_back(static_cast<Word>(wi * 64 + b));
      w &= w - 1;
    }
  }
  return p;
}

BoolFn from_anf(const AnfPoly& p) {
  BoolFn g(p.n);
  for (Word m : p.monomials) {
    if (m >= g.size()) {
      throw Error(ErrorKind::InvalidArgument, "monomial mask out of range");
    }
    g.set(m, 1);
  }
  moebius_inplace(g);
  return g;
}

int max_monomial_weight(const BoolFn& anf) {
  int best = 0;
  const auto words = anf.words();
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    std::uint64_t w = words[wi];
    if (w == 0) continue;
    const int high = std::popcount(static_cast<std::uint64_t>(wi));
    while (w != 0) {
      const int b = std::countr_zero(w);
      best = std::max(best, high + std::popcount(static_cast<unsigned>(b)));
      w &= w - 1;
    }
  }
  return best;
}

int degree(const BoolFn& f) { return max_monomial_weight(anf_table(f)); }

WalshSpectrum walsh(const BoolFn& f) {
  WalshSpectrum s;
  s.n = f.vars();
  const std::size_t size = f.size();
  s.coefficients.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    s.coefficients[x] = f.get(x) ? -1 : 1;
  }
  auto& c = s.coefficients;
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * half) {
      for (std::size_t j = base; j < base + half; ++j) {
        const std::int64_t lo = c[j];
        const std::int64_t hi = c[j + half];
        c[j] = lo + hi;
        c[j + half] = lo - hi;
      }
    }
  }
  return s;
}

int anf_coeff_via_walsh(const WalshSpectrum& spectrum, Word a) {
  const int n = spectrum.n;
  if (a == 0) {
    throw Error(ErrorKind::InvalidArgument,
                "Walsh ANF formula is only used for a != 0");
  }
  if (n > 30 || a >= (Word{1} << n)) {
    throw Error(ErrorKind::InvalidArgument, "mask outside the function domain");
  }
  const Word free = ~a & bits::full_mask(n);
  std::int64_t sum = 0;
  // All b with b <= complement of a, including b = 0.
  for (Word b = free;; b = (b - 1) & free) {
    sum += spectrum[b];
    if (b == 0) break;
  }
  const int w = bits::weight(a);
  const int shift = n + 1 - w;  // >= 1 because w <= n
  const std::int64_t unit = std::int64_t{1} << shift;
  if (sum % unit != 0) {
    throw Error(ErrorKind::AlgorithmMismatch,
                "Walsh sum not divisible by 2^" + std::to_string(shift) +
                    "; spectrum is not a Walsh spectrum");
  }
  const std::int64_t value = (std::int64_t{1} << (w - 1)) - sum / unit;
  return static_cast<int>(value & 1);
}

int anf_coeff_via_walsh(const BoolFn& f, Word a) {
  return anf_coeff_via_walsh(walsh(f), a);
}

bool is_bent(const WalshSpectrum& spectrum) {
  if (spectrum.n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "bentness needs an even number of variables");
  }
  const std::int64_t flat = std::int64_t{1} << (spectrum.n / 2);
  return std::all_of(spectrum.coefficients.begin(),
                     spectrum.coefficients.end(),
                     [flat](std::int64_t c) { return std::llabs(c) == flat; });
}

bool is_bent(const BoolFn& f) {
  if (f.vars() % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "bentness needs an even number of variables");
  }
  return is_bent(walsh(f));
}

}  // namespace apngamma
