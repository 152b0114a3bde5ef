#include "apngamma/vecfn.hpp"

#include <algorithm>
#include <string>

#include "apngamma/error.hpp"
#include "apngamma/gf2n.hpp"

namespace apngamma {

VecFn::VecFn(int n_, std::vector<Word> table_) : n(n_), table(std::move(table_)) {
  F2Set::check_dim(n);
  if (table.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::InvalidArgument,
                "vectorial table needs " + std::to_string(std::size_t{1} << n) +
                    " entries, got " + std::to_string(table.size()));
  }
  const Word limit = bits::full_mask(n);
  for (Word y : table) {
    if (y > limit) {
      throw Error(ErrorKind::InvalidArgument,
                  "output " + std::to_string(y) + " outside F_2^" +
                      std::to_string(n));
    }
  }
}

VecFn VecFn::identity(int n) {
  std::vector<Word> t(std::size_t{1} << n);
  for (Word x = 0; x < t.size(); ++x) t[x] = x;
  return VecFn(n, std::move(t));
}

LinearFn::LinearFn(int n_, std::vector<Word> images_)
    : n(n_), images(std::move(images_)) {
  F2Set::check_dim(n);
  if (static_cast<int>(images.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "linear map needs n basis images");
  }
  for (Word y : images) {
    if (y > bits::full_mask(n)) {
      throw Error(ErrorKind::InvalidArgument, "basis image outside F_2^n");
    }
  }
}

LinearFn LinearFn::random(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Word> dist(0, bits::full_mask(n));
  std::vector<Word> images(n);
  for (Word& y : images) y = dist(rng);
  return LinearFn(n, std::move(images));
}

Word LinearFn::operator()(Word x) const {
  Word y = 0;
  while (x != 0) {
    y ^= images[std::countr_zero(x)];
    x &= x - 1;
  }
  return y;
}

VecFn LinearFn::table() const {
  std::vector<Word> t(std::size_t{1} << n);
  for (Word x = 0; x < t.size(); ++x) t[x] = (*this)(x);
  return VecFn(n, std::move(t));
}

int LinearFn::rank() const { return apngamma::rank(images); }

BoolFn component(const VecFn& f, Word v) {
  BoolFn g(f.n);
  for (Word x = 0; x < f.size(); ++x) g.set(x, bits::dot(v, f.table[x]));
  return g;
}

BoolFn coordinate(const VecFn& f, int i) { return component(f, bits::unit(i)); }

int vec_degree(const VecFn& f) {
  int d = 0;
  for (int i = 0; i < f.n; ++i) d = std::max(d, degree(coordinate(f, i)));
  return d;
}

bool is_quadratic(const VecFn& f) { return vec_degree(f) == 2; }

F2Set derivative_image(const VecFn& f, Word a) {
  if (a >= f.size()) {
    throw Error(ErrorKind::InvalidArgument, "direction outside F_2^n");
  }
  std::vector<bool> seen(f.size(), false);
  std::vector<Word> out;
  for (Word x = 0; x < f.size(); ++x) {
    const Word b = f.table[x] ^ f.table[x ^ a];
    if (!seen[b]) {
      seen[b] = true;
      out.push_back(b);
    }
  }
  return F2Set(f.n, std::move(out));
}

bool is_apn(const VecFn& f) {
  std::vector<std::uint64_t> marker((f.size() + 63) / 64);
  for (Word a = 1; a < f.size(); ++a) {
    std::fill(marker.begin(), marker.end(), 0);
    for (Word x = 0; x < f.size(); ++x) {
      const Word partner = x ^ a;
      if (partner < x) continue;  // each solution pair {x, x+a} once
      const Word b = f.table[x] ^ f.table[partner];
      std::uint64_t& w = marker[b >> 6];
      const std::uint64_t m = std::uint64_t{1} << (b & 63);
      if (w & m) return false;
      w |= m;
    }
  }
  return true;
}

BoolFn gamma(const VecFn& f) {
  if (f.n > kMaxGammaDim) {
    throw Error(ErrorKind::ResourceLimit,
                "gamma table limited to n <= " + std::to_string(kMaxGammaDim));
  }
  BoolFn g(2 * f.n);
  const std::uint64_t size = f.size();
  for (Word a = 1; a < size; ++a) {
    const std::uint64_t row = std::uint64_t{a} << f.n;
    for (Word x = 0; x < size; ++x) g.set(row | (f.table[x] ^ f.table[x ^ a]), 1);
  }
  return g;
}

BoolFn GammaDecomp::reconstruct_gamma() const {
  BoolFn g(2 * n);
  const std::uint64_t size = std::uint64_t{1} << n;
  for (Word a = 1; a < size; ++a) {
    const std::uint64_t row = std::uint64_t{a} << n;
    const Word normal = Phi.table[a];
    const int offset = phi.get(a);
    for (Word b = 0; b < size; ++b) {
      g.set(row | b, bits::dot(normal, b) ^ offset ^ 1);
    }
  }
  return g;
}

namespace {

std::string direction_text(Word a) { return "a = " + std::to_string(a); }

// Normal vector of B_a: translate by y0, check the result is an
// (n-1)-dimensional subspace, take its orthogonal complement.
Word normal_direct(const VecFn& f, Word a, Word y0) {
  const F2Set image = derivative_image(f, a);
  const std::size_t half = std::size_t{1} << (f.n - 1);
  if (image.size() != half) {
    throw Error(ErrorKind::NonUniqueNormal,
                "|B_a| = " + std::to_string(image.size()) + " at " +
                    direction_text(a));
  }
  std::vector<Word> shifted;
  shifted.reserve(half);
  for (Word y : image) shifted.push_back(y ^ y0);
  if (rank(shifted) != f.n - 1) {
    throw Error(ErrorKind::NonUniqueNormal,
                "translated B_a is not a hyperplane at " + direction_text(a));
  }
  const auto normal = orthogonal_complement(shifted, f.n);
  if (normal.size() != 1) {
    throw Error(ErrorKind::NonUniqueNormal,
                "orthogonal complement of B_a has dimension " +
                    std::to_string(normal.size()) + " at " + direction_text(a));
  }
  return normal.front();
}

// Normal vector from the kernel of v -> (dot(v, L_a(e^j)))_j with
// L_a(x) = F(x) + F(x+a) + F(a) + F(0).
Word normal_kernel(const VecFn& f, Word a) {
  const Word base = f.table[a] ^ f.table[0];
  std::vector<Word> rows(f.n);
  for (int j = 0; j < f.n; ++j) {
    const Word e = bits::unit(j);
    rows[j] = f.table[e] ^ f.table[e ^ a] ^ base;
  }
  const auto normal = orthogonal_complement(rows, f.n);
  if (normal.size() != 1) {
    throw Error(ErrorKind::NonUniqueNormal,
                "rank of L_a is " + std::to_string(f.n - normal.size()) +
                    " at " + direction_text(a));
  }
  return normal.front();
}

}  // namespace

GammaDecomp gamma_decompose(const VecFn& f) {
  if (!is_quadratic(f)) {
    throw Error(ErrorKind::NotQuadratic,
                "function has algebraic degree " + std::to_string(vec_degree(f)));
  }
  if (!is_apn(f)) throw Error(ErrorKind::NotApn, "function is not APN");

  GammaDecomp d;
  d.n = f.n;
  d.Phi = VecFn(f.n, std::vector<Word>(f.size(), 0));
  d.phi = BoolFn(f.n);
  d.phi.set(0, 1);
  for (Word a = 1; a < f.size(); ++a) {
    const Word y0 = f.table[0] ^ f.table[a];
    const Word direct = normal_direct(f, a, y0);
    const Word kernel = normal_kernel(f, a);
    if (direct != kernel) {
      throw Error(ErrorKind::AlgorithmMismatch,
                  "direct and kernel normals differ at " + direction_text(a));
    }
    d.Phi.table[a] = direct;
    d.phi.set(a, bits::dot(direct, y0));
  }
  return d;
}

VecFn add_linear(const VecFn& f, const LinearFn& l) {
  if (f.n != l.n) {
    throw Error(ErrorKind::DimensionMismatch, "F and L act on different spaces");
  }
  std::vector<Word> t(f.table);
  for (Word x = 0; x < t.size(); ++x) t[x] ^= l(x);
  return VecFn(f.n, std::move(t));
}

std::vector<Word> trace_form_phi(const GammaDecomp& decomp,
                                 const FieldSpec& spec) {
  if (decomp.n != spec.degree()) {
    throw Error(ErrorKind::DimensionMismatch,
                "decomposition and field have different dimensions");
  }
  const LinearFn tau = trace_dual_map(spec);
  if (tau.rank() != decomp.n) {
    throw Error(ErrorKind::AlgorithmMismatch, "trace pairing is degenerate");
  }
  const std::size_t size = std::size_t{1} << decomp.n;
  std::vector<Word> tau_inverse(size);
  for (Word u = 0; u < size; ++u) tau_inverse[tau(u)] = u;
  std::vector<Word> out(size);
  for (Word a = 0; a < size; ++a) out[a] = tau_inverse[decomp.Phi.table[a]];
  return out;
}

}  // namespace apngamma
