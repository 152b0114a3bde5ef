#include "apngamma/f2core.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "apngamma/error.hpp"

namespace apngamma {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::NotQuadratic: return "not quadratic";
    case ErrorKind::NotApn: return "not APN";
    case ErrorKind::NonUniqueNormal: return "non-unique normal vector";
    case ErrorKind::AlgorithmMismatch: return "algorithm mismatch";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::ResourceLimit: return "resource limit exceeded";
    case ErrorKind::TheoremViolated: return "theorem violated";
  }
  return "unknown";
}

namespace {

void require_same_dim(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "vectors of dimension " + std::to_string(a) + " and " +
                    std::to_string(b));
  }
}

// Gaussian elimination state: pivot_row[b] holds a vector whose highest set
// bit is b, or 0.
struct Echelon {
  std::array<Word, 32> pivot_row{};

  // Returns the reduced remainder of x (0 if x was already in the span).
  Word insert(Word x) {
    while (x != 0) {
      const int top = 31 - std::countl_zero(x);
      if (pivot_row[top] == 0) {
        pivot_row[top] = x;
        return x;
      }
      x ^= pivot_row[top];
    }
    return 0;
  }
};

}  // namespace

F2Vec::F2Vec(Word value, int n) : value_(value), n_(n) {
  F2Set::check_dim(n);
  if (value >= (Word{1} << n)) {
    throw Error(ErrorKind::InvalidArgument,
                "vector " + std::to_string(value) + " outside F_2^" +
                    std::to_string(n));
  }
}

F2Vec F2Vec::operator+(const F2Vec& other) const {
  require_same_dim(n_, other.n_);
  return F2Vec(value_ ^ other.value_, n_);
}

F2Vec F2Vec::unit(int i, int n) {
  if (i < 1 || i > n) {
    throw Error(ErrorKind::InvalidArgument,
                "coordinate " + std::to_string(i) + " outside 1.." +
                    std::to_string(n));
  }
  return F2Vec(bits::unit(i - 1), n);
}

int dot(const F2Vec& x, const F2Vec& y) {
  require_same_dim(x.dim(), y.dim());
  return bits::dot(x.value(), y.value());
}

int weight(const F2Vec& x) noexcept { return bits::weight(x.value()); }

bool precedes(const F2Vec& x, const F2Vec& y) {
  require_same_dim(x.dim(), y.dim());
  return bits::precedes(x.value(), y.value());
}

void F2Set::check_dim(int n) {
  if (n < 1 || n > kMaxCoreDim) {
    throw Error(ErrorKind::InvalidArgument,
                "dimension " + std::to_string(n) + " outside 1.." +
                    std::to_string(kMaxCoreDim));
  }
}

F2Set::F2Set(int n, std::vector<Word> members)
    : n_(n), members_(std::move(members)) {
  check_dim(n);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (!members_.empty() && members_.back() >= (Word{1} << n)) {
    throw Error(ErrorKind::InvalidArgument,
                "set member " + std::to_string(members_.back()) +
                    " outside F_2^" + std::to_string(n));
  }
}

F2Set F2Set::full(int n) {
  check_dim(n);
  std::vector<Word> all(std::size_t{1} << n);
  for (Word x = 0; x < all.size(); ++x) all[x] = x;
  return F2Set(n, std::move(all));
}

bool F2Set::contains(Word x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

int rank(std::span<const Word> vectors) {
  Echelon e;
  int r = 0;
  for (Word x : vectors) {
    if (e.insert(x) != 0) ++r;
  }
  return r;
}

std::vector<Word> span_basis(std::span<const Word> vectors) {
  Echelon e;
  for (Word x : vectors) e.insert(x);
  std::vector<Word> basis;
  for (int b = 31; b >= 0; --b) {
    if (e.pivot_row[b] != 0) basis.push_back(e.pivot_row[b]);
  }
  return basis;
}

std::vector<Word> orthogonal_complement(std::span<const Word> rows, int n) {
  // Reduced row echelon form, then one kernel vector per free column.
  std::vector<Word> basis = span_basis(rows);
  std::vector<int> pivot_of(basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    pivot_of[r] = 31 - std::countl_zero(basis[r]);
  }
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t s = 0; s < basis.size(); ++s) {
      if (s != r && ((basis[s] >> pivot_of[r]) & 1u)) basis[s] ^= basis[r];
    }
  }
  Word pivot_mask = 0;
  for (int p : pivot_of) pivot_mask |= bits::unit(p);

  std::vector<Word> kernel;
  for (int free = 0; free < n; ++free) {
    if ((pivot_mask >> free) & 1u) continue;
    Word v = bits::unit(free);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if ((basis[r] >> free) & 1u) v |= bits::unit(pivot_of[r]);
    }
    kernel.push_back(v);
  }
  return kernel;
}

std::optional<Word> solve(std::span<const Word> rows, std::span<const int> rhs,
                          int n) {
  require_same_dim(static_cast<int>(rows.size()),
                   static_cast<int>(rhs.size()));
  if (n < 1 || n > 31) {
    throw Error(ErrorKind::InvalidArgument, "unsupported system width");
  }
  const Word coeff = bits::full_mask(n);
  // Augmented rows: coefficients in bits 0..n-1, right-hand side in bit n.
  // Pivots are keyed by the highest coefficient bit.
  std::array<Word, 32> pivot{};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Word r = (rows[k] & coeff) | (static_cast<Word>(rhs[k] & 1) << n);
    while ((r & coeff) != 0) {
      const int top = 31 - std::countl_zero(r & coeff);
      if (pivot[top] == 0) {
        pivot[top] = r;
        break;
      }
      r ^= pivot[top];
    }
    if ((r & coeff) == 0 && ((r >> n) & 1u)) return std::nullopt;
  }
  // Back substitution in increasing pivot order; free variables are zero.
  Word x = 0;
  for (int b = 0; b < n; ++b) {
    const Word row = pivot[b];
    if (row == 0) continue;
    const int target = static_cast<int>((row >> n) & 1u);
    if (bits::dot(row & bits::full_mask(b), x) != target) x |= bits::unit(b);
  }
  return x;
}

bool is_linear_subspace(std::span<const Word> sorted_members) {
  if (sorted_members.empty() || sorted_members.front() != 0) return false;
  const int r = rank(sorted_members);
  return sorted_members.size() == (std::size_t{1} << r);
}

bool is_linear_subspace(const F2Set& s) {
  return is_linear_subspace(std::span<const Word>(s.members()));
}

int subspace_dimension(const F2Set& s) {
  if (!is_linear_subspace(s)) {
    throw Error(ErrorKind::InvalidArgument, "set is not a linear subspace");
  }
  return std::countr_zero(s.size());
}

std::optional<int> coordinate_hyperplane_index(const F2Set& s) {
  const int n = s.dim();
  if (s.size() != (std::size_t{1} << (n - 1))) return std::nullopt;
  Word used = 0;
  for (Word x : s) used |= x;
  // 2^{n-1} distinct vectors inside {x : x_m = 0} fill it exactly.
  for (int m = 0; m < n; ++m) {
    if (((used >> m) & 1u) == 0) return m + 1;
  }
  return std::nullopt;
}

}  // namespace apngamma
