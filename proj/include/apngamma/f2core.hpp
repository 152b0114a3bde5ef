#pragma once

// Linear algebra over F_2. Coordinate x_i of a vector is bit (i-1) of its
// integer encoding, so e^i == 1u << (i-1).

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace apngamma {

using Word = std::uint32_t;

inline constexpr int kMaxCoreDim = 16;

namespace bits {

inline int dot(Word x, Word y) noexcept { return std::popcount(x & y) & 1; }
inline int weight(Word x) noexcept { return std::popcount(x); }
inline bool precedes(Word x, Word y) noexcept { return (x & ~y) == 0; }
inline Word full_mask(int n) noexcept {
  return n >= 32 ? ~Word{0} : (Word{1} << n) - 1;
}
inline Word unit(int i) noexcept { return Word{1} << i; }

}  // namespace bits

// Element of F_2^n with its dimension attached; operations check that
// operands live in the same space.
class F2Vec {
 public:
  F2Vec(Word value, int n);

  Word value() const noexcept { return value_; }
  int dim() const noexcept { return n_; }

  F2Vec operator+(const F2Vec& other) const;
  bool operator==(const F2Vec&) const = default;

  static F2Vec zero(int n) { return F2Vec(0, n); }
  static F2Vec ones(int n) { return F2Vec(bits::full_mask(n), n); }
  // Unit vector e^i, 1-based as in x_1..x_n.
  static F2Vec unit(int i, int n);

 private:
  Word value_;
  int n_;
};

int dot(const F2Vec& x, const F2Vec& y);
int weight(const F2Vec& x) noexcept;
bool precedes(const F2Vec& x, const F2Vec& y);

// Sorted, duplicate-free set of vectors of F_2^n.
class F2Set {
 public:
  explicit F2Set(int n) : n_(n) { check_dim(n); }
  // Members are sorted and deduplicated; values >= 2^n are rejected.
  F2Set(int n, std::vector<Word> members);
  F2Set(int n, std::initializer_list<Word> members)
      : F2Set(n, std::vector<Word>(members)) {}

  static F2Set full(int n);

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Word x) const;
  const std::vector<Word>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool operator==(const F2Set&) const = default;

  static void check_dim(int n);

 private:
  int n_;
  std::vector<Word> members_;
};

// Rank of the span of the given vectors.
int rank(std::span<const Word> vectors);

// Reduced basis of the span (one vector per pivot, pivots distinct).
std::vector<Word> span_basis(std::span<const Word> vectors);

// Basis of {v in F_2^n : dot(v, r) = 0 for every r in rows}.
std::vector<Word> orthogonal_complement(std::span<const Word> rows, int n);

// Some x with dot(rows[k], x) = rhs[k] for all k, or nullopt if the system
// is inconsistent.
std::optional<Word> solve(std::span<const Word> rows, std::span<const int> rhs,
                          int n);

bool is_linear_subspace(const F2Set& s);
bool is_linear_subspace(std::span<const Word> sorted_members);

// log2 |s|; throws if s is not a subspace.
int subspace_dimension(const F2Set& s);

// 1-based m such that s == {x : x_m = 0}, if any.
std::optional<int> coordinate_hyperplane_index(const F2Set& s);

}  // namespace apngamma
