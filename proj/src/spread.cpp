#include "apngamma/spread.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "apngamma/error.hpp"

namespace apngamma {

namespace {

void require_pair(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
    throw Error(ErrorKind::InvalidArgument,
                "coordinate pair (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") invalid for n = " + std::to_string(n));
  }
}

int both_clear(Word x, int i, int j) {
  return ((x >> i) & 1u) == 0 && ((x >> j) & 1u) == 0;
}

}  // namespace

F2Set zero_set(const BoolFn& g) {
  std::vector<Word> out;
  for (Word x = 0; x < g.size(); ++x) {
    if (g.get(x) == 0) out.push_back(x);
  }
  return F2Set(g.vars(), std::move(out));
}

F2Set zero_set(const GammaDecomp& decomp, Word v) {
  if (v == 0) throw Error(ErrorKind::InvalidArgument, "zero set needs v != 0");
  return zero_set(component(decomp.Phi, v));
}

std::uint64_t restricted_zero_count(const BoolFn& g, int i, int j,
                                    RestrictedSet which) {
  const int n = g.vars();
  require_pair(n, i, j);
  std::uint64_t count = 0;
  for (Word x = 0; x < g.size(); ++x) {
    if (g.get(x) != 0) continue;
    const Word xi = (x >> i) & 1u;
    const Word xj = (x >> j) & 1u;
    bool in = false;
    switch (which) {
      case RestrictedSet::BothZero: in = xi == 0 && xj == 0; break;
      case RestrictedSet::FirstZero: in = xi == 0; break;
      case RestrictedSet::SecondZero: in = xj == 0; break;
      case RestrictedSet::SumZero: in = xi == xj; break;
    }
    count += in;
  }
  return count;
}

WalshSumIdentity walsh_sum_identity(const BoolFn& g, const WalshSpectrum& w,
                                    int i, int j) {
  const int n = g.vars();
  require_pair(n, i, j);
  const Word ei = bits::unit(i);
  const Word ej = bits::unit(j);
  WalshSumIdentity r;
  r.lhs = w[0] + w[ei] + w[ej] + w[ei ^ ej];
  const auto m0 = static_cast<std::int64_t>(restricted_zero_count(g, i, j));
  r.rhs = 8 * m0 - (std::int64_t{1} << n);
  r.rhs_halved = 8 * m0 - (std::int64_t{1} << (n - 1));
  r.equal = r.lhs == r.rhs;
  r.equal_halved = r.lhs == r.rhs_halved;
  return r;
}

WalshSumIdentity walsh_sum_identity(const BoolFn& g, int i, int j) {
  return walsh_sum_identity(g, walsh(g), i, j);
}

std::optional<std::pair<int, int>> degree_witness(const BoolFn& g) {
  const int n = g.vars();
  if (n < 5) {
    throw Error(ErrorKind::InvalidArgument, "degree witness needs n >= 5");
  }
  const WalshSpectrum w = walsh(g);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Word ei = bits::unit(i);
      const Word ej = bits::unit(j);
      const std::int64_t s = w[0] + w[ei] + w[ej] + w[ei ^ ej];
      if (s % 16 != 0) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> degree_witness(const GammaDecomp& decomp,
                                                  Word v) {
  if (decomp.n < 5 || decomp.n % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument, "degree witness needs odd n >= 5");
  }
  if (v == 0) throw Error(ErrorKind::InvalidArgument, "degree witness needs v != 0");
  return degree_witness(component(decomp.Phi, v));
}

F2Set SpreadDecomp::union_with_zero() const {
  std::vector<Word> pts{0};
  for (const Triple& t : triples) {
    pts.push_back(t.x);
    pts.push_back(t.y);
    pts.push_back(t.z);
  }
  return F2Set(n, std::move(pts));
}

void SpreadDecomp::validate(const F2Set& m) const {
  std::vector<char> seen(std::size_t{1} << n, 0);
  for (const Triple& t : triples) {
    if (t.x == 0 || t.y == 0 || (t.x ^ t.y) != t.z || t.x == t.y) {
      throw Error(ErrorKind::AlgorithmMismatch, "triple is not a 2-dim subspace");
    }
    for (Word p : {t.x, t.y, t.z}) {
      if (seen[p]) throw Error(ErrorKind::AlgorithmMismatch, "triples overlap");
      seen[p] = 1;
    }
  }
  if (union_with_zero() != m || 3 * triples.size() + 1 != m.size()) {
    throw Error(ErrorKind::AlgorithmMismatch,
                "triples do not cover the decomposed set");
  }
}

namespace {

// Exact cover of M \ {0} by the XOR-closed triples inside M. Each step
// branches on the uncovered element with the fewest available triples; ties
// and the order in which an element's triples are tried follow a priority
// table (ascending values for the canonical attempt).
class TripleSearch {
 public:
  explicit TripleSearch(const F2Set& m) {
    if (m.empty() || m.members().front() != 0 || (m.size() - 1) % 3 != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "set must contain 0 and have |M| - 1 divisible by 3");
    }
    const auto& all = m.members();
    points_.assign(all.begin() + 1, all.end());
    std::vector<int> index_of(std::size_t{1} << m.dim(), -1);
    for (std::size_t k = 0; k < points_.size(); ++k) index_of[points_[k]] = static_cast<int>(k);
    lines_of_.resize(points_.size());
    for (std::size_t a = 0; a < points_.size(); ++a) {
      for (std::size_t b = a + 1; b < points_.size(); ++b) {
        const Word z = points_[a] ^ points_[b];
        if (z < points_[b] || index_of[z] < 0) continue;
        const int line = static_cast<int>(lines_.size());
        lines_.push_back({static_cast<int>(a), static_cast<int>(b), index_of[z]});
        for (int p : lines_.back()) lines_of_[p].push_back(line);
      }
    }
    point_rank_.resize(points_.size());
    for (std::size_t p = 0; p < points_.size(); ++p) point_rank_[p] = static_cast<std::uint32_t>(p);
  }

  // Reorders ties and per-element branch order with a fixed-seed shuffle.
  // Seed 0 restores the canonical ascending order.
  void reorder(std::uint32_t seed) {
    std::vector<std::uint32_t> line_rank(lines_.size());
    for (std::size_t l = 0; l < lines_.size(); ++l) line_rank[l] = static_cast<std::uint32_t>(l);
    for (std::size_t p = 0; p < points_.size(); ++p) point_rank_[p] = static_cast<std::uint32_t>(p);
    if (seed != 0) {
      std::mt19937 rng(seed);
      shuffle(line_rank, rng);
      shuffle(point_rank_, rng);
    }
    for (auto& ls : lines_of_) {
      std::sort(ls.begin(), ls.end(),
                [&](int a, int b) { return line_rank[a] < line_rank[b]; });
    }
  }

  enum class Outcome { Found, Exhausted, Budget };

  // count_all: visit every partition, accumulating count().
  Outcome run(bool count_all, std::uint64_t budget) {
    count_all_ = count_all;
    budget_ = budget;
    nodes_ = 0;
    count_ = 0;
    budget_hit_ = false;
    blocked_.assign(lines_.size(), 0);
    covered_.assign(points_.size(), 0);
    available_.resize(points_.size());
    for (std::size_t p = 0; p < points_.size(); ++p) {
      available_[p] = static_cast<int>(lines_of_[p].size());
    }
    remaining_ = points_.size();
    path_.clear();
    const bool found = search();
    if (budget_hit_) return Outcome::Budget;
    return found || count_ != 0 ? Outcome::Found : Outcome::Exhausted;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t count() const { return count_; }

  std::vector<Triple> path() const {
    std::vector<Triple> out;
    for (int l : path_) {
      const auto& t = lines_[l];
      out.push_back({points_[t[0]], points_[t[1]], points_[t[2]]});
    }
    std::sort(out.begin(), out.end(), [](const Triple& a, const Triple& b) {
      return a.x < b.x;
    });
    return out;
  }

 private:
  // Portable Fisher-Yates so reorderings match across standard libraries.
  static void shuffle(std::vector<std::uint32_t>& v, std::mt19937& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = rng() % i;
      std::swap(v[i - 1], v[j]);
    }
  }

  void cover(int p) {
    covered_[p] = 1;
    for (int l : lines_of_[p]) {
      if (blocked_[l]++ == 0) {
        for (int q : lines_[l]) --available_[q];
      }
    }
  }

  void uncover(int p) {
    for (int l : lines_of_[p]) {
      if (--blocked_[l] == 0) {
        for (int q : lines_[l]) ++available_[q];
      }
    }
    covered_[p] = 0;
  }

  // True when a partition was found and the search should stop.
  bool search() {
    if (++nodes_ > budget_) {
      budget_hit_ = true;
      return false;
    }
    if (remaining_ == 0) {
      ++count_;
      return !count_all_;
    }
    int best = -1;
    for (std::size_t p = 0; p < points_.size(); ++p) {
      if (covered_[p]) continue;
      if (best < 0 || available_[p] < available_[best] ||
          (available_[p] == available_[best] && point_rank_[p] < point_rank_[best])) {
        best = static_cast<int>(p);
      }
    }
    if (available_[best] == 0) return false;
    for (int l : lines_of_[best]) {
      if (blocked_[l] != 0) continue;
      for (int q : lines_[l]) cover(q);
      remaining_ -= 3;
      path_.push_back(l);
      if (search()) return true;
      path_.pop_back();
      remaining_ += 3;
      for (int k = 2; k >= 0; --k) uncover(lines_[l][k]);
      if (budget_hit_) return false;
    }
    return false;
  }

  std::vector<Word> points_;
  std::vector<std::array<int, 3>> lines_;
  std::vector<std::vector<int>> lines_of_;
  std::vector<std::uint32_t> point_rank_;
  std::vector<int> blocked_;
  std::vector<char> covered_;
  std::vector<int> available_;
  std::vector<int> path_;
  std::size_t remaining_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  bool budget_hit_ = false;
  bool count_all_ = false;
};

}  // namespace

std::optional<SpreadDecomp> decompose_triples(const F2Set& m,
                                              std::uint64_t node_limit) {
  TripleSearch search(m);
  // Restarts with growing budgets tame the heavy-tailed running time; once
  // the restart share of the budget is spent, a canonical complete search
  // decides existence.
  std::uint64_t spent = 0;
  std::uint64_t budget = 4096;
  for (std::uint32_t attempt = 0; spent + budget <= node_limit / 2; ++attempt) {
    search.reorder(attempt);
    const auto outcome = search.run(false, budget);
    spent += search.nodes();
    if (outcome == TripleSearch::Outcome::Exhausted) return std::nullopt;
    if (outcome == TripleSearch::Outcome::Found) {
      SpreadDecomp d{m.dim(), search.path()};
      d.validate(m);
      return d;
    }
    budget += budget / 2;
  }
  search.reorder(0);
  const auto outcome = search.run(false, node_limit - spent);
  if (outcome == TripleSearch::Outcome::Budget) {
    throw Error(ErrorKind::ResourceLimit, "triple search node limit reached");
  }
  if (outcome == TripleSearch::Outcome::Exhausted) return std::nullopt;
  SpreadDecomp d{m.dim(), search.path()};
  d.validate(m);
  return d;
}

std::uint64_t count_triple_decompositions(const F2Set& m,
                                          std::uint64_t node_limit) {
  if (m.size() > 32) {
    throw Error(ErrorKind::ResourceLimit,
                "counting all partitions is limited to |M| <= 32");
  }
  TripleSearch search(m);
  search.reorder(0);
  if (search.run(true, node_limit) == TripleSearch::Outcome::Budget) {
    throw Error(ErrorKind::ResourceLimit, "triple search node limit reached");
  }
  return search.count();
}

NijCounts count_nijk(const SpreadDecomp& d, int i, int j) {
  require_pair(d.n, i, j);
  NijCounts c{i, j, 0, 0, 0};
  for (const Triple& t : d.triples) {
    const int k = both_clear(t.x, i, j) + both_clear(t.y, i, j) +
                  both_clear(t.z, i, j);
    switch (k) {
      case 0: ++c.n0; break;
      case 1: ++c.n1; break;
      case 3: ++c.n3; break;
      default:
        throw Error(ErrorKind::AlgorithmMismatch,
                    "triple with exactly " + std::to_string(k) +
                        " elements in the coordinate subspace");
    }
  }
  return c;
}

ParityLink parity_link_check(const BoolFn& g, const SpreadDecomp& d, int i,
                             int j) {
  if (g.vars() != d.n) {
    throw Error(ErrorKind::DimensionMismatch, "function and decomposition differ in n");
  }
  if (d.union_with_zero() != zero_set(g)) {
    throw Error(ErrorKind::InvalidArgument,
                "decomposition does not partition the zero set of g");
  }
  ParityLink r;
  r.m0 = restricted_zero_count(g, i, j);
  r.counts = count_nijk(d, i, j);
  r.counting_identity = r.m0 == 1 + 3 * r.counts.n3 + r.counts.n1;
  r.parity_link = (r.m0 & 1u) == (r.counts.n0 & 1u);
  return r;
}

Conjecture3Verdict conjecture3_check(const SpreadDecomp& d) {
  const int n = d.n;
  const std::uint64_t expected = ((std::uint64_t{1} << (n - 1)) - 1) / 3;
  if (((std::uint64_t{1} << (n - 1)) - 1) % 3 != 0 || d.triples.size() != expected) {
    throw Error(ErrorKind::InvalidArgument,
                "family must have (2^{n-1}-1)/3 members");
  }
  Conjecture3Verdict v;
  const F2Set u = d.union_with_zero();
  v.hyperplane_coordinate = coordinate_hyperplane_index(u);
  v.side_a = v.hyperplane_coordinate.has_value();
  v.union_is_subspace = is_linear_subspace(u);
  v.side_b = true;
  for (int i = 0; i < n && v.side_b; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (count_nijk(d, i, j).n0 % 2 != 0) {
        v.side_b = false;
        v.odd_pair = std::make_pair(i, j);
        break;
      }
    }
  }
  v.agree = v.side_a == v.side_b;
  if (!v.agree) {
    v.direction = v.side_a ? "hyperplane-but-odd" : "even-but-not-hyperplane";
  }
  return v;
}

std::vector<Triple> two_dimensional_subspaces(int n) {
  F2Set::check_dim(n);
  const Word size = Word{1} << n;
  std::vector<Triple> lines;
  for (Word x = 1; x < size; ++x) {
    for (Word y = x + 1; y < size; ++y) {
      const Word z = x ^ y;
      if (z > y) lines.push_back({x, y, z});
    }
  }
  return lines;
}

namespace {

using PointMask = unsigned __int128;

struct LineInfo {
  Triple t;
  PointMask points = 0;
  std::uint32_t odd_pairs = 0;  // bit per pair: no element has x_i = x_j = 0
  Word support = 0;             // OR of the three points
};

struct PartialSummary {
  std::uint64_t families = 0;
  std::uint64_t hyperplane = 0;
  std::uint64_t even = 0;
  std::uint64_t subspace = 0;
  std::uint64_t hyperplane_but_odd = 0;
  std::uint64_t even_but_not_hyperplane = 0;
  std::vector<std::size_t> first_counterexample;
};

class FamilyEnumerator {
 public:
  FamilyEnumerator(const std::vector<LineInfo>& lines, int n, std::size_t k,
                   std::atomic<std::uint64_t>& nodes, std::uint64_t max_nodes,
                   std::atomic<bool>& abort)
      : lines_(lines), n_(n), k_(k), nodes_(nodes), max_nodes_(max_nodes),
        abort_(abort) {}

  PartialSummary run_from(std::size_t first) {
    PartialSummary s;
    path_.assign(1, first);
    const LineInfo& l = lines_[first];
    extend(s, first + 1, l.points, l.odd_pairs, l.support);
    return s;
  }

 private:
  void extend(PartialSummary& s, std::size_t next, PointMask used,
              std::uint32_t parity, Word support) {
    if (path_.size() == k_) {
      leaf(s, parity, support);
      return;
    }
    if ((++local_nodes_ & 0xFFFF) == 0) {
      if (nodes_.fetch_add(0x10000) + 0x10000 > max_nodes_) abort_ = true;
      if (abort_) throw Error(ErrorKind::ResourceLimit,
                              "subspace family enumeration exceeded node limit");
    }
    const std::size_t need = k_ - path_.size();
    for (std::size_t idx = next; idx + need <= lines_.size(); ++idx) {
      const LineInfo& l = lines_[idx];
      if ((l.points & used) != 0) continue;
      path_.push_back(idx);
      extend(s, idx + 1, used | l.points, parity ^ l.odd_pairs,
             support | l.support);
      path_.pop_back();
    }
  }

  void leaf(PartialSummary& s, std::uint32_t parity, Word support) {
    ++s.families;
    const bool side_a = support != bits::full_mask(n_);
    const bool side_b = parity == 0;
    s.hyperplane += side_a;
    s.even += side_b;
    std::vector<Word> gens;
    gens.reserve(2 * path_.size());
    for (std::size_t idx : path_) {
      gens.push_back(lines_[idx].t.x);
      gens.push_back(lines_[idx].t.y);
    }
    s.subspace += rank(gens) == n_ - 1;
    if (side_a != side_b) {
      if (side_a) {
        ++s.hyperplane_but_odd;
      } else {
        ++s.even_but_not_hyperplane;
      }
      if (s.first_counterexample.empty()) s.first_counterexample = path_;
    }
  }

  const std::vector<LineInfo>& lines_;
  int n_;
  std::size_t k_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t max_nodes_;
  std::atomic<bool>& abort_;
  std::vector<std::size_t> path_;
  std::uint64_t local_nodes_ = 0;
};

}  // namespace

Conjecture3Summary conjecture3_exhaustive(int n,
                                          const Conjecture3Options& options) {
  if (n != 5 && !options.force) {
    throw Error(ErrorKind::InvalidArgument,
                "exhaustive family search runs for n = 5 only without --force");
  }
  if (n < 3 || n > 7 || n % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument,
                "exhaustive family search supports odd n in 3..7");
  }
  const auto triples = two_dimensional_subspaces(n);
  std::vector<LineInfo> lines;
  lines.reserve(triples.size());
  for (const Triple& t : triples) {
    LineInfo l;
    l.t = t;
    l.points = (PointMask{1} << t.x) | (PointMask{1} << t.y) | (PointMask{1} << t.z);
    l.support = t.x | t.y | t.z;
    int pair = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++pair) {
        if (!both_clear(t.x, i, j) && !both_clear(t.y, i, j) &&
            !both_clear(t.z, i, j)) {
          l.odd_pairs |= std::uint32_t{1} << pair;
        }
      }
    }
    lines.push_back(l);
  }

  Conjecture3Summary out;
  out.n = n;
  out.family_size = ((std::uint64_t{1} << (n - 1)) - 1) / 3;
  out.subspaces = lines.size();

  const std::size_t k = out.family_size;
  std::vector<PartialSummary> parts(lines.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::mutex error_mutex;
  std::optional<Error> failure;

  auto worker = [&] {
    FamilyEnumerator e(lines, n, k, nodes, options.max_nodes, abort);
    for (;;) {
      const std::size_t first = next.fetch_add(1);
      if (first + k > lines.size() || abort) return;
      try {
        parts[first] = e.run_from(first);
      } catch (const Error& err) {
        std::lock_guard lock(error_mutex);
        if (!failure) failure = err;
        abort = true;
        return;
      }
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) throw *failure;

  for (const PartialSummary& p : parts) {
    out.families += p.families;
    out.hyperplane_families += p.hyperplane;
    out.even_families += p.even;
    out.subspace_families += p.subspace;
    out.hyperplane_but_odd += p.hyperplane_but_odd;
    out.even_but_not_hyperplane += p.even_but_not_hyperplane;
    if (out.first_counterexample.empty() && !p.first_counterexample.empty()) {
      for (std::size_t idx : p.first_counterexample) {
        out.first_counterexample.push_back(lines[idx].t);
      }
    }
  }
  out.counterexamples = out.hyperplane_but_odd + out.even_but_not_hyperplane;
  return out;
}

Conjecture4Verdict conjecture4_check(const GammaDecomp& decomp) {
  if (decomp.n < 5) {
    throw Error(ErrorKind::InvalidArgument, "conjecture 4 is stated for n >= 5");
  }
  Conjecture4Verdict v;
  for (Word c = 1; c < decomp.Phi.size(); ++c) {
    if (is_linear_subspace(zero_set(decomp, c))) {
      v.holds = false;
      v.violating_v = c;
      return v;
    }
  }
  return v;
}

}  // namespace apngamma
