// Acceptance suite: one line per criterion. Run all, or pick with --only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apngamma/boolfn.hpp"
#include "apngamma/catalog.hpp"
#include "apngamma/driver.hpp"
#include "apngamma/gf2n.hpp"
#include "apngamma/spread.hpp"
#include "apngamma/structure.hpp"
#include "apngamma/vecfn.hpp"
#include "oracles.hpp"

using namespace apngamma;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_s;  // 0: no time bound
  std::function<Outcome()> run;
};

std::vector<FunctionSpecRecord> catalog_for(std::initializer_list<int> ns) {
  std::vector<FunctionSpecRecord> out;
  for (int n : ns)
    for (auto& r : gold_catalog(n, n)) out.push_back(std::move(r));
  return out;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome gold_closed_form() {
  std::size_t funcs = 0, points = 0;
  for (int n = 3; n <= 9; ++n) {
    for (const auto& r : gold_catalog(n, n)) {
      const Word poly = r.field_poly();
      const BoolFn g = gamma(build_function(r));
      const Word size = Word{1} << n;
      const int tr1 = oracle::field_trace(1, poly, n);
      for (Word a = 1; a < size; ++a) {
        const Word u = oracle::field_inv(oracle::field_pow(a, (1u << r.k) + 1, poly, n), poly, n);
        for (Word b = 0; b < size; ++b) {
          const int expect = oracle::field_trace(oracle::field_mul(u, b, poly, n), poly, n) ^ tr1 ^ 1;
          if (g.get((a << n) | b) != expect)
            return {false, fmt("%s: mismatch at a=%u b=%u", r.id.c_str(), a, b)};
          ++points;
        }
      }
      ++funcs;
    }
  }
  return {true, fmt("%zu functions, %zu points", funcs, points)};
}

Outcome theorem1() {
  std::size_t funcs = 0;
  for (const auto& r : catalog_for({3, 4, 5, 6, 7, 8, 9, 10, 11})) {
    const VecFn phi = gamma_decompose(build_function(r)).Phi;
    // Census from scratch rather than through image_stats.
    std::vector<std::set<Word>> pre(phi.size());
    for (Word a = 1; a < phi.size(); ++a) pre[phi(a)].insert(a);
    if (r.n % 2 == 1) {
      for (Word v = 1; v < phi.size(); ++v)
        if (pre[v].size() != 1) return {false, r.id + ": not a permutation"};
    } else {
      for (Word v = 1; v < phi.size(); ++v) {
        if (pre[v].empty()) continue;
        std::set<Word> s = pre[v];
        s.insert(0);
        const int dim = std::countr_zero(s.size());
        if ((s.size() & (s.size() - 1)) != 0 || dim % 2 != 0 || !oracle::is_subspace(s))
          return {false, fmt("%s: preimage of %u", r.id.c_str(), v)};
      }
    }
    ++funcs;
  }
  return {true, fmt("%zu functions", funcs)};
}

Outcome corollary() {
  std::size_t funcs = 0;
  for (const auto& r : gold_catalog(3, 11)) {
    const ImageReport rep = image_stats(gamma_decompose(build_function(r)).Phi);
    if (rep.distinct_nonzero_values % 2 == 0) return {false, r.id + ": even value count"};
    ++funcs;
  }
  return {true, fmt("%zu functions", funcs)};
}

Outcome phi_parity() {
  std::size_t even = 0, odd = 0;
  for (const auto& r : gold_catalog(3, 11)) {
    const BoolFn phi = gamma_decompose(build_function(r)).phi;
    const bool weight_odd = phi.weight() % 2 == 1;
    if (r.n % 2 == 0 && !weight_odd) return {false, r.id + ": even weight (theorem)"};
    if (r.n % 2 == 1 && weight_odd) return {false, r.id + ": odd weight (conjecture counterexample)"};
    ++(r.n % 2 == 0 ? even : odd);
  }
  return {true, fmt("%zu even-n entries odd, %zu odd-n entries even", even, odd)};
}

Outcome degrees() {
  std::size_t funcs = 0;
  for (const auto& r : gold_catalog(3, 11)) {
    const VecFn phi = gamma_decompose(build_function(r)).Phi;
    const int n = r.n;
    if (n % 2 == 0 && n >= 4) {
      for (const auto& s : coordinate_structure(phi))
        if (!s.ok || s.lambda != 0) return {false, fmt("%s: coordinate %d", r.id.c_str(), s.coordinate + 1)};
    }
    if (n % 2 == 1 || n <= 9) {
      for (Word v = 1; v < phi.size(); ++v) {
        const int d = degree(component(phi, v));
        if (n % 2 == 1 && d > n - 2) return {false, fmt("%s: deg %d at v=%u", r.id.c_str(), d, v)};
        if (n <= 9 && d != n - 2) return {false, fmt("%s: Conjecture 2 fails at v=%u (deg %d)", r.id.c_str(), v, d)};
      }
    }
    ++funcs;
  }
  return {true, fmt("%zu functions", funcs)};
}

bool eq1_matches(const BoolFn& f) {
  const BoolFn a = anf_table(f);
  const WalshSpectrum w = walsh(f);
  for (Word m = 1; m < f.size(); ++m)
    if (anf_coeff_via_walsh(w, m) != a.get(m)) return false;
  return true;
}

Outcome eq1() {
  std::size_t checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1u << n)); ++code) {
      BoolFn f(n);
      for (std::size_t x = 0; x < f.size(); ++x) f.set(x, static_cast<int>((code >> x) & 1u));
      if (!eq1_matches(f)) return {false, fmt("n=%d code=%llu", n, (unsigned long long)code)};
      ++checked;
    }
  }
  // n = 5, 6: every sum of at most two monomials plus random functions.
  std::mt19937_64 rng(2024);
  for (int n = 5; n <= 6; ++n) {
    const Word size = Word{1} << n;
    for (Word m1 = 0; m1 < size; ++m1)
      for (Word m2 = m1; m2 < size; ++m2) {
        BoolFn anf(n);
        anf.flip(m1);
        if (m2 != m1) anf.flip(m2);
        if (!eq1_matches(anf_table(anf))) return {false, fmt("n=%d monomials %u,%u", n, m1, m2)};
        ++checked;
      }
    for (int t = 0; t < 20000; ++t) {
      BoolFn f(n);
      for (std::size_t x = 0; x < f.size(); ++x) f.set(x, static_cast<int>(rng() & 1u));
      if (!eq1_matches(f)) return {false, fmt("n=%d random #%d", n, t)};
      ++checked;
    }
  }
  for (int t = 0; t < 100; ++t) {
    BoolFn f(8);
    for (std::size_t x = 0; x < f.size(); ++x) f.set(x, static_cast<int>(rng() & 1u));
    if (!eq1_matches(f)) return {false, fmt("n=8 random #%d", t)};
    ++checked;
  }
  return {true, fmt("%zu functions, all a != 0", checked)};
}

// Four-term Walsh sum from the definition against 8|M0| - offset(n).
Outcome walsh_identity(bool literal) {
  std::size_t cases = 0, mismatches = 0;
  std::string first;
  for (const auto& r : catalog_for({5, 7})) {
    const GammaDecomp d = gamma_decompose(build_function(r));
    const int n = r.n;
    for (Word v = 1; v < d.Phi.size(); ++v) {
      std::vector<int> g(d.Phi.size());
      for (Word x = 0; x < g.size(); ++x) g[x] = oracle::parity(v & d.Phi(x));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::int64_t lhs = 0, m0 = 0;
          const Word ei = Word{1} << i, ej = Word{1} << j;
          for (Word x = 0; x < g.size(); ++x) {
            for (Word u : {Word{0}, ei, ej, ei | ej}) lhs += (g[x] ^ oracle::parity(u & x)) ? -1 : 1;
            if (g[x] == 0 && (x & (ei | ej)) == 0) ++m0;
          }
          const std::int64_t rhs = 8 * m0 - (std::int64_t{1} << (literal ? n - 1 : n));
          ++cases;
          if (lhs != rhs) {
            if (mismatches++ == 0)
              first = fmt("%s v=%u (i,j)=(%d,%d): lhs=%lld rhs=%lld", r.id.c_str(), v, i + 1, j + 1,
                          (long long)lhs, (long long)rhs);
          }
        }
    }
  }
  if (mismatches) return {false, fmt("%zu of %zu cases differ; first ", mismatches, cases) + first};
  return {true, fmt("%zu cases", cases)};
}

Outcome spread_machinery() {
  std::size_t sets = 0, triads = 0;
  for (const auto& r : catalog_for({5, 7})) {
    const GammaDecomp d = gamma_decompose(build_function(r));
    const int n = r.n;
    const std::size_t expected = ((std::size_t{1} << (n - 1)) - 1) / 3;
    for (Word v = 1; v < d.Phi.size(); ++v) {
      const BoolFn g = component(d.Phi, v);
      const F2Set m = zero_set(g);
      const auto dec = decompose_triples(m);
      if (!dec) return {false, fmt("%s v=%u: not decomposable", r.id.c_str(), v)};
      if (dec->triples.size() != expected) return {false, fmt("%s v=%u: %zu triples", r.id.c_str(), v, dec->triples.size())};
      dec->validate(m);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const ParityLink link = parity_link_check(g, *dec, i, j);
          if (!link.ok()) return {false, fmt("%s v=%u (i,j)=(%d,%d)", r.id.c_str(), v, i + 1, j + 1)};
          ++triads;
        }
      ++sets;
    }
  }
  return {true, fmt("%zu zero sets, %zu (v,i,j) cases", sets, triads)};
}

// Recheck a family from the definitions alone.
std::string recheck_family(const std::vector<Triple>& fam, int n) {
  std::set<Word> u{0};
  for (const auto& t : fam) u.insert({t.x, t.y, t.z});
  bool all_even = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Word m = (Word{1} << i) | (Word{1} << j);
      int n0 = 0;
      for (const auto& t : fam) n0 += (t.x & m) && (t.y & m) && (t.z & m);
      all_even = all_even && n0 % 2 == 0;
    }
  bool coord_hyperplane = false;
  for (int m = 0; m < n; ++m) {
    bool all = u.size() == (std::size_t{1} << (n - 1));
    for (Word x : u) all = all && ((x >> m) & 1u) == 0;
    coord_hyperplane = coord_hyperplane || all;
  }
  std::ostringstream s;
  s << "{";
  for (std::size_t k = 0; k < fam.size(); ++k) s << (k ? "," : "") << "{" << fam[k].x << "," << fam[k].y << "," << fam[k].z << "}";
  s << "}: all N0 even=" << (all_even ? "yes" : "no") << ", coordinate hyperplane=" << (coord_hyperplane ? "yes" : "no")
    << ", subspace=" << (oracle::is_subspace(u) ? "yes" : "no");
  return s.str();
}

Outcome conjecture3() {
  Conjecture3Options opts;
  opts.threads = 1;
  const Conjecture3Summary s = conjecture3_exhaustive(5, opts);
  std::string detail = fmt("%llu families, %llu coordinate-hyperplane, %llu with all N0 even, %llu counterexamples",
                           (unsigned long long)s.families, (unsigned long long)s.hyperplane_families,
                           (unsigned long long)s.even_families, (unsigned long long)s.counterexamples);
  if (s.counterexamples == 0) return {true, detail};
  detail += fmt(" (%llu even-but-not-hyperplane, %llu hyperplane-but-odd); first ",
                (unsigned long long)s.even_but_not_hyperplane, (unsigned long long)s.hyperplane_but_odd);
  return {false, detail + recheck_family(s.first_counterexample, 5)};
}

Outcome conjecture4() {
  std::size_t funcs = 0;
  for (const auto& r : catalog_for({5, 7, 9, 11})) {
    const VecFn phi = gamma_decompose(build_function(r)).Phi;
    for (Word v = 1; v < phi.size(); ++v) {
      std::set<Word> m;
      for (Word x = 0; x < phi.size(); ++x)
        if (!oracle::parity(v & phi(x))) m.insert(x);
      if (oracle::is_subspace(m)) return {false, fmt("%s: M_v subspace at v=%u", r.id.c_str(), v)};
    }
    ++funcs;
  }
  return {true, fmt("%zu functions", funcs)};
}

Outcome bentness() {
  std::size_t funcs = 0;
  for (const auto& r : catalog_for({3, 5, 7})) {
    const BoolFn g = gamma(build_function(r));
    const std::int64_t flat = std::int64_t{1} << r.n;
    for (auto c : walsh(g).coefficients)
      if (c != flat && c != -flat) return {false, r.id + ": spectrum not flat"};
    ++funcs;
  }
  return {true, fmt("%zu functions", funcs)};
}

Outcome ea_shift() {
  std::mt19937_64 rng(12);
  std::size_t maps = 0;
  for (const auto& r : catalog_for({5, 6})) {
    const VecFn f = build_function(r);
    const GammaDecomp base = gamma_decompose(f);
    for (int t = 0; t < 20; ++t) {
      const LinearFn l = LinearFn::random(r.n, rng);
      const GammaDecomp s = gamma_decompose(add_linear(f, l));
      if (!(s.Phi == base.Phi)) return {false, r.id + ": Phi changed"};
      for (Word a = 1; a < f.size(); ++a)
        if (s.phi.get(a) != (base.phi.get(a) ^ oracle::parity(l(a) & base.Phi(a))))
          return {false, fmt("%s: phi shift at a=%u", r.id.c_str(), a)};
      ++maps;
    }
  }
  return {true, fmt("%zu linear maps", maps)};
}

Outcome determinism() {
  auto run = [](const char* threads) {
    const char* argv[] = {"apngamma", "verify", "--gold-range", "3", "9", "--threads", threads};
    std::ostringstream out, err;
    const int code = run_cli(7, argv, out, err);
    return std::make_pair(code, out.str());
  };
  const auto one = run("1");
  const auto eight = run("8");
  if (one.first != kExitOk || eight.first != kExitOk) return {false, fmt("exit codes %d/%d", one.first, eight.first)};
  if (one.second != eight.second) return {false, "reports differ"};
  return {true, fmt("%zu bytes identical", one.second.size())};
}

std::vector<Criterion> criteria() {
  return {
      {"1", "Gold closed form of gamma, n <= 9", 60, gold_closed_form},
      {"2", "Theorem 1 image structure, n = 3..11", 300, theorem1},
      {"3", "odd number of nonzero Phi values", 0, corollary},
      {"4", "weight parity of phi", 0, phi_parity},
      {"5", "component degrees and coordinate shape", 600, degrees},
      {"6", "ANF coefficients from Walsh values", 0, eq1},
      {"7", "four-term Walsh sum = 8|M0| - 2^(n-1), n = 5, 7", 0, [] { return walsh_identity(true); }},
      {"7b", "four-term Walsh sum = 8|M0| - 2^n, n = 5, 7", 0, [] { return walsh_identity(false); }},
      {"8", "triple decompositions, counting identity, parity link", 0, spread_machinery},
      {"9", "Conjecture 3 exhaustive, n = 5", 1800, conjecture3},
      {"10", "zero sets are not subspaces, odd n = 5..11", 0, conjecture4},
      {"11", "gamma is bent, n = 3, 5, 7", 0, bentness},
      {"12", "EA shift of Phi and phi, n = 5, 6", 0, ea_shift},
      {"13", "verify report identical at 1 and 8 workers", 0, determinism},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> only;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--only" && k + 1 < argc) {
      only.insert(argv[++k]);
    } else {
      std::cerr << "usage: acceptance [--only ID]...\n";
      return 2;
    }
  }
  int failures = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (!only.empty() && !only.count(c.id)) continue;
    ++ran;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.pass && c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += fmt(" (over the %.0f s limit)", c.limit_s);
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << "criterion " << c.id << ": " << c.title << " [" << fmt("%.2f s", secs)
              << "] " << o.detail << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no criterion matched\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
