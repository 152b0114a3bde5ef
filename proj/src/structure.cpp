#include "apngamma/structure.hpp"

#include <algorithm>
#include <string>

#include "apngamma/error.hpp"

namespace apngamma {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

std::vector<Word> preimage(const VecFn& Phi, Word v) {
  std::vector<Word> out;
  for (Word a = 0; a < Phi.size(); ++a) {
    if (Phi.table[a] == v) out.push_back(a);
  }
  return out;
}

ImageReport image_stats(const VecFn& Phi) {
  if (Phi.table[0] != 0) {
    throw Error(ErrorKind::InvalidArgument, "Phi(0) must be 0");
  }
  std::map<Word, std::vector<Word>> groups;
  for (Word a = 1; a < Phi.size(); ++a) {
    if (Phi.table[a] != 0) groups[Phi.table[a]].push_back(a);
  }
  ImageReport r;
  r.distinct_nonzero_values = groups.size();
  r.is_permutation = groups.size() == Phi.size() - 1 &&
                     std::none_of(Phi.table.begin() + 1, Phi.table.end(),
                                  [](Word y) { return y == 0; });
  for (auto& [v, members] : groups) {
    PreimageInfo info;
    info.size = members.size();
    std::vector<Word> with_zero;
    with_zero.reserve(members.size() + 1);
    with_zero.push_back(0);
    with_zero.insert(with_zero.end(), members.begin(), members.end());
    info.is_subspace_with_zero = is_linear_subspace(with_zero);
    if (info.is_subspace_with_zero) {
      info.dimension = std::countr_zero(with_zero.size());
    }
    r.preimages.emplace(v, info);
  }
  return r;
}

RestrictionLinearity phi_restriction_linearity(const GammaDecomp& decomp,
                                               const ImageReport& report) {
  if (decomp.n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "restriction linearity is stated for even n");
  }
  RestrictionLinearity out;
  for (const auto& [v, info] : report.preimages) {
    const std::vector<Word> members = preimage(decomp.Phi, v);
    std::vector<int> rhs;
    rhs.reserve(members.size());
    std::uint64_t w = 0;
    for (Word x : members) {
      rhs.push_back(decomp.phi.get(x));
      w += decomp.phi.get(x);
    }
    out.restricted_weight[v] = w;
    const auto c = solve(members, rhs, decomp.n);
    if (!c) {
      out.ok = false;
      if (!out.failing_value) out.failing_value = v;
      continue;
    }
    out.coefficients[v] = *c;
  }
  return out;
}

ParityVerdict phi_weight_parity(const BoolFn& phi) {
  ParityVerdict p;
  p.weight = phi.weight();
  p.weight_odd = (p.weight & 1u) != 0;
  p.degree = degree(phi);
  p.expected_odd = phi.vars() % 2 == 0;
  p.is_theorem = p.expected_odd;
  p.pass = p.weight_odd == p.expected_odd;
  return p;
}

std::vector<CoordinateShape> coordinate_structure(const VecFn& Phi) {
  const int n = Phi.n;
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "coordinate structure applies to even n >= 4");
  }
  const Word full = bits::full_mask(n);
  std::vector<CoordinateShape> shapes;
  for (int i = 0; i < n; ++i) {
    const BoolFn anf = anf_table(coordinate(Phi, i));
    CoordinateShape s;
    s.coordinate = i;
    s.degree = max_monomial_weight(anf);
    int near_full = 0;
    for (int j = 0; j < n; ++j) near_full += anf.get(full ^ bits::unit(j));
    const int has_full = anf.get(full);
    s.top_monomials = near_full + has_full;
    if (s.top_monomials == 0) {
      s.ok = true;
      s.lambda = 0;
    } else if (near_full == n && has_full) {
      s.ok = true;
      s.lambda = 1;
    }
    shapes.push_back(s);
  }
  return shapes;
}

DegreeReport component_degrees(const VecFn& Phi) {
  const int n = Phi.n;
  if (n < 3) {
    throw Error(ErrorKind::InvalidArgument, "component degrees need n >= 3");
  }
  DegreeReport r;
  r.n = n;
  r.per_component.assign(Phi.size(), 0);
  r.min = n + 1;
  r.max = -1;
  for (Word v = 1; v < Phi.size(); ++v) {
    const int d = degree(component(Phi, v));
    r.per_component[v] = d;
    r.min = std::min(r.min, d);
    r.max = std::max(r.max, d);
    if (d != n - 2 && !r.first_off_n_minus_2) r.first_off_n_minus_2 = v;
  }
  r.all_n_minus_2 = !r.first_off_n_minus_2.has_value();
  if (n >= 4 && n % 2 == 0) r.coordinate_structure = coordinate_structure(Phi);
  return r;
}

std::optional<std::pair<int, int>> full_degree_linear_shift(const VecFn& Phi) {
  const int n = Phi.n;
  for (int i = 0; i < n; ++i) {
    const BoolFn coord = coordinate(Phi, i);
    for (int j = 0; j < n; ++j) {
      BoolFn h(n);
      for (Word a = 0; a < Phi.size(); ++a) {
        h.set(a, ((a >> j) & 1u) & coord.get(a));
      }
      if (degree(h) == n) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace apngamma
