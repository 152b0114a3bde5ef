#include "apngamma/driver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "apngamma/error.hpp"
#include "apngamma/spread.hpp"
#include "json.hpp"

namespace apngamma {

namespace {

using Clock = std::chrono::steady_clock;

class PhaseTimer {
 public:
  PhaseTimer(FunctionResult& r, bool enabled) : r_(r), enabled_(enabled) {}

  template <typename Fn>
  auto run(const char* name, Fn&& fn) {
    const auto start = Clock::now();
    struct Record {
      PhaseTimer& t;
      const char* name;
      Clock::time_point start;
      ~Record() {
        if (t.enabled_) {
          const std::chrono::duration<double, std::milli> d = Clock::now() - start;
          t.r_.timings_ms.emplace_back(name, d.count());
        }
      }
    } rec{*this, name, start};
    return fn();
  }

 private:
  FunctionResult& r_;
  bool enabled_;
};

Verdict verdict(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

class Checks {
 public:
  explicit Checks(FunctionResult& r) : r_(r) {}

  void set(const char* name, CheckClass cls, Verdict v) {
    r_.checks.push_back({name, v, cls});
  }
  void skip(const char* name, CheckClass cls) { set(name, cls, Verdict::Skipped); }

  void witness(const char* kind, const char* check,
               std::vector<std::pair<std::string, std::int64_t>> fields) {
    r_.witnesses.push_back({kind, check, r_.id, std::move(fields)});
  }

 private:
  FunctionResult& r_;
};

void check_image(const GammaDecomp& d, const ImageReport& image, Checks& c) {
  const int n = d.n;
  bool thm1 = true;
  if (n % 2 == 1) {
    thm1 = image.is_permutation;
  } else {
    for (const auto& [v, info] : image.preimages) {
      if (!info.is_subspace_with_zero || info.dimension < 2 || info.dimension % 2 != 0) {
        thm1 = false;
        c.witness("theorem", "theorem1", {{"v", v}, {"size", static_cast<std::int64_t>(info.size)}});
        break;
      }
    }
  }
  c.set("theorem1", CheckClass::Theorem, verdict(thm1));

  std::uint64_t covered = 0;
  for (const auto& [v, info] : image.preimages) covered += info.size;
  const bool corollary = image.distinct_nonzero_values % 2 == 1 &&
                         covered == (std::uint64_t{1} << n) - 1;
  c.set("corollary", CheckClass::Theorem, verdict(corollary));
}

void check_phi(const GammaDecomp& d, const ImageReport& image, FunctionResult& r,
               Checks& c) {
  const int n = d.n;
  r.phi = phi_weight_parity(d.phi);
  if (n % 2 == 0) {
    c.set("proposition", CheckClass::Theorem, verdict(r.phi->pass));
    const RestrictionLinearity lin = phi_restriction_linearity(d, image);
    bool ok = lin.ok;
    for (const auto& [v, w] : lin.restricted_weight) {
      const auto& info = image.preimages.at(v);
      const std::uint64_t half =
          info.dimension >= 1 ? std::uint64_t{1} << (info.dimension - 1) : 0;
      if (w != 0 && w != half) ok = false;
    }
    if (!ok && lin.failing_value) {
      c.witness("theorem", "phi_restriction", {{"v", *lin.failing_value}});
    }
    c.set("phi_restriction", CheckClass::Theorem, verdict(ok));
    r.c1 = Verdict::Skipped;
  } else {
    c.skip("proposition", CheckClass::Theorem);
    c.skip("phi_restriction", CheckClass::Theorem);
    r.c1 = verdict(r.phi->pass);
    if (!r.phi->pass) {
      c.witness("conjecture", "c1", {{"phi_weight", static_cast<std::int64_t>(r.phi->weight)}});
    }
  }
}

void check_degrees(const GammaDecomp& d, FunctionResult& r, Checks& c) {
  const int n = d.n;
  r.degrees = component_degrees(d.Phi);
  const DegreeReport& deg = *r.degrees;
  if (n % 2 == 1) {
    c.set("degree_odd", CheckClass::Theorem, verdict(deg.max <= n - 2));
  } else {
    c.skip("degree_odd", CheckClass::Theorem);
  }
  if (n % 2 == 0 && n >= 4) {
    bool shapes = true;
    for (const auto& s : deg.coordinate_structure) {
      if (!s.ok) {
        shapes = false;
        c.witness("theorem", "degree_even", {{"i", s.coordinate + 1}});
        break;
      }
    }
    c.set("degree_even", CheckClass::Theorem, verdict(shapes));
    const auto shift = full_degree_linear_shift(d.Phi);
    if (shift) {
      c.witness("theorem", "linear_shift_degree",
                {{"i", shift->first + 1}, {"j", shift->second + 1}});
    }
    c.set("linear_shift_degree", CheckClass::Theorem, verdict(!shift));
  } else {
    c.skip("degree_even", CheckClass::Theorem);
    c.skip("linear_shift_degree", CheckClass::Theorem);
  }
  r.c2 = verdict(deg.all_n_minus_2);
  if (!deg.all_n_minus_2) {
    const Word v = *deg.first_off_n_minus_2;
    c.witness("conjecture", "c2", {{"v", v}, {"degree", deg.per_component[v]}});
  }
}

// Walsh-sum identity, degree witnesses, triple partitions and the parity
// link for odd n >= 5.
void check_spread(const GammaDecomp& d, const AnalysisOptions& opt,
                  FunctionResult& r, Checks& c) {
  const int n = d.n;
  const bool applicable = n % 2 == 1 && n >= 5;
  if (!applicable) {
    for (const char* name : {"walsh_sum_identity", "degree_witness",
                             "spread_decomposition", "parity_link"}) {
      c.skip(name, CheckClass::Identity);
    }
    r.c3 = Verdict::Skipped;
    return;
  }
  const bool do_spread = n <= opt.spread_max_n;
  bool identity = true, witness_ok = true, decomposed = true, link = true, c3 = true;
  const std::uint64_t expected_triples = ((std::uint64_t{1} << (n - 1)) - 1) / 3;
  for (Word v = 1; v < d.Phi.size(); ++v) {
    const BoolFn g = component(d.Phi, v);
    const WalshSpectrum w = walsh(g);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!walsh_sum_identity(g, w, i, j).equal) {
          if (identity) c.witness("theorem", "walsh_sum_identity", {{"v", v}, {"i", i + 1}, {"j", j + 1}});
          identity = false;
        }
      }
    }
    const auto wit = degree_witness(g);
    const int deg = r.degrees->per_component[v];
    bool consistent = wit.has_value() == (deg == n - 2);
    if (wit) {
      const Word mask = bits::full_mask(n) ^ bits::unit(wit->first) ^ bits::unit(wit->second);
      consistent = consistent && anf_coeff_via_walsh(w, mask) == 1 &&
                   anf_table(g).get(mask) == 1;
    }
    if (!consistent && witness_ok) {
      c.witness("theorem", "degree_witness", {{"v", v}});
    }
    witness_ok = witness_ok && consistent;

    if (!do_spread) continue;
    const F2Set m = zero_set(g);
    const auto spread = decompose_triples(m);
    if (!spread || spread->triples.size() != expected_triples) {
      if (decomposed) c.witness("theorem", "spread_decomposition", {{"v", v}});
      decomposed = false;
      continue;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!parity_link_check(g, *spread, i, j).ok()) {
          if (link) c.witness("theorem", "parity_link", {{"v", v}, {"i", i + 1}, {"j", j + 1}});
          link = false;
        }
      }
    }
    const Conjecture3Verdict cv = conjecture3_check(*spread);
    if (!cv.agree) {
      if (c3) {
        std::vector<std::pair<std::string, std::int64_t>> f{{"v", v}};
        if (cv.hyperplane_coordinate) f.emplace_back("m", *cv.hyperplane_coordinate);
        if (cv.odd_pair) {
          f.emplace_back("i", cv.odd_pair->first + 1);
          f.emplace_back("j", cv.odd_pair->second + 1);
        }
        c.witness("conjecture", "c3", std::move(f));
      }
      c3 = false;
    }
  }
  c.set("walsh_sum_identity", CheckClass::Identity, verdict(identity));
  c.set("degree_witness", CheckClass::Identity, verdict(witness_ok));
  if (do_spread) {
    c.set("spread_decomposition", CheckClass::Theorem, verdict(decomposed));
    c.set("parity_link", CheckClass::Identity, verdict(link));
    r.c3 = decomposed ? verdict(c3) : Verdict::Skipped;
  } else {
    c.skip("spread_decomposition", CheckClass::Theorem);
    c.skip("parity_link", CheckClass::Identity);
    r.c3 = Verdict::Skipped;
  }
}

bool gold_closed_form(const VecFn& f, const GammaDecomp& d, const FieldSpec& spec,
                      int k) {
  const int n = spec.degree();
  const std::size_t size = std::size_t{1} << n;
  const std::uint64_t exponent = (std::uint64_t{1} << k) + 1;
  std::vector<int> tr(size);
  for (Word x = 0; x < size; ++x) tr[x] = trace(spec, x);
  const int t1 = tr[1];
  const std::vector<Word> u = trace_form_phi(d, spec);
  if (u[0] != 0) return false;
  const BoolFn g = gamma(f);
  for (Word a = 1; a < size; ++a) {
    const Word ua = inv(spec, pow(spec, a, exponent));
    if (u[a] != ua) return false;
    const std::uint64_t row = std::uint64_t{a} << n;
    for (Word b = 0; b < size; ++b) {
      if (g.get(row | b) != (tr[mul(spec, ua, b)] ^ t1 ^ 1)) return false;
    }
  }
  return true;
}

}  // namespace

FunctionResult analyze_function(const FunctionSpecRecord& record,
                                const AnalysisOptions& options) {
  FunctionResult r;
  r.id = record.id;
  r.n = record.n;
  r.kind = record.kind;
  if (record.kind != FunctionKind::TruthTable) r.poly = record.poly;
  PhaseTimer timer(r, options.timings);
  Checks c(r);
  try {
    const VecFn f = timer.run("build", [&] { return build_function(record); });
    r.n = f.n;
    if (record.kind != FunctionKind::TruthTable && !r.poly) r.poly = default_poly(f.n);
    r.algebraic_degree = vec_degree(f);
    r.is_quadratic = r.algebraic_degree == 2;
    r.is_apn = timer.run("is_apn", [&] { return is_apn(f); });
    if (!r.is_apn) throw Error(ErrorKind::NotApn, "not APN");
    if (!r.is_quadratic) {
      throw Error(ErrorKind::NotQuadratic,
                  "not quadratic (degree " + std::to_string(r.algebraic_degree) + ")");
    }
    const GammaDecomp d = timer.run("decompose", [&] { return gamma_decompose(f); });

    timer.run("reconstruct", [&] {
      c.set("gamma_reconstruction", CheckClass::Identity,
            verdict(d.reconstruct_gamma() == gamma(f)));
      return 0;
    });
    r.image = timer.run("image", [&] { return image_stats(d.Phi); });
    check_image(d, *r.image, c);
    timer.run("phi", [&] {
      check_phi(d, *r.image, r, c);
      return 0;
    });
    timer.run("degrees", [&] {
      check_degrees(d, r, c);
      return 0;
    });
    timer.run("spread", [&] {
      check_spread(d, options, r, c);
      return 0;
    });
    if (d.n >= 5) {
      const Conjecture4Verdict c4 = timer.run("conjecture4", [&] { return conjecture4_check(d); });
      r.c4 = verdict(c4.holds);
      if (!c4.holds) c.witness("conjecture", "c4", {{"v", *c4.violating_v}});
    }
    if (d.n % 2 == 1 && d.n <= options.bent_max_n) {
      c.set("gamma_bent", CheckClass::Theorem,
            verdict(timer.run("bent", [&] { return is_bent(gamma(f)); })));
    } else {
      c.skip("gamma_bent", CheckClass::Theorem);
    }
    if (record.kind == FunctionKind::Gold) {
      const FieldSpec spec(f.n, record.field_poly());
      c.set("gold_closed_form", CheckClass::Theorem,
            verdict(timer.run("closed_form",
                              [&] { return gold_closed_form(f, d, spec, record.k); })));
    } else {
      c.skip("gold_closed_form", CheckClass::Theorem);
    }
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<FunctionResult> analyze_all(const std::vector<FunctionSpecRecord>& records,
                                        const AnalysisOptions& options, int threads) {
  std::vector<FunctionResult> out(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1)) {
      out[i] = analyze_function(records[i], options);
    }
  };
  threads = std::max(1, std::min<int>(threads, static_cast<int>(records.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

int exit_code(const std::vector<FunctionResult>& results) {
  const ReportSummary s = summarize(results);
  if (s.pipeline_errors != 0 || s.theorem_failures != 0) return kExitError;
  if (s.conjecture_counterexamples != 0) return kExitCounterexample;
  return kExitOk;
}

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
}

void report_errors(const std::vector<FunctionResult>& results, std::ostream& err) {
  for (const auto& r : results) {
    if (r.error) err << r.id << ": " << *r.error << "\n";
    for (const auto& c : r.checks) {
      if (c.verdict == Verdict::Fail) err << r.id << ": check " << c.name << " FAILED\n";
    }
    for (const auto& w : r.witnesses) {
      if (w.kind == "conjecture") err << r.id << ": COUNTEREXAMPLE to " << w.check << "\n";
    }
  }
}

FunctionSpecRecord single_function(const RunConfig& cfg) {
  if (cfg.functions.size() != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "this command takes exactly one function selector");
  }
  return cfg.functions.front();
}

}  // namespace

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.functions.empty()) {
    err << "analyze: no function selected\n";
    return kExitError;
  }
  const auto results = analyze_all(cfg.functions, cfg.analysis, cfg.threads);
  emit(write_report(results), cfg.json_path, out);
  report_errors(results, err);
  return exit_code(results);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto records = cfg.functions.empty() ? gold_catalog(3, 11) : cfg.functions;
  const auto results = analyze_all(records, cfg.analysis, cfg.threads);
  emit(write_report(results, true), cfg.json_path, out);
  report_errors(results, err);
  const ReportSummary s = summarize(results);
  err << "verify: " << s.functions << " functions, " << s.pipeline_errors
      << " pipeline errors, " << s.theorem_failures << " theorem failures, "
      << s.conjecture_counterexamples << " conjecture counterexamples\n";
  return exit_code(results);
}

int cmd_gamma(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const VecFn f = build_function(single_function(cfg));
  const std::string& target = cfg.out_path.empty() ? cfg.json_path : cfg.out_path;
  if (cfg.dump == "gamma") {
    emit(write_bool_tt(gamma(f)), target, out);
  } else if (cfg.dump == "Phi") {
    emit(write_tt(gamma_decompose(f).Phi), target, out);
  } else if (cfg.dump == "phi") {
    emit(write_bool_tt(gamma_decompose(f).phi), target, out);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown dump target " + cfg.dump);
  }
  return kExitOk;
}

int cmd_spread(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  using Json = nlohmann::ordered_json;
  const FunctionSpecRecord rec = single_function(cfg);
  const VecFn f = build_function(rec);
  const GammaDecomp d = gamma_decompose(f);
  Json root;
  root["schema"] = kReportSchema;
  root["id"] = rec.id;
  root["n"] = f.n;
  Json sets = Json::array();
  for (Word v = 1; v < f.size(); ++v) {
    if (cfg.only_v && *cfg.only_v != v) continue;
    const F2Set m = zero_set(d, v);
    Json e;
    e["v"] = v;
    e["size"] = m.size();
    e["is_subspace"] = is_linear_subspace(m);
    if (m.size() % 3 != 1) {
      e["status"] = "SIZE_MISMATCH";
    } else if (const auto s = decompose_triples(m)) {
      e["status"] = "OK";
      Json triples = Json::array();
      for (const Triple& t : s->triples) triples.push_back({t.x, t.y, t.z});
      e["triples"] = std::move(triples);
      if (f.n >= 3 && (((std::uint64_t{1} << (f.n - 1)) - 1) % 3 == 0) &&
          s->triples.size() == ((std::uint64_t{1} << (f.n - 1)) - 1) / 3) {
        const Conjecture3Verdict cv = conjecture3_check(*s);
        e["conjecture3"] = cv.agree ? "AGREE" : "COUNTEREXAMPLE";
      }
    } else {
      e["status"] = "NOT_DECOMPOSABLE";
    }
    sets.push_back(std::move(e));
  }
  root["zero_sets"] = std::move(sets);
  emit(root.dump(2) + "\n", cfg.json_path, out);
  return kExitOk;
}

int cmd_conjecture3(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using Json = nlohmann::ordered_json;
  if (cfg.conjecture3_n != 5 && !cfg.force) {
    err << "conjecture3: n = " << cfg.conjecture3_n
        << " needs --force (exhaustive search is sized for n = 5)\n";
    return kExitError;
  }
  Conjecture3Options opt;
  opt.threads = cfg.threads;
  opt.force = cfg.force;
  opt.max_nodes = cfg.max_nodes;
  const Conjecture3Summary s = conjecture3_exhaustive(cfg.conjecture3_n, opt);
  Json root;
  root["schema"] = kReportSchema;
  root["n"] = s.n;
  root["family_size"] = s.family_size;
  root["subspaces"] = s.subspaces;
  root["families"] = s.families;
  root["hyperplane_families"] = s.hyperplane_families;
  root["even_families"] = s.even_families;
  root["subspace_families"] = s.subspace_families;
  root["counterexamples"] = s.counterexamples;
  root["hyperplane_but_odd"] = s.hyperplane_but_odd;
  root["even_but_not_hyperplane"] = s.even_but_not_hyperplane;
  Json first = Json::array();
  for (const Triple& t : s.first_counterexample) first.push_back({t.x, t.y, t.z});
  root["first_counterexample"] = std::move(first);
  emit(root.dump(2) + "\n", cfg.json_path, out);
  if (s.counterexamples != 0) {
    err << "conjecture3: " << s.counterexamples << " COUNTEREXAMPLE families\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

int cmd_eashift(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using Json = nlohmann::ordered_json;
  std::mt19937_64 rng(cfg.seed);
  Json root;
  root["schema"] = kReportSchema;
  root["seed"] = cfg.seed;
  Json fns = Json::array();
  bool all_ok = true;
  for (const auto& rec : cfg.functions) {
    const VecFn f = build_function(rec);
    const GammaDecomp base = gamma_decompose(f);
    int failures = 0;
    for (int t = 0; t < cfg.count; ++t) {
      const LinearFn l = LinearFn::random(f.n, rng);
      const GammaDecomp shifted = gamma_decompose(add_linear(f, l));
      bool ok = shifted.Phi == base.Phi;
      for (Word a = 1; a < f.size() && ok; ++a) {
        ok = shifted.phi.get(a) == (base.phi.get(a) ^ bits::dot(l(a), base.Phi.table[a]));
      }
      failures += !ok;
    }
    Json e;
    e["id"] = rec.id;
    e["trials"] = cfg.count;
    e["failures"] = failures;
    fns.push_back(std::move(e));
    all_ok = all_ok && failures == 0;
  }
  root["functions"] = std::move(fns);
  emit(root.dump(2) + "\n", cfg.json_path, out);
  if (!all_ok) err << "eashift: identity failed\n";
  return all_ok ? kExitOk : kExitError;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Associated Boolean functions of quadratic APN functions"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::vector<int>> gold;
  std::vector<int> gold_range;
  std::vector<std::string> tt_paths;
  std::vector<std::vector<std::string>> univariate;
  std::string poly_text;
  std::string only_v_text;

  auto add_selectors = [&](CLI::App* sub) {
    sub->add_option("--gold", gold, "Gold function x^(2^k+1): --gold N K")
        ->expected(2)->allow_extra_args(false)->take_all();
    sub->add_option("--gold-range", gold_range, "All Gold functions for N in [A, B]")
        ->expected(2);
    sub->add_option("--tt", tt_paths, "Truth-table file (.tt)");
    sub->add_option("--univariate", univariate,
                    "Univariate polynomial: --univariate N c:e,c:e,...")
        ->expected(2);
    sub->add_option("--poly", poly_text, "Field modulus, e.g. 0x25");
    sub->add_option("--json", cfg.json_path, "Write the report to this path");
    sub->add_option("--threads", cfg.threads, "Worker count")->check(CLI::PositiveNumber);
  };
  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--spread-max-n", cfg.analysis.spread_max_n,
                    "Largest n for triple partitions of zero sets");
    sub->add_option("--bent-max-n", cfg.analysis.bent_max_n,
                    "Largest n for the bentness test of gamma");
    sub->add_flag("--timings", cfg.analysis.timings, "Record phase timings");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze selected functions");
  add_selectors(analyze);
  add_analysis(analyze);
  CLI::App* verify = app.add_subcommand("verify", "Run every check over a catalog");
  add_selectors(verify);
  add_analysis(verify);
  CLI::App* gamma_cmd = app.add_subcommand("gamma", "Dump gamma_F, Phi_F or phi_F");
  add_selectors(gamma_cmd);
  gamma_cmd->add_option("--out", cfg.out_path, "Output path");
  gamma_cmd->add_option("--what", cfg.dump, "gamma | Phi | phi")
      ->check(CLI::IsMember({"gamma", "Phi", "phi"}));
  CLI::App* spread_cmd = app.add_subcommand("spread", "Dump triple partitions of zero sets");
  add_selectors(spread_cmd);
  spread_cmd->add_option("--v", only_v_text, "Only this component vector");
  CLI::App* conj3 = app.add_subcommand("conjecture3", "Exhaustive subspace-family check");
  conj3->add_option("--n", cfg.conjecture3_n, "Dimension (5 unless --force)");
  conj3->add_flag("--force", cfg.force, "Allow n != 5");
  conj3->add_option("--max-nodes", cfg.max_nodes, "Search node cap");
  conj3->add_option("--json", cfg.json_path, "Write the summary to this path");
  conj3->add_option("--threads", cfg.threads, "Worker count")->check(CLI::PositiveNumber);
  CLI::App* ea = app.add_subcommand("eashift", "Randomized Phi/phi shift check");
  add_selectors(ea);
  ea->add_option("--count", cfg.count, "Random linear maps per function");
  ea->add_option("--seed", cfg.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (!poly_text.empty()) cfg.poly = parse_poly(poly_text);
    if (!only_v_text.empty()) cfg.only_v = parse_poly(only_v_text);
    for (const auto& g : gold) cfg.functions.push_back(gold_record(g.at(0), g.at(1), cfg.poly));
    if (!gold_range.empty()) {
      for (auto rec : gold_catalog(gold_range.at(0), gold_range.at(1))) {
        if (cfg.poly) rec = gold_record(rec.n, rec.k, cfg.poly);
        cfg.functions.push_back(rec);
      }
    }
    for (const auto& u : univariate) {
      cfg.functions.push_back(univariate_record(std::stoi(u.at(0)),
                                                parse_univariate_terms(u.at(1)), cfg.poly));
    }
    for (const auto& p : tt_paths) cfg.functions.push_back(tt_record(p));

    const CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (cfg.command == "analyze") return cmd_analyze(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "gamma") return cmd_gamma(cfg, out, err);
    if (cfg.command == "spread") return cmd_spread(cfg, out, err);
    if (cfg.command == "conjecture3") return cmd_conjecture3(cfg, out, err);
    if (cfg.command == "eashift") return cmd_eashift(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace apngamma
