#include "apngamma/report.hpp"

#include <map>
#include <tuple>

#include "json.hpp"

namespace apngamma {

using Json = nlohmann::ordered_json;

bool FunctionResult::theorem_failure() const {
  for (const auto& c : checks) {
    if (c.cls != CheckClass::Conjecture && c.verdict == Verdict::Fail) return true;
  }
  return false;
}

bool FunctionResult::counterexample() const {
  for (Verdict v : {c1, c2, c3, c4}) {
    if (v == Verdict::Fail) return true;
  }
  return false;
}

ReportSummary summarize(const std::vector<FunctionResult>& results) {
  ReportSummary s;
  s.functions = results.size();
  for (const auto& r : results) {
    s.pipeline_errors += r.error.has_value();
    s.theorem_failures += r.theorem_failure();
    s.conjecture_counterexamples += r.counterexample();
  }
  return s;
}

namespace {

Json image_json(const ImageReport& image) {
  // Preimages are grouped by (size, subspace?, dimension) to keep the
  // report compact for permutations.
  std::map<std::tuple<std::size_t, bool, int>, std::size_t> classes;
  for (const auto& [v, info] : image.preimages) {
    ++classes[{info.size, info.is_subspace_with_zero, info.dimension}];
  }
  Json cls = Json::array();
  for (const auto& [key, count] : classes) {
    const auto& [size, subspace, dim] = key;
    Json c;
    c["size"] = size;
    c["is_subspace_with_zero"] = subspace;
    c["dimension"] = subspace ? Json(dim) : Json(nullptr);
    c["count"] = count;
    cls.push_back(std::move(c));
  }
  Json j;
  j["distinct_nonzero_values"] = image.distinct_nonzero_values;
  j["is_permutation"] = image.is_permutation;
  j["preimage_classes"] = std::move(cls);
  return j;
}

Json function_json(const FunctionResult& r) {
  Json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["kind"] = to_string(r.kind);
  j["poly"] = r.poly ? Json(hex(*r.poly)) : Json(nullptr);
  j["is_apn"] = r.is_apn;
  j["is_quadratic"] = r.is_quadratic;
  j["algebraic_degree"] = r.algebraic_degree;
  if (r.error) j["error"] = *r.error;
  if (r.phi) {
    j["phi_weight"] = r.phi->weight;
    j["phi_weight_parity_ok"] = r.phi->pass;
    j["phi_degree"] = r.phi->degree;
  }
  if (r.image) j["image"] = image_json(*r.image);
  if (r.degrees) {
    Json cd;
    cd["min"] = r.degrees->min;
    cd["max"] = r.degrees->max;
    cd["all_n_minus_2"] = r.degrees->all_n_minus_2;
    j["component_degrees"] = std::move(cd);
    j["component_degree_max"] = r.degrees->max;
    Json cs = Json::array();
    for (const auto& s : r.degrees->coordinate_structure) {
      Json e;
      e["i"] = s.coordinate + 1;
      e["ok"] = s.ok;
      e["lambda"] = s.lambda;
      e["degree"] = s.degree;
      cs.push_back(std::move(e));
    }
    j["coordinate_structure"] = std::move(cs);
  }
  Json checks = Json::object();
  for (const auto& c : r.checks) checks[c.name] = to_string(c.verdict);
  j["checks"] = std::move(checks);

  Json conj;
  conj["c1"] = to_string(r.c1);
  conj["c2"] = to_string(r.c2);
  conj["c3"] = to_string(r.c3);
  conj["c4"] = to_string(r.c4);
  Json wits = Json::array();
  for (const auto& w : r.witnesses) {
    Json e;
    e["kind"] = w.kind;
    e["check"] = w.check;
    e["id"] = w.id;
    Json fields = Json::object();
    for (const auto& [k, v] : w.fields) fields[k] = v;
    e["witness"] = std::move(fields);
    wits.push_back(std::move(e));
  }
  conj["witnesses"] = std::move(wits);
  j["conjectures"] = std::move(conj);

  Json t = Json::object();
  for (const auto& [k, v] : r.timings_ms) t[k] = v;
  j["timings_ms"] = std::move(t);
  return j;
}

}  // namespace

std::string write_report(const std::vector<FunctionResult>& results,
                         bool with_summary) {
  Json root;
  root["schema"] = kReportSchema;
  Json fns = Json::array();
  for (const auto& r : results) fns.push_back(function_json(r));
  root["functions"] = std::move(fns);
  if (with_summary) {
    const ReportSummary s = summarize(results);
    Json sj;
    sj["functions"] = s.functions;
    sj["pipeline_errors"] = s.pipeline_errors;
    sj["theorem_failures"] = s.theorem_failures;
    sj["conjecture_counterexamples"] = s.conjecture_counterexamples;
    root["summary"] = std::move(sj);
  }
  return root.dump(2) + "\n";
}

}  // namespace apngamma
