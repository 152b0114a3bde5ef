#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apngamma/catalog.hpp"
#include "apngamma/structure.hpp"

namespace apngamma {

inline constexpr int kReportSchema = 1;

enum class CheckClass { Theorem, Conjecture, Identity };

struct CheckEntry {
  std::string name;
  Verdict verdict = Verdict::Skipped;
  CheckClass cls = CheckClass::Theorem;
};

struct Witness {
  std::string kind;   // "conjecture" or "theorem"
  std::string check;  // check name this witness refutes
  std::string id;     // function id
  std::vector<std::pair<std::string, std::int64_t>> fields;
};

struct FunctionResult {
  std::string id;
  int n = 0;
  FunctionKind kind = FunctionKind::Gold;
  std::optional<Word> poly;
  bool is_apn = false;
  bool is_quadratic = false;
  int algebraic_degree = 0;
  std::optional<std::string> error;

  std::optional<ParityVerdict> phi;
  std::optional<ImageReport> image;
  std::optional<DegreeReport> degrees;
  std::vector<CheckEntry> checks;
  Verdict c1 = Verdict::Skipped;
  Verdict c2 = Verdict::Skipped;
  Verdict c3 = Verdict::Skipped;
  Verdict c4 = Verdict::Skipped;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool theorem_failure() const;
  bool counterexample() const;
};

struct ReportSummary {
  std::size_t functions = 0;
  std::size_t pipeline_errors = 0;
  std::size_t theorem_failures = 0;
  std::size_t conjecture_counterexamples = 0;
};

ReportSummary summarize(const std::vector<FunctionResult>& results);

// Deterministic JSON; object keys appear in schema order.
std::string write_report(const std::vector<FunctionResult>& results,
                         bool with_summary = false);

}  // namespace apngamma
