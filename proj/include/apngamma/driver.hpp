#pragma once

// Orchestration behind the command-line tool.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apngamma/catalog.hpp"
#include "apngamma/report.hpp"

namespace apngamma {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 2;
inline constexpr int kExitCounterexample = 3;

struct AnalysisOptions {
  // Largest n for which every zero set is partitioned into triples.
  int spread_max_n = 9;
  // Largest n for which gamma_F is tested for bentness.
  int bent_max_n = 9;
  bool timings = false;
};

FunctionResult analyze_function(const FunctionSpecRecord& record,
                                const AnalysisOptions& options = {});

// Results in input order regardless of the worker count.
std::vector<FunctionResult> analyze_all(
    const std::vector<FunctionSpecRecord>& records,
    const AnalysisOptions& options, int threads);

int exit_code(const std::vector<FunctionResult>& results);

struct RunConfig {
  std::string command;
  std::vector<FunctionSpecRecord> functions;
  std::optional<Word> poly;
  int threads = 1;
  std::string json_path;  // empty: stdout
  std::string out_path;
  bool force = false;
  int conjecture3_n = 5;
  std::uint64_t max_nodes = 20'000'000'000ull;
  std::string dump = "gamma";
  std::optional<Word> only_v;
  std::uint64_t seed = 1;
  int count = 20;
  AnalysisOptions analysis;
};

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gamma(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spread(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_conjecture3(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eashift(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Full command line, including argv[0].
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace apngamma
