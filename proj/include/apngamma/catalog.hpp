#pragma once

// Function catalog and the text formats used to exchange functions.
//
// Vectorial truth-table format (.tt):
//   n=<int>\n
//   <F(0)> <F(1)> ... <F(2^n-1)>\n
// with decimal outputs separated by single spaces. Boolean tables use the
// same layout with outputs restricted to 0/1.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apngamma/boolfn.hpp"
#include "apngamma/gf2n.hpp"
#include "apngamma/vecfn.hpp"

namespace apngamma {

enum class FunctionKind { Gold, TruthTable, Univariate };
const char* to_string(FunctionKind kind);

struct FunctionSpecRecord {
  std::string id;
  FunctionKind kind = FunctionKind::Gold;
  int n = 0;
  int k = 0;                      // gold
  std::optional<Word> poly;       // gold, univariate; default when empty
  std::vector<UnivariateTerm> terms;  // univariate
  std::string path;               // truth-table

  Word field_poly() const { return poly ? *poly : default_poly(n); }
};

FunctionSpecRecord gold_record(int n, int k, std::optional<Word> poly = {});
FunctionSpecRecord tt_record(const std::string& path);
FunctionSpecRecord univariate_record(int n, std::vector<UnivariateTerm> terms,
                                     std::optional<Word> poly = {});

// Every (n, k) with 1 <= k < n and gcd(n, k) = 1 for n in [n_min, n_max].
std::vector<FunctionSpecRecord> gold_catalog(int n_min, int n_max);

// Builds the table; reads the file for truth-table records.
VecFn build_function(const FunctionSpecRecord& record);

VecFn parse_tt(std::string_view text);
std::string write_tt(const VecFn& f);
VecFn read_tt_file(const std::string& path);

BoolFn parse_bool_tt(std::string_view text);
std::string write_bool_tt(const BoolFn& f);

// "c:e,c:e,..." with coefficients and exponents in decimal or 0x-hex.
std::vector<UnivariateTerm> parse_univariate_terms(std::string_view text);

// Parses "0x25" or "37".
Word parse_poly(std::string_view text);
std::string hex(Word value);

}  // namespace apngamma
