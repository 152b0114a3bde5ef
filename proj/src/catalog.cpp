#include "apngamma/catalog.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "apngamma/error.hpp"

namespace apngamma {

const char* to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::Gold: return "gold";
    case FunctionKind::TruthTable: return "truth-table";
    case FunctionKind::Univariate: return "univariate";
  }
  return "?";
}

std::string hex(Word value) {
  std::ostringstream os;
  os << "0x" << std::hex << value;
  return os.str();
}

FunctionSpecRecord gold_record(int n, int k, std::optional<Word> poly) {
  FunctionSpecRecord r;
  r.kind = FunctionKind::Gold;
  r.n = n;
  r.k = k;
  r.poly = poly;
  r.id = "gold-n" + std::to_string(n) + "-k" + std::to_string(k);
  if (poly) r.id += "-p" + hex(*poly);
  return r;
}

FunctionSpecRecord tt_record(const std::string& path) {
  FunctionSpecRecord r;
  r.kind = FunctionKind::TruthTable;
  r.path = path;
  r.id = "tt:" + path;
  return r;
}

FunctionSpecRecord univariate_record(int n, std::vector<UnivariateTerm> terms,
                                     std::optional<Word> poly) {
  FunctionSpecRecord r;
  r.kind = FunctionKind::Univariate;
  r.n = n;
  r.poly = poly;
  r.terms = std::move(terms);
  r.id = "uni-n" + std::to_string(n);
  for (const auto& t : r.terms) {
    r.id += "-" + hex(t.coeff) + "x" + std::to_string(t.exponent);
  }
  if (poly) r.id += "-p" + hex(*poly);
  return r;
}

std::vector<FunctionSpecRecord> gold_catalog(int n_min, int n_max) {
  if (n_min < 3 || n_max > 11 || n_min > n_max) {
    throw Error(ErrorKind::InvalidArgument,
                "Gold catalog range must satisfy 3 <= n_min <= n_max <= 11");
  }
  std::vector<FunctionSpecRecord> out;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      if (std::gcd(n, k) == 1) out.push_back(gold_record(n, k));
    }
  }
  return out;
}

VecFn build_function(const FunctionSpecRecord& record) {
  switch (record.kind) {
    case FunctionKind::Gold:
      return gold_vecfn(FieldSpec(record.n, record.field_poly()), record.k);
    case FunctionKind::Univariate:
      return univariate_vecfn(FieldSpec(record.n, record.field_poly()),
                              record.terms);
    case FunctionKind::TruthTable:
      return read_tt_file(record.path);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown function kind");
}

namespace {

struct ParsedTable {
  int n = 0;
  std::vector<std::uint64_t> values;
};

std::uint64_t parse_uint(std::string_view token, const char* what) {
  std::uint64_t v = 0;
  int base = 10;
  if (token.size() > 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
    token.remove_prefix(2);
    base = 16;
  }
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v, base);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::Parse,
                std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return v;
}

ParsedTable parse_table(std::string_view text, int max_vars) {
  const auto newline = text.find('\n');
  std::string_view header = text.substr(0, newline);
  if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
  if (header.substr(0, 2) != "n=") {
    throw Error(ErrorKind::Parse, "first line must be n=<int>");
  }
  ParsedTable t;
  const std::uint64_t n = parse_uint(header.substr(2), "dimension");
  if (n < 1 || n > static_cast<std::uint64_t>(max_vars)) {
    throw Error(ErrorKind::Parse, "dimension " + std::to_string(n) + " unsupported");
  }
  t.n = static_cast<int>(n);
  const std::uint64_t expected = std::uint64_t{1} << n;
  std::string_view body =
      newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
  t.values.reserve(expected);
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() &&
           (body[pos] == ' ' || body[pos] == '\n' || body[pos] == '\r' || body[pos] == '\t')) {
      ++pos;
    }
    if (pos >= body.size()) break;
    std::size_t end = pos;
    while (end < body.size() && body[end] != ' ' && body[end] != '\n' &&
           body[end] != '\r' && body[end] != '\t') {
      ++end;
    }
    t.values.push_back(parse_uint(body.substr(pos, end - pos), "integer"));
    pos = end;
  }
  if (t.values.size() != expected) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(expected) +
                                      " values, got " + std::to_string(t.values.size()));
  }
  return t;
}

}  // namespace

VecFn parse_tt(std::string_view text) {
  ParsedTable t = parse_table(text, kMaxCoreDim);
  const std::uint64_t limit = std::uint64_t{1} << t.n;
  std::vector<Word> table;
  table.reserve(t.values.size());
  for (std::size_t x = 0; x < t.values.size(); ++x) {
    if (t.values[x] >= limit) {
      throw Error(ErrorKind::Parse, "value " + std::to_string(t.values[x]) +
                                        " at input " + std::to_string(x) +
                                        " is >= 2^" + std::to_string(t.n));
    }
    table.push_back(static_cast<Word>(t.values[x]));
  }
  return VecFn(t.n, std::move(table));
}

std::string write_tt(const VecFn& f) {
  std::string out = "n=" + std::to_string(f.n) + "\n";
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x != 0) out += ' ';
    out += std::to_string(f.table[x]);
  }
  out += '\n';
  return out;
}

VecFn read_tt_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tt(buf.str());
}

BoolFn parse_bool_tt(std::string_view text) {
  ParsedTable t = parse_table(text, kMaxBoolVars);
  BoolFn f(t.n);
  for (std::size_t x = 0; x < t.values.size(); ++x) {
    if (t.values[x] > 1) {
      throw Error(ErrorKind::Parse, "Boolean table entry " +
                                        std::to_string(t.values[x]) + " is not 0/1");
    }
    f.set(x, static_cast<int>(t.values[x]));
  }
  return f;
}

std::string write_bool_tt(const BoolFn& f) {
  std::string out = "n=" + std::to_string(f.vars()) + "\n";
  out.reserve(out.size() + 2 * f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x != 0) out += ' ';
    out += static_cast<char>('0' + f.get(x));
  }
  out += '\n';
  return out;
}

std::vector<UnivariateTerm> parse_univariate_terms(std::string_view text) {
  std::vector<UnivariateTerm> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "univariate term '" + std::string(item) +
                                        "' is not coeff:exponent");
    }
    const std::uint64_t c = parse_uint(item.substr(0, colon), "coefficient");
    const std::uint64_t e = parse_uint(item.substr(colon + 1), "exponent");
    if (c > 0xFFFFFFFFull) throw Error(ErrorKind::Parse, "coefficient too large");
    terms.push_back({static_cast<Word>(c), e});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return terms;
}

Word parse_poly(std::string_view text) {
  const std::uint64_t v = parse_uint(text, "polynomial");
  if (v > 0xFFFFFFFFull) throw Error(ErrorKind::Parse, "polynomial too large");
  return static_cast<Word>(v);
}

}  // namespace apngamma
