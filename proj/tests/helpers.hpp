#pragma once

#include <vector>

#include "apngamma/boolfn.hpp"
#include "apngamma/catalog.hpp"
#include "apngamma/vecfn.hpp"

namespace testing {

inline apngamma::BoolFn to_boolfn(int n, const std::vector<int>& table) {
  apngamma::BoolFn f(n);
  for (std::size_t x = 0; x < table.size(); ++x) f.set(x, table[x]);
  return f;
}

inline std::vector<int> to_table(const apngamma::BoolFn& f) {
  std::vector<int> t(f.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = f.get(x);
  return t;
}

inline apngamma::VecFn gold(int n, int k) {
  return apngamma::build_function(apngamma::gold_record(n, k));
}

}  // namespace testing
