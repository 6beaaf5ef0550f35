#pragma once

#include <cstdint>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/oracle.hpp"
#include "houghton/word.hpp"

namespace houghton::test {

inline HoughtonElement word(int n, const char *text) { return evaluate(Word::parse(n, text)); }

inline HoughtonElement g(int n, int i) { return HoughtonElement::generator(n, i); }

/// Every point with offset <= window; used to compare maps pointwise.
inline std::vector<Point> window_points(int n, Offset window) {
  std::vector<Point> out;
  for (int i = 1; i <= n; ++i)
    for (Offset m = 0; m <= window; ++m)
      out.push_back({i, m});
  return out;
}

inline Offset reach(const HoughtonElement &x) {
  Offset r = x.table_bound();
  for (Offset t : x.translation())
    r += t < 0 ? -t : t;
  return r + 2;
}

/// Random element drawn from a mix of profiles, deterministic in seed.
inline HoughtonElement random_mixed(int n, std::uint64_t seed, std::size_t max_len = 8) {
  switch (seed % 3) {
  case 0:
    return oracle::random_element(n, seed, "fsym");
  case 1:
    return oracle::random_element(n, seed, "mixed");
  default:
    return evaluate(oracle::random_word(n, seed, 1 + seed % max_len));
  }
}

} // namespace houghton::test
