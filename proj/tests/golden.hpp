#pragma once

// Known values of unc(n,q) for 2 <= n <= 7, as (exponent, coefficient).

#include <map>
#include <utility>
#include <vector>

#include "fcyc/qpoly.hpp"

namespace golden {

inline fcyc::QPoly from_terms(std::initializer_list<std::pair<unsigned, long>> terms) {
  fcyc::QPoly p;
  for (auto [e, c] : terms) p = p + fcyc::QPoly::monomial(c, e);
  return p;
}

inline std::map<unsigned, fcyc::QPoly> unc_table() {
  return {
      {2, from_terms({{1, 1}})},
      {3, from_terms({{5, 1}, {4, 1}, {2, -1}})},
      {4, from_terms({{11, 1}, {10, 2}, {7, -2}, {5, -1}, {4, 1}})},
      {5, from_terms({{19, 1}, {18, 2}, {17, 2}, {16, 1}, {15, -1}, {14, -2}, {13, -3}, {12, -1},
                      {10, 1}, {9, 1}, {8, 1}, {7, -1}})},
      {6, from_terms({{29, 1}, {28, 3}, {27, 3}, {26, 3}, {25, -1}, {23, -5}, {22, -5}, {21, -3},
                      {20, -2}, {18, 2}, {17, 4}, {15, 3}, {14, -1}, {12, -2}, {11, 1}})},
      {7, from_terms({{41, 1}, {40, 3}, {39, 5}, {38, 5}, {37, 3}, {35, -4}, {34, -9}, {33, -11},
                      {32, -12}, {31, -7}, {30, -3}, {29, 4}, {28, 6}, {27, 11}, {26, 8}, {25, 7},
                      {23, 1}, {22, -3}, {21, -2}, {20, -3}, {17, 2}, {16, -1}})},
  };
}

}  // namespace golden
