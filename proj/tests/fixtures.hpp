#pragma once

// Shared fixture data: the printed bracket tables and Hamiltonians for the
// three worked examples (SL2 chains, SL3 doubled w0, G2 doubled s2 s1 s2).

#include <map>
#include <string>
#include <vector>

#include "bruhat/cells.hpp"

namespace bruhat::fixtures {

// A1 chains use the form with <alpha, alpha> = 1.
inline Rat a1_scale() { return Rat(1, 2); }

inline CellSpec a1_chain(int n) {
  return CellSpec::make("A1", WeylWord(std::vector<int>(n, 1)), a1_scale());
}

inline Poly a1_bracket_entry(int i, int j) {  // 0-based, i < j
  Poly xi = Poly::var(i), xj = Poly::var(j);
  if (j == i + 1) return xi * xj - Poly(Rat(1));
  return xi * xj * Rat((j - i + 1) % 2 ? -1 : 1);
}

inline std::map<std::pair<int, int>, std::string> a2_table_strings() {
  return {
      {{1, 2}, "-x1*x2"},         {{1, 3}, "x1*x3 - 2*x2"},
      {{1, 4}, "-x1*x4"},         {{1, 5}, "x1*x5 - 2*x4"},
      {{1, 6}, "2*x1*x6 - 2"},    {{2, 3}, "-x2*x3"},
      {{2, 4}, "x2*x4"},          {{2, 5}, "2*x2*x5 - 2*x3*x4 + 2"},
      {{2, 6}, "x2*x6 - 2*x3"},   {{3, 4}, "2*x3*x4 - 2"},
      {{3, 5}, "x3*x5"},          {{3, 6}, "-x3*x6"},
      {{4, 5}, "-x4*x5"},         {{4, 6}, "x4*x6 - 2*x5"},
      {{5, 6}, "-x5*x6"},
  };
}

inline std::map<std::pair<int, int>, std::string> g2_table_strings() {
  return {
      {{1, 2}, "-3*x1*x2"},
      {{1, 3}, "-6*x2^3 - 3*x1*x3"},
      {{1, 4}, "3*x1*x4"},
      {{1, 5}, "-6*x2^2*x4 + 3*x1*x5"},
      {{1, 6}, "-18*x2^2*x5^2 + 6*x1*x6 - 18*x2*x5 + 6*x3*x4 - 6"},
      {{2, 3}, "-3*x2*x3"},
      {{2, 4}, "3*x2*x4"},
      {{2, 5}, "2*x2*x5 - 2*x3*x4 + 2"},
      {{2, 6}, "-6*x3*x5^2 + 3*x2*x6"},
      {{3, 4}, "6*x3*x4 - 6"},
      {{3, 5}, "3*x3*x5"},
      {{3, 6}, "3*x3*x6"},
      {{4, 5}, "-3*x4*x5"},
      {{4, 6}, "-6*x5^3 - 3*x4*x6"},
      {{5, 6}, "-3*x5*x6"},
  };
}

inline std::string g2_y3_string() {
  return "x1*x3*x4*x6 - x2^3*x4*x6 - x1*x6 - x1*x3*x5^3 + x2^3*x5^3 + 3*x2^2*x5^2 "
         "- 3*x2*x3*x4*x5 + 3*x2*x5 + x3^2*x4^2 - 2*x3*x4 + 1";
}

// Euler continuants E_k(x_{start+1}, ...) via E_j = x_j E_{j-1} - E_{j-2}.
inline Poly euler_continuant(int k, int start /*0-based index of the first var*/) {
  Poly em2(Rat(1));  // E_0
  if (k == 0) return em2;
  Poly em1 = Poly::var(start);  // E_1
  for (int j = 2; j <= k; ++j) {
    Poly e = Poly::var(start + j - 1) * em1 - em2;
    em2 = em1;
    em1 = e;
  }
  return em1;
}

}  // namespace bruhat::fixtures
