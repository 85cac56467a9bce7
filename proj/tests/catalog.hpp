#pragma once

// Shared test fixtures: small Coxeter systems used across the suites.

#include <memory>
#include <string>
#include <vector>

#include "cox/system.hpp"

namespace coxtest {

inline cox::CoxeterMatrix mat(int n, std::vector<int> upper) {
  // upper-triangular bond list, row by row; 0 = infinity
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 2));
  size_t k = 0;
  for (int i = 0; i < n; ++i) {
    e[i][i] = 1;
    for (int j = i + 1; j < n; ++j) {
      e[i][j] = e[j][i] = upper[k++];
    }
  }
  return cox::CoxeterMatrix(n, e);
}

inline cox::CoxeterMatrix a1() { return mat(1, {}); }
inline cox::CoxeterMatrix a2() { return mat(2, {3}); }
inline cox::CoxeterMatrix b2() { return mat(2, {4}); }
inline cox::CoxeterMatrix h2() { return mat(2, {5}); }
inline cox::CoxeterMatrix a1a1() { return mat(2, {2}); }
inline cox::CoxeterMatrix idih() { return mat(2, {0}); }  // infinite dihedral
inline cox::CoxeterMatrix a3() { return mat(3, {3, 2, 3}); }
inline cox::CoxeterMatrix b3() { return mat(3, {4, 2, 3}); }
inline cox::CoxeterMatrix h3() { return mat(3, {5, 2, 3}); }
inline cox::CoxeterMatrix a2t() { return mat(3, {3, 3, 3}); }        // affine triangle
inline cox::CoxeterMatrix c2t() { return mat(3, {4, 2, 4}); }        // affine B2/C2
inline cox::CoxeterMatrix tri23i() { return mat(3, {2, 3, 0}); }     // (2,3,inf)
inline cox::CoxeterMatrix tri33i() { return mat(3, {3, 3, 0}); }
inline cox::CoxeterMatrix free3() { return mat(3, {0, 0, 0}); }      // A1*A1*A1
inline cox::CoxeterMatrix d8perp() { return mat(4, {0, 2, 2, 2, 2, 0}); }  // Dinf x Dinf
inline cox::CoxeterMatrix a1xidih() { return mat(3, {2, 2, 0}); }    // A1 x Dinf
inline cox::CoxeterMatrix c3t() { return mat(4, {4, 2, 2, 3, 2, 4}); }  // affine C3

// right-angled pentagon: cycle 1-2-3-4-5, adjacent pairs commute
inline cox::CoxeterMatrix pentagon() {
  std::vector<std::vector<int>> e(5, std::vector<int>(5, 0));
  for (int i = 0; i < 5; ++i) {
    e[i][i] = 1;
    e[i][(i + 1) % 5] = e[(i + 1) % 5][i] = 2;
  }
  return cox::CoxeterMatrix(5, e);
}

// right-angled dodecahedron reflection group: generators are the 12 faces,
// adjacent faces commute (icosahedral adjacency on the dual), the rest are
// free.  Vertices: 0 = top, 1..5 = upper ring, 6..10 = lower ring, 11 = bottom.
inline cox::CoxeterMatrix dodecahedron() {
  auto adj = [](int a, int b) -> bool {
    auto norm = [](int x) { return (x % 5 + 5) % 5; };
    if (a > b) std::swap(a, b);
    if (a == 0) return b >= 1 && b <= 5;
    if (b == 11) return a >= 6 && a <= 10;
    if (a <= 5 && b <= 5) {  // upper ring cycle
      int d = norm(b - a);
      return d == 1 || d == 4;
    }
    if (a >= 6 && b >= 6) {  // lower ring cycle
      int d = norm(b - a);
      return d == 1 || d == 4;
    }
    // upper u_i (1..5) meets lower l_j (6..10): j = i and j = i-1 (cyclic)
    int i = a - 1, j = b - 6;
    return j == i || j == norm(i - 1);
  };
  std::vector<std::vector<int>> e(12, std::vector<int>(12, 0));
  for (int i = 0; i < 12; ++i) {
    e[i][i] = 1;
    for (int j = 0; j < 12; ++j)
      if (i != j && adj(i, j)) e[i][j] = 2;
  }
  return cox::CoxeterMatrix(12, e);
}

// the fixed catalog: rank <= 4, bonds in {2,3,4,5,inf}
inline const std::vector<std::pair<std::string, cox::CoxeterMatrix>>& catalog() {
  static const std::vector<std::pair<std::string, cox::CoxeterMatrix>> c = {
      {"A2", a2()},          {"B2", b2()},        {"H2", h2()},
      {"A1xA1", a1a1()},     {"Dinf", idih()},    {"A3", a3()},
      {"B3", b3()},          {"H3", h3()},        {"A2~", a2t()},
      {"C2~", c2t()},        {"(2,3,inf)", tri23i()}, {"(3,3,inf)", tri33i()},
      {"A1*A1*A1", free3()}, {"A1xDinf", a1xidih()},  {"DinfxDinf", d8perp()},
      {"C3~", c3t()},
  };
  return c;
}

inline const cox::CoxSystem& sys_of(const cox::CoxeterMatrix& m) {
  static std::vector<std::unique_ptr<cox::CoxSystem>> cache;
  for (const auto& s : cache)
    if (s->matrix().str() == m.str()) return *s;
  cache.push_back(std::make_unique<cox::CoxSystem>(m));
  return *cache.back();
}

}  // namespace coxtest
