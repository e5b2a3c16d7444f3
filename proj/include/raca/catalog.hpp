#pragma once

#include <vector>

#include "raca/errors.hpp"
#include "raca/polyhedron.hpp"

// Face lattices of the polyhedra that appear throughout the library and tests.
namespace raca::catalog {

inline AbstractPolyhedron tetrahedron() {
  return {4, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}};
}

/// n-gonal prism: top ring 0..n-1, bottom ring n..2n-1.
inline AbstractPolyhedron prism(int n) {
  if (n < 3) throw DomainError("prism needs n >= 3");
  std::vector<Face> faces;
  Face top, bottom;
  for (int i = 0; i < n; ++i) {
    top.push_back(i);
    bottom.push_back(2 * n - 1 - i);
    const int j = (i + 1) % n;
    faces.push_back({i, n + i, n + j, j});
  }
  faces.push_back(top);
  faces.push_back(bottom);
  return {2 * n, faces};
}

inline AbstractPolyhedron triangular_prism() { return prism(3); }
inline AbstractPolyhedron cube() { return prism(4); }

/// n-antiprism: top ring t_i = i, bottom ring b_i = n + i. All vertices have degree 4.
inline AbstractPolyhedron antiprism(int n) {
  if (n < 3) throw DomainError("antiprism needs n >= 3");
  std::vector<Face> faces;
  Face top, bottom;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    top.push_back(i);
    bottom.push_back(2 * n - 1 - i);
    faces.push_back({i, n + i, j});
    faces.push_back({j, n + i, n + j});
  }
  faces.push_back(top);
  faces.push_back(bottom);
  return {2 * n, faces};
}

inline AbstractPolyhedron octahedron() { return antiprism(3); }

/// Löbell polyhedron L_n: two n-gons and two belts of n pentagons, 4n vertices.
/// Rings: a_i (top), then b_i, c_i alternating in the equatorial zigzag, e_i (bottom).
inline AbstractPolyhedron lobell(int n) {
  if (n < 3) throw DomainError("lobell needs n >= 3");
  auto a = [n](int i) { return i % n; };
  auto b = [n](int i) { return n + i % n; };
  auto c = [n](int i) { return 2 * n + i % n; };
  auto e = [n](int i) { return 3 * n + i % n; };
  std::vector<Face> faces;
  Face top, bottom;
  for (int i = 0; i < n; ++i) {
    top.push_back(a(i));
    bottom.push_back(e(n - 1 - i));
    faces.push_back({a(i), b(i), c(i), b(i + 1), a(i + 1)});
    faces.push_back({c(i), e(i), e(i + 1), c(i + 1), b(i + 1)});
  }
  faces.push_back(top);
  faces.push_back(bottom);
  return {4 * n, faces};
}

inline AbstractPolyhedron dodecahedron() { return lobell(5); }

/// Triangular bipyramid P_(3,2): equator 0,1,2 (degree 4), apexes 3 and 4.
inline AbstractPolyhedron bipyramid_p32() {
  return {5, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {1, 0, 4}, {2, 1, 4}, {0, 2, 4}}};
}

/// P_(2,8), the tetragonal trapezohedron: apexes 0 and 1 (degree 4), zigzag
/// ring u_0 l_0 u_1 l_1 ... with u_i = 2 + i and l_i = 6 + i.
inline AbstractPolyhedron trapezohedron_p28() {
  auto u = [](int i) { return 2 + (i % 4); };
  auto l = [](int i) { return 6 + (i % 4); };
  std::vector<Face> faces;
  for (int i = 0; i < 4; ++i) {
    faces.push_back({0, u(i), l(i), u(i + 1)});
    faces.push_back({1, l(i + 1), u(i + 1), l(i)});
  }
  return {10, faces};
}

/// P_(3,4): ideal triangle 0,1,2; finite vertices a=3, b=4, c=5 over its edges
/// and the far vertex d=6 shared by the three quadrilaterals.
inline AbstractPolyhedron polyhedron_p34() {
  constexpr int a = 3, b = 4, c = 5, d = 6;
  return {7,
          {{0, 1, 2},
           {1, 0, a},
           {2, 1, b},
           {0, 2, c},
           {0, a, d, c},
           {1, b, d, a},
           {2, c, d, b}}};
}

}  // namespace raca::catalog
