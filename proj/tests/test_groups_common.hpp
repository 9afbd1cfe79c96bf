#ifndef BLOCKDESC_TEST_GROUPS_COMMON_HPP
#define BLOCKDESC_TEST_GROUPS_COMMON_HPP

#include "blockdesc/group.hpp"

namespace bdtest {

using blockdesc::Group;
using blockdesc::GroupPtr;

inline GroupPtr c2() { return Group::from_perm_gens({{2, 1}}); }
inline GroupPtr c3() { return Group::from_perm_gens({{2, 3, 1}}); }
inline GroupPtr c6() { return Group::from_perm_gens({{2, 3, 4, 5, 6, 1}}); }
inline GroupPtr s3() { return Group::from_perm_gens({{2, 3, 1}, {2, 1, 3}}); }
inline GroupPtr a4() { return Group::from_perm_gens({{2, 3, 1, 4}, {2, 1, 4, 3}}); }

inline GroupPtr frob21() {
  // C_7 : C_3, the 3-element acting as x -> x^2
  return Group::from_perm_gens({{2, 3, 4, 5, 6, 7, 1}, {1, 3, 5, 7, 2, 4, 6}});
}

inline GroupPtr sl23() {
  // SL(2,3) acting on the 8 nonzero vectors of GF(3)^2
  auto enc = [](int x, int y) { return std::uint32_t(x * 3 + y); };
  std::vector<std::uint32_t> a(8), b(8);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == 0 && y == 0) continue;
      int i = int(enc(x, y));
      a[i - 1] = enc((x + y) % 3, y);        // [[1,1],[0,1]]
      b[i - 1] = enc((2 * y) % 3, x);        // [[0,-1],[1,0]]
    }
  return Group::from_perm_gens({a, b});
}

inline GroupPtr q8() {
  // quaternion group inside SL(2,3): i = [[0,2],[1,0]], j = [[1,1],[1,2]]
  auto enc = [](int x, int y) { return std::uint32_t(x * 3 + y); };
  std::vector<std::uint32_t> i(8), j(8);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == 0 && y == 0) continue;
      int v = int(enc(x, y));
      i[v - 1] = enc((2 * y) % 3, x);
      j[v - 1] = enc((x + y) % 3, (x + 2 * y) % 3);
    }
  return Group::from_perm_gens({i, j});
}

inline GroupPtr dic3() {
  // C_3 : C_4 (dicyclic of order 12): y^3 = 1, x^4 = 1, x y x^{-1} = y^{-1}.
  // Elements (i, j), i mod 3, j mod 4, product
  // (i1,j1)(i2,j2) = (i1 + (-1)^(j1) i2, j1 + j2); generators act by left
  // multiplication on the 12 points.
  auto enc = [](int i, int j) { return std::uint32_t(i * 4 + j + 1); };
  auto mulp = [](int i1, int j1, int i2, int j2) {
    int tw = (j1 % 2 == 0) ? i2 : (3 - i2) % 3;
    return std::pair<int, int>{(i1 + tw) % 3, (j1 + j2) % 4};
  };
  std::vector<std::uint32_t> y(12), x(12);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) {
      auto [yi, yj] = mulp(1, 0, i, j);
      auto [xi, xj] = mulp(0, 1, i, j);
      y[enc(i, j) - 1] = enc(yi, yj);
      x[enc(i, j) - 1] = enc(xi, xj);
    }
  return Group::from_perm_gens({y, x});
}

}  // namespace bdtest

#endif
