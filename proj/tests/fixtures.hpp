// Hand-written structure constants used as independent test fixtures.
#pragma once

#include "mla/liealg.hpp"

namespace fx {

using mla::LieAlgebra;
using mla::Q;
using mla::Vec;

inline Vec e(std::size_t n, std::size_t i, Q c = 1) {
  Vec v(n);
  v[i] = c;
  return v;
}

// h(1) = {[X,Y]=Z}
inline LieAlgebra h1() {
  LieAlgebra l(3, {"X", "Y", "Z"});
  l.set_bracket(0, 1, e(3, 2));
  return l;
}

// sl(2,R) = {[H,X]=2Y, [H,Y]=2X, [X,Y]=2H}
inline LieAlgebra sl2() {
  LieAlgebra l(3, {"H", "X", "Y"});
  l.set_bracket(0, 1, e(3, 2, 2));
  l.set_bracket(0, 2, e(3, 1, 2));
  l.set_bracket(1, 2, e(3, 0, 2));
  return l;
}

// su(2) = {[H,X]=2Y, [H,Y]=-2X, [X,Y]=2H}
inline LieAlgebra su2() {
  LieAlgebra l(3, {"H", "X", "Y"});
  l.set_bracket(0, 1, e(3, 2, 2));
  l.set_bracket(0, 2, e(3, 1, -2));
  l.set_bracket(1, 2, e(3, 0, 2));
  return l;
}

// n(2) = {[X,Y]=Z, [X,Z]=-Y}
inline LieAlgebra n2() {
  LieAlgebra l(3, {"X", "Y", "Z"});
  l.set_bracket(0, 1, e(3, 2));
  l.set_bracket(0, 2, e(3, 1, -1));
  return l;
}

// g_{4,1} = {[X1,X2]=X3, [X1,X3]=X4}
inline LieAlgebra g41() {
  LieAlgebra l(4, {"X1", "X2", "X3", "X4"});
  l.set_bracket(0, 1, e(4, 2));
  l.set_bracket(0, 2, e(4, 3));
  return l;
}

// h(1)* x| h(1) on basis s1,s2,s3,X1,X2,X3 with [X1,s3]=-s2, [X2,s3]=s1.
inline LieAlgebra h1_double() {
  LieAlgebra l(6, {"s1", "s2", "s3", "X1", "X2", "X3"});
  l.set_bracket(3, 4, e(6, 5));
  l.set_bracket(3, 2, e(6, 1, -1));
  l.set_bracket(4, 2, e(6, 0));
  return l;
}

inline mla::Matrix h1_double_form() {
  mla::Matrix g(6, 6);
  for (std::size_t i = 0; i < 3; ++i) g(i, 3 + i) = g(3 + i, i) = 1;
  return g;
}

}  // namespace fx

namespace fx {

// Oscillator on basis Z, X1, Y1, ..., T with [T,Xi]=li Yi, [T,Yi]=-li Xi, [Xi,Yi]=li Z.
inline LieAlgebra osc_alg(const std::vector<Q>& lam) {
  std::size_t m = lam.size(), n = 2 * m + 2;
  std::vector<std::string> names{"Z"};
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back("X" + std::to_string(i + 1));
    names.push_back("Y" + std::to_string(i + 1));
  }
  names.push_back("T");
  LieAlgebra l(n, names);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t x = 1 + 2 * i, y = x + 1;
    l.set_bracket(n - 1, x, e(n, y, lam[i]));
    l.set_bracket(n - 1, y, e(n, x, -lam[i]));
    l.set_bracket(x, y, e(n, 0, lam[i]));
  }
  return l;
}

inline mla::Matrix osc_form(std::size_t m) {
  std::size_t n = 2 * m + 2;
  mla::Matrix g(n, n);
  g(0, n - 1) = g(n - 1, 0) = 1;
  for (std::size_t i = 1; i + 1 < n; ++i) g(i, i) = 1;
  return g;
}

}  // namespace fx
