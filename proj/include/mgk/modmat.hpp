#pragma once

#include <cstdint>
#include <vector>

#include "mgk/value.hpp"

namespace mgk {

/// Row-major n x n matrices over F_p, entries in [0, p).
struct ModMat {
  int n = 0;
  int p = 0;
  std::vector<std::int32_t> a;  // n*n entries

  static ModMat identity(int n, int p);
  std::int32_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int32_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

ModMat mat_mul(const ModMat& x, const ModMat& y);
ModMat mat_inverse(const ModMat& x);  // throws Precondition if singular
int mat_det(const ModMat& x);

inline Value mat_value(const ModMat& m) { return Value(m.a); }
ModMat mat_from_value(const Value& v, int n, int p);

/// e_{i,j}^c : identity plus c at (i, j)
ModMat elementary(int n, int p, int i, int j, int c);

}  // namespace mgk
