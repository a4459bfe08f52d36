#include "mgk/modmat.hpp"

#include "mgk/error.hpp"

namespace mgk {

ModMat ModMat::identity(int n, int p) {
  ModMat m;
  m.n = n;
  m.p = p;
  m.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ModMat mat_mul(const ModMat& x, const ModMat& y) {
  ModMat r;
  r.n = x.n;
  r.p = x.p;
  r.a.assign(static_cast<std::size_t>(x.n) * x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const std::int64_t xik = x.at(i, k);
      if (!xik) continue;
      for (int j = 0; j < x.n; ++j) {
        std::int64_t v = r.at(i, j) + xik * y.at(k, j);
        r.at(i, j) = static_cast<std::int32_t>(v % x.p);
      }
    }
  return r;
}

namespace {
int mod_inv(int a, int p) {
  // p prime, a != 0 mod p
  int r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<int>(static_cast<std::int64_t>(r) * b % p);
    b = static_cast<int>(static_cast<std::int64_t>(b) * b % p);
    e >>= 1;
  }
  return r;
}
}  // namespace

ModMat mat_inverse(const ModMat& x) {
  const int n = x.n, p = x.p;
  ModMat a = x;
  ModMat inv = ModMat::identity(n, p);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw Precondition("singular matrix has no inverse");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const int s = mod_inv(a.at(col, col), p);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = static_cast<std::int32_t>(static_cast<std::int64_t>(a.at(col, j)) * s % p);
      inv.at(col, j) = static_cast<std::int32_t>(static_cast<std::int64_t>(inv.at(col, j)) * s % p);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const std::int64_t f = a.at(r, col);
      if (!f) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = static_cast<std::int32_t>(((a.at(r, j) - f * a.at(col, j)) % p + p) % p);
        inv.at(r, j) = static_cast<std::int32_t>(((inv.at(r, j) - f * inv.at(col, j)) % p + p) % p);
      }
    }
  }
  return inv;
}

int mat_det(const ModMat& x) {
  const int n = x.n, p = x.p;
  ModMat a = x;
  std::int64_t det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = (p - det % p) % p;
    }
    det = det * a.at(col, col) % p;
    const int s = mod_inv(a.at(col, col), p);
    for (int r = col + 1; r < n; ++r) {
      const std::int64_t f = static_cast<std::int64_t>(a.at(r, col)) * s % p;
      if (!f) continue;
      for (int j = col; j < n; ++j)
        a.at(r, j) = static_cast<std::int32_t>(((a.at(r, j) - f * a.at(col, j)) % p + p) % p);
    }
  }
  return static_cast<int>(det % p);
}

ModMat mat_from_value(const Value& v, int n, int p) {
  ModMat m;
  m.n = n;
  m.p = p;
  m.a = v.as_vec();
  return m;
}

ModMat elementary(int n, int p, int i, int j, int c) {
  ModMat m = ModMat::identity(n, p);
  m.at(i, j) = static_cast<std::int32_t>(((c % p) + p) % p);
  return m;
}

}  // namespace mgk
