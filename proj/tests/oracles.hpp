#pragma once

// Test-side reference implementations. Deliberately naive and independent of
// the library's evaluation paths: nested std::vector matrices, triple-loop
// products, Laplace determinants, and brute-force filter enumeration.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "ckit/exactmat.hpp"
#include "ckit/words.hpp"

namespace oracle {

using ckit::BigInt;
using Mat = std::vector<std::vector<BigInt>>;

inline Mat ident(int n) {
  Mat a(n, std::vector<BigInt>(n, BigInt(0)));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat power(Mat base, BigInt k, const Mat& inverse) {
  Mat out = ident(static_cast<int>(base.size()));
  if (k < 0) {
    base = inverse;
    k = -k;
  }
  while (k > 0) {
    if (k % 2 == 1) out = mul(out, base);
    base = mul(base, base);
    k /= 2;
  }
  return out;
}

inline Mat elem(int n, int i, int j, const BigInt& s) {
  Mat a = ident(n);
  a[i - 1][j - 1] = s;
  return a;
}

inline Mat flip(int n, int k) {
  Mat a = ident(n);
  a[k - 1][k - 1] = -1;
  return a;
}

inline Mat atom(int n, const ckit::Atom& a) {
  if (const auto* e = std::get_if<ckit::Elem>(&a)) return elem(n, e->i, e->j, e->exp);
  return flip(n, std::get<ckit::Flip>(a).k);
}

inline Mat inverse_atom(int n, const ckit::Atom& a) {
  if (const auto* e = std::get_if<ckit::Elem>(&a)) return elem(n, e->i, e->j, -e->exp);
  return flip(n, std::get<ckit::Flip>(a).k);
}

inline Mat eval(const ckit::Word& w) {
  Mat out = ident(w.n());
  for (const auto& a : w.atoms()) out = mul(out, atom(w.n(), a));
  return out;
}

inline Mat eval_inverse(const ckit::Word& w) {
  Mat out = ident(w.n());
  for (auto it = w.atoms().rbegin(); it != w.atoms().rend(); ++it) out = mul(out, inverse_atom(w.n(), *it));
  return out;
}

inline Mat eval(const ckit::GenWord& g) {
  Mat out = ident(g.n());
  for (const auto& s : g.syllables()) out = mul(out, power(eval(s.body), s.power, eval_inverse(s.body)));
  return out;
}

inline Mat from(const ckit::BigIntMatrix& a) {
  Mat m(a.rows(), std::vector<BigInt>(a.cols()));
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  return m;
}

inline bool equal(const Mat& a, const ckit::BigIntMatrix& b) { return a == from(b); }

inline bool is_ident(const Mat& a) { return a == ident(static_cast<int>(a.size())); }

/// Laplace expansion along the first row.
inline BigInt det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    const BigInt term = a[0][c] * det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// gcd of the entries of X - I.
inline BigInt level(const Mat& x) {
  BigInt g = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) g = gcd(g, x[i][j] - (i == j ? 1 : 0));
  return g;
}

// Small residue matrices ----------------------------------------------------

using RMat = std::vector<std::int64_t>;  // row-major

inline RMat rmul(const RMat& a, const RMat& b, int n, std::int64_t m) {
  RMat c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
      c[i * n + j] = s % m;
    }
  return c;
}

inline std::int64_t rdet(const RMat& a, int n, std::int64_t m) {
  Mat big(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) big[i][j] = a[i * n + j];
  BigInt d = det(big) % m;
  if (d < 0) d += m;
  return d.convert_to<std::int64_t>();
}

inline std::int64_t rorder(const RMat& a, int n, std::int64_t m) {
  RMat id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1 % m;
  RMat p = a;
  std::int64_t k = 1;
  while (p != id) {
    p = rmul(p, a, n, m);
    ++k;
  }
  return k;
}

/// Every matrix over Z/m with det = 1 and X = I mod l, by brute force.
inline std::vector<RMat> filter_enumerate(int n, std::int64_t l, std::int64_t m) {
  std::vector<RMat> out;
  RMat x(n * n, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n * n) {
      if (rdet(x, n, m) == 1 % m) out.push_back(x);
      return;
    }
    const std::int64_t base = (pos / n == pos % n) ? 1 % l : 0;
    for (std::int64_t v = base; v < m; v += l) {
      x[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

inline std::map<std::int64_t, std::size_t> census(const std::vector<RMat>& g, int n, std::int64_t m) {
  std::map<std::int64_t, std::size_t> c;
  for (const auto& x : g) ++c[rorder(x, n, m)];
  return c;
}

}  // namespace oracle
