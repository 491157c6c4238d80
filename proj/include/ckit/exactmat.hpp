#pragma once

// Exact integer and residue matrices.
//
// Matrices are plain Eigen dense types templated on the scalar. Integer
// matrices use an arbitrary-precision scalar; word evaluations grow entries
// exponentially in the word length, so no fixed-width type is used for them.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>

#include "ckit/errors.hpp"

namespace ckit {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using BigIntMatrix = Matrix<BigInt>;

/// Nonnegative remainder of a modulo m (m > 0).
inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

template <typename Scalar = BigInt>
Matrix<Scalar> identity(int n) {
  return Matrix<Scalar>::Identity(n, n);
}

/// e_ij^s: identity with entry (i,j) set to s. Indices are 1-based.
template <typename Scalar = BigInt>
Matrix<Scalar> elementary(int n, int i, int j, const Scalar& s) {
  if (n < 1 || i < 1 || j < 1 || i > n || j > n || i == j)
    throw InvalidIndex("elementary: need 1 <= i != j <= n, got n=" + std::to_string(n) +
                       " i=" + std::to_string(i) + " j=" + std::to_string(j));
  Matrix<Scalar> e = identity<Scalar>(n);
  e(i - 1, j - 1) = s;
  return e;
}

/// F_k: diagonal with (k,k) = -1 and the other diagonal entries 1.
template <typename Scalar = BigInt>
Matrix<Scalar> sign_flip(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw InvalidIndex("sign_flip: need 1 <= k <= n, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
  Matrix<Scalar> f = identity<Scalar>(n);
  f(k - 1, k - 1) = Scalar(-1);
  return f;
}

/// Exact product. Uses the coefficient-based kernel; the blocked GEMM path
/// buys nothing for heap-allocated scalars at these sizes.
template <typename Scalar>
Matrix<Scalar> mat_mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw DimensionMismatch("mat_mul: dimension mismatch");
  return a.lazyProduct(b);
}

/// Determinant by Bareiss fraction-free elimination. Every division is exact.
template <typename Scalar>
Scalar mat_det(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("mat_det: matrix is not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Adjugate via cofactors; entry (i,j) is (-1)^(i+j) * minor(j,i).
template <typename Scalar>
Matrix<Scalar> adjugate(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  Matrix<Scalar> adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  Matrix<Scalar> minor(n - 1, n - 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (Eigen::Index j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = a(i, j);
        }
        ++mi;
      }
      Scalar cof = mat_det(minor);
      adj(c, r) = ((r + c) % 2 == 0) ? cof : Scalar(-cof);
    }
  }
  return adj;
}

/// Exact inverse of a unimodular matrix (det = +-1).
template <typename Scalar>
Matrix<Scalar> mat_inv(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("mat_inv: matrix is not square");
  const Scalar det = mat_det(a);
  if (det != 1 && det != -1) throw NotUnimodular("mat_inv: determinant is not +-1");
  Matrix<Scalar> adj = adjugate(a);
  if (det == -1) adj = -adj;
  return adj;
}

template <typename Scalar>
bool is_identity(const Matrix<Scalar>& a) {
  return a.rows() == a.cols() && a == identity<Scalar>(static_cast<int>(a.rows()));
}

/// Matrix over Z/mZ with every entry in [0, m).
class ResidueMatrix {
 public:
  using Storage = Matrix<std::int64_t>;

  ResidueMatrix(Storage entries, std::int64_t modulus);

  static ResidueMatrix identity(int n, std::int64_t modulus);

  int n() const { return static_cast<int>(entries_.rows()); }
  std::int64_t modulus() const { return modulus_; }
  const Storage& entries() const { return entries_; }
  std::int64_t operator()(int row, int col) const { return entries_(row, col); }

  /// Row-major entry list with a fixed per-entry byte width determined by m.
  /// Injective for fixed (n, m); used as a set key.
  std::string key() const;
  static ResidueMatrix from_key(const std::string& key, int n, std::int64_t modulus);
  static int entry_width(std::int64_t modulus);

  friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
    return a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
  }

 private:
  Storage entries_;
  std::int64_t modulus_;
};

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);

/// Determinant reduced into [0, m).
std::int64_t residue_det(const ResidueMatrix& a);

/// Entrywise reduction A mod m.
ResidueMatrix mat_mod(const BigIntMatrix& a, std::int64_t modulus);

/// Parses a decimal integer with an optional sign prefix.
BigInt parse_bigint(const std::string& text);

}  // namespace ckit
