#include "ckit/congruence.hpp"

#include <boost/multiprecision/integer.hpp>

namespace ckit {

Level level(const BigIntMatrix& x) {
  if (x.rows() != x.cols()) throw DimensionMismatch("level: matrix is not square");
  BigInt g = 0;
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      BigInt v = x(r, c);
      if (r == c) v -= 1;
      if (v != 0) g = boost::multiprecision::gcd(g, abs(v));
    }
  }
  return Level{g};
}

bool is_member(const BigIntMatrix& x, const BigInt& d, Variant variant) {
  if (d < 1) throw InvalidModulus("is_member: level must be >= 1");
  if (x.rows() != x.cols()) return false;
  const BigInt det = mat_det(x);
  const bool det_ok = variant == Variant::SL ? det == 1 : (det == 1 || det == -1);
  return det_ok && level(x).divisible_by(d);
}

AbelCoords::AbelCoords(int n, BigInt d) : n_(n), d_(std::move(d)) {
  if (n_ < 2) throw InvalidIndex("abelian coordinates need n >= 2");
  if (d_ < 2) throw InvalidModulus("abelian coordinates need d >= 2");
  values_.assign(static_cast<std::size_t>(n_ * n_ - 1), BigInt(0));
}

std::size_t AbelCoords::slot_offdiag(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) throw InvalidIndex("offdiag index out of range");
  // Row-major over off-diagonal positions: row i contributes n-1 slots.
  const int col = j < i ? j - 1 : j - 2;
  return static_cast<std::size_t>((i - 1) * (n_ - 1) + col);
}

std::size_t AbelCoords::slot_diag(int k) const {
  if (k < 2 || k > n_) throw InvalidIndex("diag index out of range");
  return static_cast<std::size_t>(n_ * (n_ - 1) + (k - 2));
}

const BigInt& AbelCoords::offdiag(int i, int j) const { return values_[slot_offdiag(i, j)]; }
const BigInt& AbelCoords::diag(int k) const { return values_[slot_diag(k)]; }

void AbelCoords::set_offdiag(int i, int j, const BigInt& r) { values_[slot_offdiag(i, j)] = floor_mod(r, d_); }
void AbelCoords::set_diag(int k, const BigInt& r) { values_[slot_diag(k)] = floor_mod(r, d_); }

std::vector<BigInt> AbelCoords::to_vector() const { return values_; }

bool AbelCoords::is_zero() const {
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

AbelCoords abelianize(const BigIntMatrix& x, const BigInt& d) {
  if (d < 2) throw InvalidModulus("abelianize: d must be >= 2");
  if (!is_member(x, d, Variant::SL)) throw NotMember("abelianize: matrix is not in Gamma_d(n)");
  const int n = static_cast<int>(x.rows());
  AbelCoords out(n, d);
  // X = I + dA
  BigIntMatrix a = x - identity(n);
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) /= d;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.set_offdiag(i, j, a(i - 1, j - 1));
  BigInt trace_rest = 0;
  for (int k = 2; k <= n; ++k) {
    out.set_diag(k, a(k - 1, k - 1));
    trace_rest += a(k - 1, k - 1);
  }
  if (floor_mod(a(0, 0) + trace_rest, d) != 0)
    throw InvariantViolation("abelianize: trace of (X - I)/d is not 0 mod d");
  return out;
}

AbelCoords abel_add(const AbelCoords& a, const AbelCoords& b) {
  if (a.n() != b.n() || a.d() != b.d()) throw DimensionMismatch("abel_add: (n, d) mismatch");
  AbelCoords out(a.n(), a.d());
  const int n = a.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.set_offdiag(i, j, a.offdiag(i, j) + b.offdiag(i, j));
  for (int k = 2; k <= n; ++k) out.set_diag(k, a.diag(k) + b.diag(k));
  return out;
}

BigIntMatrix commutator(const BigIntMatrix& x, const BigIntMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw DimensionMismatch("commutator: dimension mismatch");
  return mat_mul(mat_mul(x, y), mat_mul(mat_inv(x), mat_inv(y)));
}

}  // namespace ckit
