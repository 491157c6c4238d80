#pragma once

// Levels, congruence-subgroup membership, and abelianization coordinates.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckit/exactmat.hpp"

namespace ckit {

/// gcd of the entries of X - I. The value 0 stands for X = I and is divisible
/// by every d.
struct Level {
  BigInt value;

  bool divisible_by(const BigInt& d) const { return value == 0 || value % d == 0; }
  bool is_identity() const { return value == 0; }
};

Level level(const BigIntMatrix& x);

enum class Variant { SL, GL };

/// SL: det X = 1 and X = I mod d. GL: det X = +-1 and X = I mod d. d = 1 is allowed.
bool is_member(const BigIntMatrix& x, const BigInt& d, Variant variant = Variant::SL);

/// Coordinates of X = I + dA in (Z/dZ)^{n^2-1}: A(i,j) mod d off the diagonal
/// and A(k,k) mod d for k = 2..n. For n = 2 the map is a homomorphism onto
/// (Z/dZ)^3 but not the abelianization; `abelianization_valid` is false then.
class AbelCoords {
 public:
  AbelCoords(int n, BigInt d);

  int n() const { return n_; }
  const BigInt& d() const { return d_; }
  bool abelianization_valid() const { return n_ >= 3; }

  const BigInt& offdiag(int i, int j) const;
  const BigInt& diag(int k) const;
  void set_offdiag(int i, int j, const BigInt& r);
  void set_diag(int k, const BigInt& r);

  /// Off-diagonal (i,j) in row-major order, then diagonal k = 2..n.
  std::vector<BigInt> to_vector() const;
  bool is_zero() const;

  friend bool operator==(const AbelCoords& a, const AbelCoords& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.values_ == b.values_;
  }

 private:
  std::size_t slot_offdiag(int i, int j) const;
  std::size_t slot_diag(int k) const;

  int n_;
  BigInt d_;
  std::vector<BigInt> values_;
};

/// Requires X in Gamma_d(n) and d >= 2. Throws NotMember otherwise and
/// InvariantViolation if the trace condition on A fails.
AbelCoords abelianize(const BigIntMatrix& x, const BigInt& d);

AbelCoords abel_add(const AbelCoords& a, const AbelCoords& b);

/// X Y X^-1 Y^-1
BigIntMatrix commutator(const BigIntMatrix& x, const BigIntMatrix& y);

}  // namespace ckit
