#pragma once

// Constructive word identities inside Gamma_d(n), n >= 3.
//
// Every builder returns a ConjWord: a product of factors
//   (e_uv^p e_vu^d e_uv^-p)^power = e_uv^p e_vu^(d*power) e_uv^-p,
// which covers the X2 members (p in {0,1}), pure powers e_vu^(d*power) (p = 0),
// and the bounded conjugates that appear before they are expanded.

#include <string>
#include <vector>

#include "ckit/words.hpp"

namespace ckit {

struct ConjAtomSpec {
  int u = 0;
  int v = 0;
  long p = 0;
  BigInt power = 1;
};

class ConjWord {
 public:
  ConjWord(int n, BigInt d) : n_(n), d_(std::move(d)) {}

  int n() const { return n_; }
  const BigInt& d() const { return d_; }
  const std::vector<ConjAtomSpec>& factors() const { return factors_; }

  /// Zero powers are dropped.
  ConjWord& push(int u, int v, long p, const BigInt& power);
  ConjWord& append(const ConjWord& other);

 private:
  int n_;
  BigInt d_;
  std::vector<ConjAtomSpec> factors_;
};

/// Labels follow conj_label, so p in {0,1} factors carry X2 labels.
GenWord to_gen_word(const ConjWord& w);
BigIntMatrix evaluate(const ConjWord& w);

/// Two-column listing: factor in conjugate notation | emitted atoms.
std::string trace(const ConjWord& w);

/// Right-hand side of one of the two expansions of e_ji^m e_ij^d e_ji^-m via an
/// auxiliary index k. Valid for every integer m.
ConjWord md_m_word(int variant, int n, const BigInt& d, long m, int i, int j, int k);

enum class ShiftCase { Square, Inverse };

/// X2 expansions of e_ji^2 e_ij^d e_ji^-2 (Square) and e_ji^-1 e_ij^d e_ji (Inverse).
ConjWord lemma_2d2_word(ShiftCase which, int n, const BigInt& d, int i, int j, int k);

/// e_{i2 j2}^eps * x * e_{i2 j2}^-eps for x = e_ji^m e_ij^d e_ji^-m, m in {0,1}.
/// Output factors have p in {-1, 0, 1, 2}.
ConjWord conjugate_rewrite(int m, int i, int j, int i2, int j2, int eps, int n, const BigInt& d);

/// The matrix conjugate_rewrite must reproduce.
BigIntMatrix conjugate_target(int m, int i, int j, int i2, int j2, int eps, int n, const BigInt& d);

/// Replaces p = 2 and p = -1 factors by their X2 expansions.
ConjWord flatten_to_x2(const ConjWord& w);

/// e_ji e_ij^d e_ji^-1 over X1 = { e_ij^d, e_k1 e_1k^d e_k1^-1 }.
ConjWord x2_to_x1_word(int i, int j, int n, const BigInt& d);

/// Smallest index in 1..n outside {a, b}.
int auxiliary_index(int n, int a, int b);

bool is_x2_alphabet(const ConjWord& w);
bool is_x1_alphabet(const ConjWord& w);

}  // namespace ckit
