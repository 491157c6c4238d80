#pragma once

// Symbolic words over elementary matrices e_ij^s and sign flips F_k.
//
// Text grammar (one word per line in word files, '#' starts a comment):
//
//   word    := 'I' | factor ('*' factor)*
//   factor  := primary ('^' integer)?
//   primary := 'e(' i ',' j ')' | 'F(' k ')' | '(' word ')'
//
// A power on a parenthesized group expands the group, so "(e(2,1)*e(1,2)^3)^-1"
// is the inverse of that product.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ckit/exactmat.hpp"

namespace ckit {

/// e_ij^exp
struct Elem {
  int i = 0;
  int j = 0;
  BigInt exp;
  friend bool operator==(const Elem&, const Elem&) = default;
};

/// F_k; its own inverse.
struct Flip {
  int k = 0;
  friend bool operator==(const Flip&, const Flip&) = default;
};

using Atom = std::variant<Elem, Flip>;

class Word {
 public:
  explicit Word(int n, std::vector<Atom> atoms = {});

  int n() const { return n_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

  Word& append(const Atom& atom);
  Word& append(const Word& other);

  friend Word operator*(Word a, const Word& b) { return std::move(a.append(b)); }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  int n_;
  std::vector<Atom> atoms_;
};

BigIntMatrix atom_matrix(int n, const Atom& atom);

/// Left-to-right product of the atom matrices; the empty word is I.
BigIntMatrix evaluate(const Word& w);

/// Reversed word with each Elem exponent negated; flips are kept.
Word invert_word(const Word& w);

/// Adjacent-cancellation normal form: merges neighbouring Elem atoms on the
/// same (i,j), drops zero exponents, and cancels neighbouring equal flips.
Word free_reduce(const Word& w);

/// w^k. A body of the shape P * e_ij^s * P^-1 is powered in place.
Word word_power(const Word& w, const BigInt& k);

std::string to_text(const Word& w);
std::string to_text(const Atom& a);
Word parse_word(std::string_view text, int n);

/// Reads a word file: blank lines and '#' comments are skipped.
std::vector<Word> read_words(std::istream& in, int n);

/// A labelled generator raised to an integer power.
struct Syllable {
  std::string label;
  Word body;
  BigInt power;
};

/// A word over a labelled generator alphabet.
class GenWord {
 public:
  explicit GenWord(int n) : n_(n) {}

  int n() const { return n_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }

  GenWord& push(std::string label, Word body, BigInt power = 1);
  GenWord& append(const GenWord& other);

  Word flatten() const;
  GenWord inverse() const;

 private:
  int n_;
  std::vector<Syllable> syllables_;
};

/// Evaluates syllable by syllable with binary powering of each body.
BigIntMatrix evaluate(const GenWord& w);
std::string to_text(const GenWord& w);

// Named builders ------------------------------------------------------------

/// E_ij = e_ij^2
Word word_E(int n, int i, int j);
/// F_kl = e_kl^2 e_lk^-2 e_lk e_kl^2 e_lk^-1, which equals F_k F_l.
Word word_F(int n, int k, int l);
/// f_k^d = e_k1^d (e_k1 e_1k^d e_k1^-1) (e_1k^d)^-1
Word word_f(int n, int k, const BigInt& d);
/// e_uv^p e_vu^d e_uv^-p
Word word_conj(int n, int u, int v, const BigInt& p, const BigInt& d);

/// Stable label for e_uv^p e_vu^d e_uv^-p, e.g. "e(1,2)^d" for p = 0 and
/// "e(2,1)*e(1,2)^d*e(2,1)^-1" for p = 1.
std::string conj_label(int u, int v, long p);

/// Labels of the extra level-5 and level-6 solver generators:
///   e21^m e12^s e21^d e12^-s e21^-m      (s = +-2)
///   e21^m [e21^a, e12^b] e21^-m          (a = +-3, b = +-2)
std::string level5_label(int m, int s);
std::string level6_label(int m, int a, int b);

enum class NamedWord { E_ij, F_kl, f_k_d, conj_gen };

struct NamedParams {
  int n = 0;
  int i = 0;
  int j = 0;
  long m = 0;
  BigInt d = 0;
};

/// Literal word for a named generator. E_ij / F_kl read (i,j) as (k,l);
/// f_k_d reads i as k; conj_gen builds e_ji^m e_ij^d e_ji^-m.
Word build_named(NamedWord name, const NamedParams& p);

enum class FamilyTag { X1, X2, XWithFk, Gamma2, Gamma2Hat, Solver };

std::string to_string(FamilyTag tag);

struct GenMember {
  std::string label;
  Word word;
};

struct GenFamily {
  FamilyTag tag;
  int n;
  int d;
  std::vector<GenMember> members;

  const GenMember* find(std::string_view label) const;
};

/// Complete labelled generating set for the tagged family.
///   X1, XWithFk: n >= 3, d >= 1
///   X2:          n >= 2, d >= 1
///   Gamma2:      n >= 2, d == 2       (E_ij, F_1k)
///   Gamma2Hat:   n >= 2, d == 2       (E_ij, F_k)
///   Solver:      n == 2, d in 3..6
GenFamily gen_set(FamilyTag tag, int n, int d);

/// True when every syllable names a family member and carries that member's body.
bool uses_family_alphabet(const GenWord& w, const GenFamily& family);

}  // namespace ckit
