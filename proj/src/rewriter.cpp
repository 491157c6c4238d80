#include "ckit/rewriter.hpp"

#include <sstream>

namespace ckit {

namespace {

void require_distinct(int n, std::initializer_list<int> idx, const char* where) {
  std::vector<int> seen;
  for (int v : idx) {
    if (v < 1 || v > n) throw InvalidIndex(std::string(where) + ": index out of range");
    for (int s : seen)
      if (s == v) throw InvalidIndex(std::string(where) + ": indices must be distinct");
    seen.push_back(v);
  }
}

}  // namespace

ConjWord& ConjWord::push(int u, int v, long p, const BigInt& power) {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) throw InvalidIndex("conjugate factor index out of range");
  if (power != 0) factors_.push_back(ConjAtomSpec{u, v, p, power});
  return *this;
}

ConjWord& ConjWord::append(const ConjWord& other) {
  if (other.n_ != n_ || other.d_ != d_) throw DimensionMismatch("conj word append: (n, d) mismatch");
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  return *this;
}

GenWord to_gen_word(const ConjWord& w) {
  GenWord out(w.n());
  for (const auto& f : w.factors()) out.push(conj_label(f.u, f.v, f.p), word_conj(w.n(), f.u, f.v, f.p, w.d()), f.power);
  return out;
}

BigIntMatrix evaluate(const ConjWord& w) { return evaluate(to_gen_word(w).flatten()); }

std::string trace(const ConjWord& w) {
  std::ostringstream out;
  for (const auto& f : w.factors()) {
    std::string lhs = "(" + conj_label(f.u, f.v, f.p) + ")";
    if (f.power != 1) lhs += "^" + f.power.str();
    out << lhs << " | " << to_text(word_power(word_conj(w.n(), f.u, f.v, f.p, w.d()), f.power)) << '\n';
  }
  return out.str();
}

int auxiliary_index(int n, int a, int b) {
  for (int k = 1; k <= n; ++k)
    if (k != a && k != b) return k;
  throw InvalidIndex("no auxiliary index available (need n >= 3)");
}

ConjWord md_m_word(int variant, int n, const BigInt& d, long m, int i, int j, int k) {
  require_distinct(n, {i, j, k}, "md_m_word");
  const BigInt mm(m);
  const BigInt m2 = mm * mm;
  ConjWord w(n, d);
  // Factor (u, v, p, power) stands for e_uv^p (e_vu^d)^power e_uv^-p.
  if (variant == 1) {
    w.push(j, k, m, 1)     // e_jk^m e_kj^d e_jk^-m
        .push(j, i, 0, 1)  // e_ij^d
        .push(k, i, 0, -mm)  // (e_ik^d)^-m
        .push(i, k, 1, -mm)  // (e_ik e_ki^d e_ik^-1)^-m
        .push(i, j, 0, -m2)  // (e_ji^d)^-m^2
        .push(k, j, 0, m2)   // (e_jk^d)^m^2
        .push(i, k, 0, mm)   // (e_ki^d)^m
        .push(j, k, 0, -1);  // (e_kj^d)^-1
  } else if (variant == 2) {
    w.push(k, i, 0, 1)       // e_ik^d
        .push(k, j, 0, mm)   // (e_jk^d)^m
        .push(k, j, 1, -mm)  // (e_kj e_jk^d e_kj^-1)^-m
        .push(i, j, 0, -m2)  // (e_ji^d)^-m^2
        .push(i, k, 0, -m2)  // (e_ki^d)^-m^2
        .push(k, i, -m, -1)  // (e_ki^-m e_ik^d e_ki^m)^-1
        .push(j, i, 0, 1)    // e_ij^d
        .push(j, k, 0, -mm);  // (e_kj^d)^-m
  } else {
    throw Unsupported("md_m_word: variant must be 1 or 2");
  }
  return w;
}

ConjWord lemma_2d2_word(ShiftCase which, int n, const BigInt& d, int i, int j, int k) {
  require_distinct(n, {i, j, k}, "lemma_2d2_word");
  ConjWord w(n, d);
  if (which == ShiftCase::Square) {
    // e_ji applied to the m = 1 expansion, term by term.
    w.push(j, k, 1, 1)     // e_jk e_kj^d e_jk^-1
        .push(i, k, 0, -1)  // (e_ki^d)^-1
        .push(i, j, 0, -1)  // (e_ji^d)^-1
        .push(j, i, 1, 1)   // e_ji e_ij^d e_ji^-1
        .push(k, j, 0, -1)  // (e_jk^d)^-1
        .push(k, i, 0, -1)  // (e_ik^d)^-1
        .push(k, j, 0, 1)   // e_jk^d
        .push(i, j, 0, -1)  // (e_ji^d)^-1
        .push(i, k, 1, -1)  // (e_ik e_ki^d e_ik^-1)^-1
        .push(i, j, 0, -1)  // (e_ji^d)^-1
        .push(k, j, 0, 1)   // e_jk^d
        .push(i, k, 0, 1)   // e_ki^d
        .push(i, k, 0, 1)   // e_ki^d
        .push(j, k, 0, -1);  // (e_kj^d)^-1
  } else {
    w.push(k, i, 0, 1)     // e_ik^d
        .push(k, j, 0, -1)  // (e_jk^d)^-1
        .push(k, j, 1, 1)   // e_kj e_jk^d e_kj^-1
        .push(i, j, 0, -1)  // (e_ji^d)^-1
        .push(i, k, 0, -1)  // (e_ki^d)^-1
        .push(k, i, 1, -1)  // (e_ki e_ik^d e_ki^-1)^-1
        .push(j, i, 0, 1)   // e_ij^d
        .push(j, k, 0, 1);  // e_kj^d
  }
  return w;
}

ConjWord conjugate_rewrite(int m, int i, int j, int i2, int j2, int eps, int n, const BigInt& d) {
  if (m != 0 && m != 1) throw InvalidIndex("conjugate_rewrite: m must be 0 or 1");
  if (eps != 1 && eps != -1) throw InvalidIndex("conjugate_rewrite: eps must be +-1");
  if (n < 3) throw InvalidIndex("conjugate_rewrite: n must be >= 3");
  require_distinct(n, {i, j}, "conjugate_rewrite");
  require_distinct(n, {i2, j2}, "conjugate_rewrite");

  ConjWord w(n, d);
  const BigInt e(eps);
  const BigInt em(eps * m);
  const BigInt em2(eps * m * m);
  auto outside = [&](int v) { return v != i && v != j; };
  w.push(j, i, m, 1);  // x itself

  if (outside(i2) && outside(j2)) return w;
  if (i2 == i && outside(j2)) {
    const int k = j2;
    return w.push(k, i, 0, em).push(k, j, 0, em2);  // x (e_ik^d)^{eps m} (e_jk^d)^{eps m^2}
  }
  if (j2 == i && outside(i2)) {
    const int k = i2;
    return w.push(j, k, 0, e).push(i, k, 0, -em);  // x (e_kj^d)^eps (e_ki^d)^{-eps m}
  }
  if (j2 == j && outside(i2)) {
    const int k = i2;
    return w.push(j, k, 0, em).push(i, k, 0, -em2);  // x (e_kj^d)^{eps m} (e_ki^d)^{-eps m^2}
  }
  if (i2 == j && outside(j2)) {
    const int k = j2;
    return w.push(k, i, 0, -e).push(k, j, 0, -em);  // x (e_ik^d)^-eps (e_jk^d)^{-eps m}
  }
  if (i2 == j && j2 == i) {
    ConjWord single(n, d);
    return single.push(j, i, m + eps, 1);  // e_ji^{m+eps} e_ij^d e_ji^{-m-eps}
  }
  // (i2, j2) == (i, j): split e_ij^d as a commutator through k.
  const int k = auxiliary_index(n, i, j);
  const long s = 1 + eps * m;
  const BigInt bs(s), bm(m);
  ConjWord out(n, d);
  out.push(k, i, 0, bs)                  // (e_ik^d)^s
      .push(k, j, 0, bm)                 // (e_jk^d)^m
      .push(k, j, s, -bm)                // (e_kj^s e_jk^d e_kj^-s)^-m
      .push(i, j, 0, -bm * bm)           // (e_ji^d)^{-m^2}
      .push(i, k, 0, -bm * bm * bs)      // (e_ki^d)^{-m^2 s}
      .push(k, i, -m, -bs)               // (e_ki^-m e_ik^d e_ki^m)^-s
      .push(j, i, 0, bs * bs)            // (e_ij^d)^{s^2}
      .push(j, k, 0, -bm * bs * bs);     // (e_kj^d)^{-m s^2}
  return out;
}

BigIntMatrix conjugate_target(int m, int i, int j, int i2, int j2, int eps, int n, const BigInt& d) {
  const BigIntMatrix c = elementary<BigInt>(n, i2, j2, BigInt(eps));
  const BigIntMatrix x = evaluate(word_conj(n, j, i, m, d));
  return mat_mul(mat_mul(c, x), elementary<BigInt>(n, i2, j2, BigInt(-eps)));
}

ConjWord flatten_to_x2(const ConjWord& w) {
  ConjWord out(w.n(), w.d());
  for (const auto& f : w.factors()) {
    if (f.p == 0 || f.p == 1) {
      out.push(f.u, f.v, f.p, f.power);
      continue;
    }
    if (f.p != 2 && f.p != -1)
      throw InvalidIndex("flatten_to_x2: conjugating exponent " + std::to_string(f.p) + " outside [-1, 2]");
    // Factor is e_ji^p e_ij^d e_ji^-p with j = u, i = v. Raising to `power`
    // scales d, which scales every factor of the expansion.
    const int j = f.u, i = f.v;
    const int k = auxiliary_index(w.n(), i, j);
    const auto which = f.p == 2 ? ShiftCase::Square : ShiftCase::Inverse;
    const ConjWord expansion = lemma_2d2_word(which, w.n(), w.d(), i, j, k);
    for (const auto& g : expansion.factors())
      out.push(g.u, g.v, g.p, g.power * f.power);
  }
  return out;
}

ConjWord x2_to_x1_word(int i, int j, int n, const BigInt& d) {
  if (n < 3) throw InvalidIndex("x2_to_x1_word: n must be >= 3");
  require_distinct(n, {i, j}, "x2_to_x1_word");
  ConjWord w(n, d);
  if (i == 1) return w.push(j, 1, 1, 1);    // already e_j1 e_1j^d e_j1^-1
  if (j == 1) return w.push(i, 1, 1, -1);   // (e_i1 e_1i^d e_i1^-1)^-1
  return md_m_word(1, n, d, 1, i, j, 1);
}

bool is_x2_alphabet(const ConjWord& w) {
  for (const auto& f : w.factors())
    if (f.p != 0 && f.p != 1) return false;
  return true;
}

bool is_x1_alphabet(const ConjWord& w) {
  for (const auto& f : w.factors())
    if (!(f.p == 0 || (f.p == 1 && f.v == 1))) return false;
  return true;
}

}  // namespace ckit
