#include "ckit/words.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace ckit {

namespace {

void check_atom(int n, const Atom& atom) {
  if (const auto* e = std::get_if<Elem>(&atom)) {
    if (e->i < 1 || e->j < 1 || e->i > n || e->j > n || e->i == e->j)
      throw InvalidIndex("word atom " + to_text(atom) + " out of range for n=" + std::to_string(n));
  } else {
    const auto& f = std::get<Flip>(atom);
    if (f.k < 1 || f.k > n)
      throw InvalidIndex("word atom " + to_text(atom) + " out of range for n=" + std::to_string(n));
  }
}

Atom invert_atom(const Atom& a) {
  if (const auto* e = std::get_if<Elem>(&a)) return Elem{e->i, e->j, -e->exp};
  return a;
}

BigIntMatrix matrix_power(BigIntMatrix base, BigInt k) {
  const int n = static_cast<int>(base.rows());
  if (k < 0) {
    base = mat_inv(base);
    k = -k;
  }
  BigIntMatrix result = identity(n);
  while (k > 0) {
    if ((k & 1) != 0) result = mat_mul(result, base);
    k >>= 1;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

}  // namespace

Word::Word(int n, std::vector<Atom> atoms) : n_(n), atoms_(std::move(atoms)) {
  if (n_ < 1) throw InvalidIndex("word dimension must be >= 1");
  for (const auto& a : atoms_) check_atom(n_, a);
}

Word& Word::append(const Atom& atom) {
  check_atom(n_, atom);
  atoms_.push_back(atom);
  return *this;
}

Word& Word::append(const Word& other) {
  if (other.n_ != n_) throw DimensionMismatch("word append: dimension mismatch");
  atoms_.insert(atoms_.end(), other.atoms_.begin(), other.atoms_.end());
  return *this;
}

BigIntMatrix atom_matrix(int n, const Atom& atom) {
  if (const auto* e = std::get_if<Elem>(&atom)) return elementary<BigInt>(n, e->i, e->j, e->exp);
  return sign_flip<BigInt>(n, std::get<Flip>(atom).k);
}

BigIntMatrix evaluate(const Word& w) {
  const int n = w.n();
  BigIntMatrix m = identity(n);
  // Right-multiplying by e_ij^s adds s * column i to column j; F_k negates column k.
  for (const auto& atom : w.atoms()) {
    if (const auto* e = std::get_if<Elem>(&atom)) {
      if (e->exp != 0) m.col(e->j - 1) += m.col(e->i - 1) * e->exp;
    } else {
      m.col(std::get<Flip>(atom).k - 1) *= BigInt(-1);
    }
  }
  return m;
}

Word invert_word(const Word& w) {
  std::vector<Atom> out;
  out.reserve(w.size());
  for (auto it = w.atoms().rbegin(); it != w.atoms().rend(); ++it) out.push_back(invert_atom(*it));
  return Word(w.n(), std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Atom> stack;
  for (const auto& atom : w.atoms()) {
    if (const auto* e = std::get_if<Elem>(&atom)) {
      if (e->exp == 0) continue;
      if (!stack.empty()) {
        if (auto* top = std::get_if<Elem>(&stack.back()); top && top->i == e->i && top->j == e->j) {
          top->exp += e->exp;
          if (top->exp == 0) stack.pop_back();
          continue;
        }
      }
      stack.push_back(atom);
    } else {
      const auto& f = std::get<Flip>(atom);
      if (!stack.empty()) {
        if (const auto* top = std::get_if<Flip>(&stack.back()); top && top->k == f.k) {
          stack.pop_back();
          continue;
        }
      }
      stack.push_back(atom);
    }
  }
  return Word(w.n(), std::move(stack));
}

Word word_power(const Word& w, const BigInt& k) {
  const auto& atoms = w.atoms();
  // Look for P * e_ij^s * P^-1.
  if (atoms.size() % 2 == 1) {
    const std::size_t mid = atoms.size() / 2;
    bool conj_shape = std::holds_alternative<Elem>(atoms[mid]);
    for (std::size_t t = 0; conj_shape && t < mid; ++t)
      conj_shape = atoms[atoms.size() - 1 - t] == invert_atom(atoms[t]);
    if (conj_shape) {
      std::vector<Atom> out(atoms);
      auto& core = std::get<Elem>(out[mid]);
      core.exp *= k;
      if (core.exp == 0) return Word(w.n());
      return Word(w.n(), std::move(out));
    }
  }
  if (k == 0 || w.empty()) return Word(w.n());
  const Word unit = k < 0 ? invert_word(w) : w;
  Word out(w.n());
  for (BigInt t = 0; t < abs(k); ++t) out.append(unit);
  return out;
}

std::string to_text(const Atom& a) {
  if (const auto* e = std::get_if<Elem>(&a))
    return "e(" + std::to_string(e->i) + "," + std::to_string(e->j) + ")^" + e->exp.str();
  return "F(" + std::to_string(std::get<Flip>(a).k) + ")";
}

std::string to_text(const Word& w) {
  if (w.empty()) return "I";
  std::string out;
  for (const auto& a : w.atoms()) {
    if (!out.empty()) out += '*';
    out += to_text(a);
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, int n) : text_(text), n_(n) {}

  Word parse() {
    Word w = parse_product();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

 private:
  Word parse_product() {
    skip_ws();
    if (at_end() || peek() == ')') return Word(n_);
    if (peek() == 'I') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == '*') fail("'I' cannot be combined with other factors");
      return Word(n_);
    }
    Word w = parse_factor();
    for (skip_ws(); !at_end() && peek() == '*'; skip_ws()) {
      ++pos_;
      w.append(parse_factor());
    }
    return w;
  }

  Word parse_factor() {
    skip_ws();
    if (at_end()) fail("expected a factor");
    const char c = peek();
    if (c == 'e') {
      ++pos_;
      expect('(');
      const int i = parse_index();
      expect(',');
      const int j = parse_index();
      expect(')');
      BigInt s = 1;
      if (accept('^')) s = parse_integer();
      if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) fail("elementary indices out of range");
      return Word(n_, {Elem{i, j, s}});
    }
    if (c == 'F') {
      ++pos_;
      expect('(');
      const int k = parse_index();
      expect(')');
      if (k < 1 || k > n_) fail("flip index out of range");
      Word f(n_, {Flip{k}});
      if (accept('^')) f = word_power(f, parse_integer());
      return f;
    }
    if (c == '(') {
      ++pos_;
      Word inner = parse_product();
      expect(')');
      if (accept('^')) inner = word_power(inner, parse_integer());
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  int parse_index() {
    const BigInt v = parse_integer();
    if (v < 1 || v > 1000) fail("index out of range");
    return v.convert_to<int>();
  }

  BigInt parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    try {
      return parse_bigint(std::string(text_.substr(start, pos_ - start)));
    } catch (const ParseError&) {
      fail("expected an integer");
    }
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool accept(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word: " + what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int n) { return WordParser(text, n).parse(); }

std::vector<Word> read_words(std::istream& in, int n) {
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_word(line, n));
  }
  return out;
}

GenWord& GenWord::push(std::string label, Word body, BigInt power) {
  if (body.n() != n_) throw DimensionMismatch("syllable dimension mismatch");
  if (power != 0) syllables_.push_back(Syllable{std::move(label), std::move(body), std::move(power)});
  return *this;
}

GenWord& GenWord::append(const GenWord& other) {
  if (other.n_ != n_) throw DimensionMismatch("gen word append: dimension mismatch");
  syllables_.insert(syllables_.end(), other.syllables_.begin(), other.syllables_.end());
  return *this;
}

Word GenWord::flatten() const {
  Word out(n_);
  for (const auto& s : syllables_) out.append(word_power(s.body, s.power));
  return out;
}

GenWord GenWord::inverse() const {
  GenWord out(n_);
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    out.push(it->label, it->body, -it->power);
  return out;
}

BigIntMatrix evaluate(const GenWord& w) {
  BigIntMatrix m = identity(w.n());
  for (const auto& s : w.syllables()) m = mat_mul(m, matrix_power(evaluate(s.body), s.power));
  return m;
}

std::string to_text(const GenWord& w) {
  if (w.empty()) return "I";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += '*';
    out += "(" + to_text(s.body) + ")";
    if (s.power != 1) out += "^" + s.power.str();
  }
  return out;
}

Word word_E(int n, int i, int j) { return Word(n, {Elem{i, j, 2}}); }

Word word_F(int n, int k, int l) {
  return Word(n, {Elem{k, l, 2}, Elem{l, k, -2}, Elem{l, k, 1}, Elem{k, l, 2}, Elem{l, k, -1}});
}

Word word_f(int n, int k, const BigInt& d) {
  if (k < 2) throw InvalidIndex("f_k^d needs k >= 2");
  return Word(n, {Elem{k, 1, d}, Elem{k, 1, 1}, Elem{1, k, d}, Elem{k, 1, -1}, Elem{1, k, -d}});
}

Word word_conj(int n, int u, int v, const BigInt& p, const BigInt& d) {
  if (p == 0) return Word(n, {Elem{v, u, d}});
  return Word(n, {Elem{u, v, p}, Elem{v, u, d}, Elem{u, v, -p}});
}

std::string conj_label(int u, int v, long p) {
  const std::string uv = "e(" + std::to_string(u) + "," + std::to_string(v) + ")";
  const std::string core = "e(" + std::to_string(v) + "," + std::to_string(u) + ")^d";
  if (p == 0) return core;
  if (p == 1) return uv + "*" + core + "*" + uv + "^-1";
  return uv + "^" + std::to_string(p) + "*" + core + "*" + uv + "^" + std::to_string(-p);
}

Word build_named(NamedWord name, const NamedParams& p) {
  switch (name) {
    case NamedWord::E_ij:
      return word_E(p.n, p.i, p.j);
    case NamedWord::F_kl:
      return word_F(p.n, p.i, p.j);
    case NamedWord::f_k_d:
      return word_f(p.n, p.i, p.d);
    case NamedWord::conj_gen:
      return word_conj(p.n, p.j, p.i, p.m, p.d);
  }
  throw Unsupported("build_named: unknown name");
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::X1: return "X1";
    case FamilyTag::X2: return "X2";
    case FamilyTag::XWithFk: return "X_with_fk";
    case FamilyTag::Gamma2: return "Gamma2";
    case FamilyTag::Gamma2Hat: return "Gamma2hat";
    case FamilyTag::Solver: return "Solver";
  }
  return "?";
}

const GenMember* GenFamily::find(std::string_view label) const {
  for (const auto& m : members)
    if (m.label == label) return &m;
  return nullptr;
}

namespace {

std::string pair_label(const char* head, int i, int j) {
  return std::string(head) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void add_elementary_powers(GenFamily& f) {
  for (int i = 1; i <= f.n; ++i)
    for (int j = 1; j <= f.n; ++j)
      if (i != j) f.members.push_back({conj_label(j, i, 0), word_conj(f.n, j, i, 0, f.d)});
}

Word wrap_e21(int m, const Word& body) {
  if (m == 0) return body;
  Word w(2, {Elem{2, 1, m}});
  return std::move(w.append(body).append(Atom{Elem{2, 1, -m}}));
}

std::string wrap_e21_label(int m, const std::string& core) {
  if (m == 0) return core;
  return "e(2,1)^" + std::to_string(m) + "*" + core + "*e(2,1)^" + std::to_string(-m);
}

void add_solver_members(GenFamily& f) {
  const int d = f.d;
  f.members.push_back({"e(2,1)^d", Word(2, {Elem{2, 1, d}})});
  for (int m = 0; m < d; ++m) f.members.push_back({conj_label(2, 1, m), word_conj(2, 2, 1, m, d)});
  if (d == 5) {
    for (int m = 0; m < d; ++m)
      for (int s : {2, -2})
        f.members.push_back({level5_label(m, s), wrap_e21(m, Word(2, {Elem{1, 2, s}, Elem{2, 1, 5}, Elem{1, 2, -s}}))});
  } else if (d == 6) {
    for (int m = 0; m < d; ++m)
      for (int a : {3, -3})
        for (int b : {2, -2})
          f.members.push_back({level6_label(m, a, b),
                               wrap_e21(m, Word(2, {Elem{2, 1, a}, Elem{1, 2, b}, Elem{2, 1, -a}, Elem{1, 2, -b}}))});
  }
}

}  // namespace

std::string level5_label(int m, int s) {
  return wrap_e21_label(m, "e(1,2)^" + std::to_string(s) + "*e(2,1)^d*e(1,2)^" + std::to_string(-s));
}

std::string level6_label(int m, int a, int b) {
  return wrap_e21_label(m, "[e(2,1)^" + std::to_string(a) + ",e(1,2)^" + std::to_string(b) + "]");
}

GenFamily gen_set(FamilyTag tag, int n, int d) {
  GenFamily f{tag, n, d, {}};
  auto unsupported = [&]() {
    return Unsupported("gen_set: unsupported combination " + to_string(tag) + " n=" +
                       std::to_string(n) + " d=" + std::to_string(d));
  };
  switch (tag) {
    case FamilyTag::X1:
      if (n < 3 || d < 1) throw unsupported();
      add_elementary_powers(f);
      for (int k = 2; k <= n; ++k) f.members.push_back({conj_label(k, 1, 1), word_conj(n, k, 1, 1, d)});
      break;
    case FamilyTag::XWithFk:
      if (n < 3 || d < 1) throw unsupported();
      add_elementary_powers(f);
      for (int k = 2; k <= n; ++k) f.members.push_back({"f_" + std::to_string(k) + "^d", word_f(n, k, d)});
      break;
    case FamilyTag::X2:
      if (n < 2 || d < 1) throw unsupported();
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j)
            for (int m = 0; m <= 1; ++m) f.members.push_back({conj_label(j, i, m), word_conj(n, j, i, m, d)});
      break;
    case FamilyTag::Gamma2:
      if (n < 2 || d != 2) throw unsupported();
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j) f.members.push_back({pair_label("E", i, j), word_E(n, i, j)});
      for (int k = 2; k <= n; ++k) f.members.push_back({pair_label("F", 1, k), word_F(n, 1, k)});
      break;
    case FamilyTag::Gamma2Hat:
      if (n < 2 || d != 2) throw unsupported();
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j) f.members.push_back({pair_label("E", i, j), word_E(n, i, j)});
      for (int k = 1; k <= n; ++k) f.members.push_back({"F(" + std::to_string(k) + ")", Word(n, {Flip{k}})});
      break;
    case FamilyTag::Solver:
      if (n != 2 || d < 3 || d > 6) throw unsupported();
      add_solver_members(f);
      break;
  }
  return f;
}

bool uses_family_alphabet(const GenWord& w, const GenFamily& family) {
  if (w.n() != family.n) return false;
  for (const auto& s : w.syllables()) {
    const GenMember* m = family.find(s.label);
    if (m == nullptr || !(m->word == s.body)) return false;
  }
  return true;
}

}  // namespace ckit
