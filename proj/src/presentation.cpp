#include "ckit/presentation.hpp"

#include <sstream>

namespace ckit {

namespace {

// Small builder over the E / F alphabets.
class Gens {
 public:
  explicit Gens(int n) : n_(n) {}

  GenWord E(int i, int j, int power = 1) const {
    GenWord w(n_);
    return std::move(w.push("E(" + std::to_string(i) + "," + std::to_string(j) + ")", word_E(n_, i, j), power));
  }
  GenWord F(int k) const {
    GenWord w(n_);
    return std::move(w.push("F(" + std::to_string(k) + ")", Word(n_, {Flip{k}}), 1));
  }
  GenWord F1(int k, int power = 1) const {
    GenWord w(n_);
    return std::move(w.push("F(1," + std::to_string(k) + ")", word_F(n_, 1, k), power));
  }

 private:
  int n_;
};

GenWord cat(std::initializer_list<GenWord> parts) {
  GenWord out(parts.begin()->n());
  for (const auto& p : parts) out.append(p);
  return out;
}

GenWord comm(const GenWord& a, const GenWord& b) { return cat({a, b, a.inverse(), b.inverse()}); }

GenWord square(const GenWord& a) { return cat({a, a}); }

struct Emitter {
  std::vector<Relator>& out;
  std::string family;
  void operator()(std::string form, std::vector<int> idx, GenWord w) {
    out.push_back(Relator{family, std::move(form), std::move(idx), std::move(w)});
  }
};

template <typename F>
void for_distinct2(int n, F f) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) f(i, j);
}

template <typename F>
void for_distinct3(int n, F f) {
  for_distinct2(n, [&](int i, int j) {
    for (int k = 1; k <= n; ++k)
      if (k != i && k != j) f(i, j, k);
  });
}

template <typename F>
void for_distinct4(int n, F f) {
  for_distinct3(n, [&](int i, int j, int k) {
    for (int l = 1; l <= n; ++l)
      if (l != i && l != j && l != k) f(i, j, k, l);
  });
}

template <typename F>
void for_increasing3(int n, F f) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) f(i, j, k);
}

GenWord hexagon(const Gens& g, int i, int j, int k) {
  return square(cat({g.E(j, i, -1), g.E(i, j), g.E(k, j, -1), g.E(j, k), g.E(i, k, -1), g.E(k, i)}));
}

// Relators among E_ij alone; shared by both presentations.
void pure_e_commutators(const Gens& g, int n, Emitter& emit) {
  for_distinct3(n, [&](int i, int j, int k) { emit("[E_ij,E_ik]", {i, j, k}, comm(g.E(i, j), g.E(i, k))); });
  for_distinct3(n, [&](int i, int j, int k) { emit("[E_ij,E_kj]", {i, j, k}, comm(g.E(i, j), g.E(k, j))); });
  for_distinct3(n, [&](int i, int j, int k) {
    emit("[E_ij,E_jk]E_ik^-2", {i, j, k}, cat({comm(g.E(i, j), g.E(j, k)), g.E(i, k, -2)}));
  });
}

}  // namespace

std::vector<Relator> relators_gamma2hat(int n) {
  if (n < 2) throw InvalidIndex("relators_gamma2hat: n must be >= 2");
  const Gens g(n);
  std::vector<Relator> out;

  Emitter a{out, "GH-a"};
  for (int i = 1; i <= n; ++i) a("F_i^2", {i}, square(g.F(i)));

  Emitter b{out, "GH-b"};
  for_distinct2(n, [&](int i, int j) { b("(F_iF_j)^2", {i, j}, square(cat({g.F(i), g.F(j)}))); });
  for_distinct2(n, [&](int i, int j) { b("(E_ijF_i)^2", {i, j}, square(cat({g.E(i, j), g.F(i)}))); });
  for_distinct2(n, [&](int i, int j) { b("(E_ijF_j)^2", {i, j}, square(cat({g.E(i, j), g.F(j)}))); });

  Emitter c{out, "GH-c"};
  pure_e_commutators(g, n, c);
  for_distinct3(n, [&](int i, int j, int k) { c("[E_ij,F_k]", {i, j, k}, comm(g.E(i, j), g.F(k))); });

  Emitter d{out, "GH-d"};
  for_distinct4(n, [&](int i, int j, int k, int l) { d("[E_ij,E_kl]", {i, j, k, l}, comm(g.E(i, j), g.E(k, l))); });

  Emitter e{out, "GH-e"};
  for_increasing3(n, [&](int i, int j, int k) { e("hexagon^2", {i, j, k}, hexagon(g, i, j, k)); });
  return out;
}

std::vector<Relator> relators_gamma2(int n) {
  if (n < 2) throw InvalidIndex("relators_gamma2: n must be >= 2");
  const Gens g(n);
  std::vector<Relator> out;

  Emitter f1{out, "M3-1"};
  for (int i = 2; i <= n; ++i) f1("F_1i^2", {i}, square(g.F1(i)));
  for (int i = 2; i <= n; ++i) f1("[E_1i,F_1i]", {i}, comm(g.E(1, i), g.F1(i)));
  for (int i = 2; i <= n; ++i) f1("[E_i1,F_1i]", {i}, comm(g.E(i, 1), g.F1(i)));

  // Relators naming index 1 explicitly keep i, j away from 1; the pure E_ij
  // commutators range over all distinct triples.
  Emitter f2{out, "M3-2"};
  pure_e_commutators(g, n, f2);
  auto from2 = [&](auto f) {
    for_distinct2(n, [&](int i, int j) {
      if (i != 1 && j != 1) f(i, j);
    });
  };
  from2([&](int i, int j) { f2("(F_1iF_1j)^2", {i, j}, square(cat({g.F1(i), g.F1(j)}))); });
  from2([&](int i, int j) { f2("(E_1iF_1j)^2", {i, j}, square(cat({g.E(1, i), g.F1(j)}))); });
  from2([&](int i, int j) { f2("(E_ijF_1j)^2", {i, j}, square(cat({g.E(i, j), g.F1(j)}))); });
  from2([&](int i, int j) { f2("(E_i1F_1j)^2", {i, j}, square(cat({g.E(i, 1), g.F1(j)}))); });
  from2([&](int i, int j) { f2("(E_ijF_1i)^2", {i, j}, square(cat({g.E(i, j), g.F1(i)}))); });

  Emitter f3{out, "M3-3"};
  for_distinct4(n, [&](int i, int j, int k, int l) { f3("[E_ij,E_kl]", {i, j, k, l}, comm(g.E(i, j), g.E(k, l))); });

  Emitter f4{out, "M3-4"};
  for_increasing3(n, [&](int i, int j, int k) { f4("hexagon^2", {i, j, k}, hexagon(g, i, j, k)); });
  return out;
}

GenWord rs_rewrite(const Word& w) {
  const int n = w.n();
  const Gens g(n);
  GenWord out(n);
  bool flipped = false;  // running coset representative is F_1
  for (const auto& atom : w.atoms()) {
    if (const auto* e = std::get_if<Elem>(&atom)) {
      if (e->exp % 2 != 0) throw ParseError("rs_rewrite: e-exponent must be even, got " + to_text(atom));
      BigInt half = e->exp / 2;
      // F_1 E_ij F_1^-1 inverts E_ij exactly when one of i, j is 1.
      if (flipped && (e->i == 1 || e->j == 1)) half = -half;
      out.push("E(" + std::to_string(e->i) + "," + std::to_string(e->j) + ")", word_E(n, e->i, e->j), half);
    } else {
      const int k = std::get<Flip>(atom).k;
      // [I F_k] = F_k F_1^-1 and [F_1 F_k] = F_1 F_k: both are F_1k, or I for k = 1.
      if (k != 1) out.append(g.F1(k));
      flipped = !flipped;
    }
  }
  if (flipped) throw NotMember("rs_rewrite: word has determinant -1");
  return out;
}

void RelatorReport::require() const {
  if (all_ok()) return;
  std::ostringstream msg;
  msg << failures.size() << " relator(s) do not evaluate to I:";
  for (std::size_t t = 0; t < failures.size() && t < 5; ++t) msg << ' ' << failures[t];
  throw RelatorFailure(msg.str());
}

RelatorReport verify_relators(const std::vector<Relator>& rs) {
  RelatorReport rep;
  for (const auto& r : rs) {
    const bool good = is_identity(evaluate(r.word));
    rep.ok.push_back(good);
    auto& fc = rep.families[r.family];
    ++fc.total;
    if (good) {
      ++fc.passed;
    } else {
      std::string idx;
      for (int v : r.indices) idx += (idx.empty() ? "" : ",") + std::to_string(v);
      rep.failures.push_back(r.family + " " + r.form + " (" + idx + ")");
    }
  }
  return rep;
}

std::pair<GenWord, GenWord> derived_relator_sides(int n, int j, int k) {
  if (n < 3 || j < 2 || k < 2 || j > n || k > n || j == k)
    throw InvalidIndex("derived_relator_sides: need distinct 2 <= j, k <= n");
  const Gens g(n);
  GenWord lhs = square(cat({g.E(j, 1), g.E(1, j, -1), g.E(k, j, -1), g.E(j, k), g.E(1, k), g.E(k, 1, -1)}));
  GenWord core = square(cat({g.E(j, 1, -1), g.E(1, j), g.E(k, j, -1), g.E(j, k), g.E(1, k, -1), g.E(k, 1)}));
  GenWord rhs = cat({g.F1(k), g.F1(j), core, g.F1(j), g.F1(k)});
  return {lhs, rhs};
}

}  // namespace ckit
