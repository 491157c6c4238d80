// Acceptance suite: one PASS/FAIL line per criterion with its instance count,
// wall time, and time limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "ckit/congruence.hpp"
#include "ckit/json_io.hpp"
#include "ckit/rewriter.hpp"
#include "oracles.hpp"

using namespace ckit;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kAcceptanceSeed = 20240531;

namespace {

struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first;
  std::string note;

  void check(bool ok, const std::function<std::string()>& where) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first = where();
  }
  // Runs f; any exception counts as a failure.
  void guard(const std::function<bool()>& f, const std::function<std::string()>& where) {
    bool ok = false;
    std::string why;
    try {
      ok = f();
    } catch (const std::exception& e) {
      why = std::string(": ") + e.what();
    }
    check(ok, [&] { return where() + why; });
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string at(std::initializer_list<long> v) {
  std::ostringstream s;
  s << '(';
  bool first = true;
  for (long x : v) {
    s << (first ? "" : ",") << x;
    first = false;
  }
  s << ')';
  return s.str();
}

oracle::Mat conj_oracle(int n, int u, int v, long p, const BigInt& e) {
  return oracle::mul(oracle::mul(oracle::elem(n, u, v, p), oracle::elem(n, v, u, e)), oracle::elem(n, u, v, -p));
}

// Inverse of a 2x2 matrix with determinant +-1.
oracle::Mat inv2(const oracle::Mat& p) {
  const BigInt det = p[0][0] * p[1][1] - p[0][1] * p[1][0];
  return {{det * p[1][1], -det * p[0][1]}, {-det * p[1][0], det * p[0][0]}};
}

// Product of `len` random family members, each to a power in [-2, 2].
oracle::Mat random_product(std::mt19937_64& rng, const GenFamily& fam, int len) {
  std::uniform_int_distribution<std::size_t> pick(0, fam.members.size() - 1);
  std::uniform_int_distribution<int> pw(-2, 2);
  oracle::Mat x = oracle::ident(fam.n);
  for (int t = 0; t < len; ++t) {
    const auto& g = fam.members[pick(rng)];
    x = oracle::mul(x, oracle::power(oracle::eval(g.word), pw(rng), oracle::eval_inverse(g.word)));
  }
  return x;
}

BigIntMatrix to_eigen(const oracle::Mat& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  BigIntMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = a[r][c];
  return out;
}

oracle::Mat comm(const oracle::Mat& x, const oracle::Mat& y, const oracle::Mat& xi, const oracle::Mat& yi) {
  return oracle::mul(oracle::mul(x, y), oracle::mul(xi, yi));
}

// ---------------------------------------------------------------------------

Tally relation_grid() {
  Tally t;
  auto e = [](int n, int i, int j, long s) { return Word(n, {Elem{i, j, s}}); };
  auto same = [](const Word& a, const Word& b) { return evaluate(a) == evaluate(b); };
  for (int n = 3; n <= 5; ++n)
    for (long s = -5; s <= 5; ++s)
      for (long u = -5; u <= 5; ++u)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
              if (i == j || k == i || k == j) continue;
              const auto where = [&] { return "n=" + std::to_string(n) + " s,t=" + at({s, u}) + " " + at({i, j, k}); };
              t.check(same(e(n, i, j, s) * e(n, i, k, u), e(n, i, k, u) * e(n, i, j, s)), where);
              t.check(same(e(n, i, j, s) * e(n, k, j, u), e(n, k, j, u) * e(n, i, j, s)), where);
              t.check(same(e(n, i, j, s) * e(n, j, k, u), e(n, j, k, u) * e(n, i, j, s) * e(n, i, k, s * u)), where);
              for (int l = 1; l <= n; ++l) {
                if (l == i || l == j || l == k) continue;
                t.check(same(e(n, i, j, s) * e(n, k, l, u), e(n, k, l, u) * e(n, i, j, s)), where);
              }
            }
  for (int n = 3; n <= 5; ++n)
    for (long s = -5; s <= 5; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          t.check(same(e(n, j, i, 1) * e(n, i, j, s) * e(n, j, i, -1), e(n, i, j, 1) * e(n, j, i, -s) * e(n, i, j, -1)),
                  [&] { return "swap n=" + std::to_string(n) + " s=" + std::to_string(s) + " " + at({i, j}); });
        }
  return t;
}

Tally conjugate_expansions() {
  Tally t;
  for (int n = 3; n <= 5; ++n)
    for (int d = 1; d <= 5; ++d)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k) {
            if (i == j || k == i || k == j) continue;
            for (long m = -3; m <= 3; ++m) {
              const oracle::Mat target = conj_oracle(n, j, i, m, d);
              for (int variant = 1; variant <= 2; ++variant)
                t.guard([&] { return oracle::equal(target, evaluate(md_m_word(variant, n, d, m, i, j, k))); },
                        [&] { return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " m=" + std::to_string(m) +
                                     " " + at({i, j, k}) + " variant " + std::to_string(variant); });
            }
          }
  return t;
}

Tally conjugation_closure() {
  Tally t;
  for (int n = 3; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          for (int m = 0; m <= 1; ++m)
            for (int i2 = 1; i2 <= n; ++i2)
              for (int j2 = 1; j2 <= n; ++j2) {
                if (i2 == j2) continue;
                for (int eps : {1, -1}) {
                  const oracle::Mat target =
                      oracle::mul(oracle::mul(oracle::elem(n, i2, j2, eps), conj_oracle(n, j, i, m, d)),
                                  oracle::elem(n, i2, j2, -eps));
                  t.guard([&] {
                    const ConjWord w = conjugate_rewrite(m, i, j, i2, j2, eps, n, d);
                    if (!oracle::equal(target, evaluate(w))) return false;
                    const ConjWord flat = flatten_to_x2(w);
                    return is_x2_alphabet(flat) && oracle::equal(target, evaluate(flat));
                  }, [&] { return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " m=" + std::to_string(m) + " " +
                                  at({i, j, i2, j2, eps}); });
                }
              }
        }
  return t;
}

Tally abelianization(std::mt19937_64& rng) {
  Tally t;
  for (auto [n, d] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
    const GenFamily fam = gen_set(FamilyTag::X1, n, d);
    const std::string tag = "(n,d)=" + at({n, d});
    for (int s = 0; s < 1000; ++s) {
      const oracle::Mat x = random_product(rng, fam, 4), y = random_product(rng, fam, 4);
      t.guard([&] {
        const AbelCoords sum = abel_add(abelianize(to_eigen(x), d), abelianize(to_eigen(y), d));
        return abelianize(to_eigen(oracle::mul(x, y)), d) == sum;
      }, [&] { return tag + " homomorphism sample " + std::to_string(s); });
    }
    // Kernel criterion. Half the samples are pushed into Gamma_{d^2} by taking
    // d-th powers and commutators, so both sides of the equivalence occur.
    std::size_t zero = 0, nonzero = 0;
    for (int s = 0; s < 1000; ++s) {
      oracle::Mat x = random_product(rng, fam, 3);
      if (s % 2) {
        const oracle::Mat y = random_product(rng, fam, 3);
        x = oracle::power(x, d, oracle::ident(n));
        x = oracle::mul(x, comm(y, x, oracle::from(mat_inv(to_eigen(y))), oracle::from(mat_inv(to_eigen(x)))));
      }
      const bool deep = [&] {
        const BigInt lv = oracle::level(x);
        return lv == 0 || lv % (d * d) == 0;
      }();
      t.guard([&] {
        const bool z = abelianize(to_eigen(x), d).is_zero();
        (z ? zero : nonzero)++;
        return z == deep;
      }, [&] { return tag + " kernel sample " + std::to_string(s); });
    }
    if (zero == 0 || nonzero == 0) t.check(false, [&] { return tag + " kernel samples did not reach both sides"; });
    const GenFamily fk = gen_set(FamilyTag::XWithFk, n, d);
    std::set<std::vector<BigInt>> images;
    for (const auto& g : fk.members) {
      const auto v = abelianize(to_eigen(oracle::eval(g.word)), d).to_vector();
      std::size_t ones = 0, zeros = 0;
      for (const auto& c : v) {
        ones += c == 1;
        zeros += c == 0;
      }
      t.check(ones == 1 && zeros + 1 == v.size(), [&] { return tag + " generator " + g.label + " is not a unit vector"; });
      images.insert(v);
    }
    t.check(images.size() == static_cast<std::size_t>(n * n - 1), [&] { return tag + " generator images not distinct"; });
  }
  return t;
}

Tally solver(std::mt19937_64& rng, double& worst) {
  Tally t;
  std::uniform_int_distribution<long> step(-9, 9);
  for (int d = 3; d <= 6; ++d) {
    const GenFamily fam = gen_set(FamilyTag::Solver, 2, d);
    for (int s = 0; s < 200; ++s) {
      oracle::Mat a;
      if (s % 2 == 0) {
        a = random_product(rng, fam, 10);
      } else {
        // P e_ij^d P^-1 with the entries of P at most 10^6.
        oracle::Mat p = oracle::ident(2);
        for (int k = 0; k < 60; ++k) {
          const oracle::Mat next = oracle::mul(p, oracle::elem(2, 1 + k % 2, 2 - k % 2, step(rng)));
          bool small = true;
          for (const auto& row : next)
            for (const auto& v : row) small = small && abs(v) <= 1000000;
          if (!small) break;
          p = next;
        }
        const oracle::Mat core = (s / 2) % 2 ? oracle::elem(2, 1, 2, d) : oracle::elem(2, 2, 1, d);
        a = oracle::mul(oracle::mul(p, core), inv2(p));
      }
      const BigIntMatrix input = to_eigen(a);
      const auto t0 = Clock::now();
      t.guard([&] {
        const Decomposition dec = decompose2(input, d);
        const double took = seconds_since(t0);
        worst = std::max(worst, took);
        return took < 1.0 && oracle::eval(dec.word) == a && uses_family_alphabet(dec.word, fam);
      }, [&] { return "d=" + std::to_string(d) + " sample " + std::to_string(s); });
    }
  }
  std::ostringstream note;
  note << "slowest instance " << worst << "s (limit 1s)";
  t.note = note.str();
  return t;
}

Tally presentation(std::mt19937_64& rng) {
  Tally t;
  for (int n = 2; n <= 5; ++n)
    for (const auto& rs : {relators_gamma2hat(n), relators_gamma2(n)})
      for (const auto& r : rs)
        t.check(oracle::is_ident(oracle::eval(r.word)), [&] { return r.family + " " + r.form + " n=" + std::to_string(n); });
  for (int s = 0; s < 1000; ++s) {
    const int n = 2 + s % 4;
    std::uniform_int_distribution<int> idx(1, n), ex(-3, 3), coin(0, 3);
    Word w(n);
    int flips = 0;
    for (int k = 0; k < 10; ++k) {
      const int i = idx(rng), j = idx(rng);
      if (coin(rng) == 0) {
        w.append(Atom{Flip{i}});
        ++flips;
      } else if (i != j) {
        w.append(Atom{Elem{i, j, 2 * ex(rng)}});
      }
    }
    if (flips % 2) w.append(Atom{Flip{idx(rng)}});
    t.guard([&] { return oracle::eval(rs_rewrite(w)) == oracle::eval(w); },
            [&] { return "rewrite " + to_text(w); });
  }
  for (int n = 3; n <= 5; ++n)
    for (int j = 2; j <= n; ++j)
      for (int k = 2; k <= n; ++k) {
        if (j == k) continue;
        const auto [lhs, rhs] = derived_relator_sides(n, j, k);
        t.check(oracle::eval(lhs) == oracle::eval(rhs), [&] { return "derived relator " + at({n, j, k}); });
      }
  return t;
}

Tally quotients() {
  Tally t;
  auto expect = [&](bool ok, const std::string& what) { t.check(ok, [&] { return what; }); };
  const GroupTable a = enumerate_image(3, 1, 2);
  expect(a.order() == 168 && oracle::filter_enumerate(3, 1, 2).size() == 168, "|SL(3, Z/2)| = 168 by closure and by filter");
  const GroupTable b = enumerate_image(3, 2, 4);
  expect(b.order() == 256, "|G_2/G_4| = 256 for n = 3");
  expect(is_abelian(b) && abelian_structure(b).factors == std::vector<std::int64_t>(8, 2), "G_2/G_4 = (Z/2)^8");
  const GroupTable c = enumerate_image(3, 3, 9);
  expect(c.order() == 6561 && abelian_structure(c).factors == std::vector<std::int64_t>(8, 3), "G_3/G_9 = (Z/3)^8");
  const std::size_t o6 = enumerate_image(2, 1, 6).order(), o2 = enumerate_image(2, 1, 2).order(),
                    o3 = enumerate_image(2, 1, 3).order();
  expect(o6 == 144 && o2 == 6 && o3 == 24, "|SL(2, Z/6)| = 144 = 6 * 24");
  const GroupTable lhs = enumerate_image(3, 1, 3), rhs = enumerate_image(3, 2, 6);
  expect(lhs.order() == 5616 && rhs.order() == 5616, "|G_1/G_3| = |G_2/G_6| = 5616");
  expect(order_census(lhs) == order_census(rhs), "order census of G_1/G_3 equals that of G_2/G_6");
  return t;
}

Tally commutator_levels(std::mt19937_64& rng) {
  Tally t;
  for (int s = 0; s < 1000; ++s) {
    const int d1 = 2 + s % 2, d2 = 2 + (s / 2) % 2;
    const oracle::Mat x = random_product(rng, gen_set(FamilyTag::X1, 3, d1), 4);
    const oracle::Mat y = random_product(rng, gen_set(FamilyTag::X1, 3, d2), 4);
    const oracle::Mat c = comm(x, y, oracle::from(mat_inv(to_eigen(x))), oracle::from(mat_inv(to_eigen(y))));
    const BigInt lv = oracle::level(c);
    t.check(lv == 0 || lv % (d1 * d2) == 0, [&] { return "n=3 (d1,d2)=" + at({d1, d2}) + " sample " + std::to_string(s); });
  }
  const GenFamily hat = gen_set(FamilyTag::Gamma2Hat, 2, 2), g3 = gen_set(FamilyTag::Solver, 2, 3);
  const GenFamily s6 = gen_set(FamilyTag::Solver, 2, 6);
  for (int s = 0; s < 200; ++s) {
    const oracle::Mat x = random_product(rng, hat, 4), y = random_product(rng, g3, 3);
    const oracle::Mat c = comm(x, y, inv2(x), inv2(y));
    t.guard([&] {
      const Decomposition dec = decompose2(to_eigen(c), 6);
      return oracle::eval(dec.word) == c && uses_family_alphabet(dec.word, s6);
    }, [&] { return "n=2 [GL-Gamma_2, Gamma_3] sample " + std::to_string(s); });
  }
  return t;
}

Tally negative_controls() {
  Tally t;
  auto raises = [&](const std::string& what, auto&& f, auto tag) {
    using E = decltype(tag);
    bool ok = false;
    try {
      f();
    } catch (const E&) {
      ok = true;
    } catch (...) {
    }
    t.check(ok, [&] { return what; });
  };
  auto rs = relators_gamma2hat(3);
  rs[5].word.push("E(2,3)", word_E(3, 2, 3), 1);
  raises("corrupted relator raises RelatorFailure", [&] { verify_relators(rs).require(); }, RelatorFailure(""));
  BigIntMatrix non(2, 2);
  non << BigInt(1), BigInt(1), BigInt(0), BigInt(1);
  raises("decompose2 of a non-member raises NotMember", [&] { decompose2(non, 3); }, NotMember(""));
  raises("abelianize of a non-member raises NotMember",
         [&] { abelianize(elementary<BigInt>(3, 1, 2, BigInt(1)), BigInt(2)); }, NotMember(""));
  raises("decompose2 with d = 7 raises Unsupported", [&] { decompose2(identity(2), 7); }, Unsupported(""));
  raises("quotient outside the supported range raises Unsupported", [&] { enumerate_image(2, 7, 14); }, Unsupported(""));
  raises("determinant -1 word in Schreier rewriting raises NotMember",
         [&] { rs_rewrite(Word(2, {Flip{2}})); }, NotMember(""));
  return t;
}

}  // namespace

int main() {
  std::mt19937_64 rng(kAcceptanceSeed);
  double worst_instance = 0;
  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<Tally()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "relation grid", 30, relation_grid},
      {2, "conjugate expansions", 60, conjugate_expansions},
      {3, "conjugation closure", 60, conjugation_closure},
      {4, "abelianization", 30, [&] { return abelianization(rng); }},
      {5, "solver soundness", 800, [&] { return solver(rng, worst_instance); }},
      {6, "presentation soundness", 30, [&] { return presentation(rng); }},
      {7, "quotient orders and structure", 120, quotients},
      {8, "commutator levels", 60, [&] { return commutator_levels(rng); }},
      {9, "negative controls", 60, negative_controls},
  };
  std::cout << "seed " << kAcceptanceSeed << '\n';
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.check(false, [&] { return std::string("uncaught: ") + e.what(); });
    }
    const double secs = seconds_since(t0);
    const bool ok = t.failures == 0 && t.instances > 0 && secs < c.limit;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << t.instances
              << " instances, " << t.failures << " failures, " << secs << "s (limit " << c.limit << "s)";
    if (!t.note.empty()) std::cout << ", " << t.note;
    std::cout << '\n';
    if (t.failures) std::cout << "     first failure: " << t.first << '\n';
    if (secs >= c.limit) std::cout << "     over the time limit\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria FAILED" : std::string("all criteria passed")) << '\n';
  return failed ? 1 : 0;
}
