#include "ckit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "ckit/congruence.hpp"
#include "ckit/presentation.hpp"
#include "ckit/quotients.hpp"
#include "ckit/rewriter.hpp"
#include "ckit/wordsolve2.hpp"

namespace ckit {

namespace {

using Clock = std::chrono::steady_clock;

class Tally {
 public:
  Tally(std::string id, std::string about) : start_(Clock::now()) {
    r_.id = std::move(id);
    r_.about = std::move(about);
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.instances;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = describe();
  }

  // Runs f; any library error counts as a failure of this instance.
  void guard(const std::function<bool()>& f, const std::function<std::string()>& describe) {
    try {
      check(f(), describe);
    } catch (const Error& e) {
      check(false, [&] { return describe() + ": " + e.what(); });
    }
  }

  CheckResult done() {
    r_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return r_;
  }

 private:
  CheckResult r_;
  Clock::time_point start_;
};

std::string idx(std::initializer_list<long> v) {
  std::string out = "(";
  for (long x : v) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + ")";
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Word e(int n, std::initializer_list<Elem> atoms) {
  Word w(n);
  for (const auto& a : atoms) w.append(Atom{a});
  return w;
}

bool same(const BigIntMatrix& a, const BigIntMatrix& b) { return a.rows() == b.rows() && a == b; }

}  // namespace

GenWord random_family_word(const GenFamily& fam, int length, Rng& rng, int max_power) {
  GenWord w(fam.n);
  for (int t = 0; t < length; ++t) {
    const auto& mem = fam.members[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fam.members.size()) - 1))];
    int p = uniform(rng, 1, max_power);
    if (uniform(rng, 0, 1)) p = -p;
    w.push(mem.label, mem.word, p);
  }
  return w;
}

BigIntMatrix random_sl2(Rng& rng, const BigInt& bound) {
  BigIntMatrix g = identity(2);
  for (int t = 0; t < 64; ++t) {
    const int i = uniform(rng, 0, 1) ? 1 : 2;
    const int s = uniform(rng, -9, 9);
    const BigIntMatrix next = mat_mul(g, elementary<BigInt>(2, i, 3 - i, BigInt(s)));
    if (next.cwiseAbs().maxCoeff() > bound) break;
    g = next;
  }
  return g;
}

Word random_gamma2hat_word(int n, int max_length, Rng& rng) {
  Word w(n);
  const int len = uniform(rng, 0, max_length);
  int flips = 0;
  for (int t = 0; t < len; ++t) {
    if (uniform(rng, 0, 3) == 0) {
      w.append(Atom{Flip{uniform(rng, 1, n)}});
      ++flips;
    } else {
      int i = uniform(rng, 1, n), j = uniform(rng, 1, n - 1);
      if (j >= i) ++j;
      w.append(Atom{Elem{i, j, uniform(rng, 0, 1) ? 2 : -2}});
    }
  }
  if (flips % 2) w.append(Atom{Flip{uniform(rng, 1, n)}});
  return w;
}

std::vector<CheckResult> check_relations(int n_min, int n_max, int s_max) {
  Tally ik("relations.commute-row", "e_ij^s commutes with e_ik^t");
  Tally kj("relations.commute-column", "e_ij^s commutes with e_kj^t");
  Tally kl("relations.commute-disjoint", "e_ij^s commutes with e_kl^t");
  Tally jk("relations.chain", "e_ij^s e_jk^t = e_jk^t e_ij^s e_ik^st");
  Tally sw("relations.swap-conjugate", "e_ji e_ij^s e_ji^-1 = e_ij e_ji^-s e_ij^-1");
  for (int n = n_min; n <= n_max; ++n) {
    const BigIntMatrix id = identity(n);
    for (int s = -s_max; s <= s_max; ++s) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          sw.check(same(evaluate(e(n, {{j, i, 1}, {i, j, s}, {j, i, -1}})),
                        evaluate(e(n, {{i, j, 1}, {j, i, -s}, {i, j, -1}}))),
                   [&] { return "n=" + std::to_string(n) + " " + idx({i, j, s}); });
          for (int k = 1; k <= n; ++k) {
            if (k == i || k == j) continue;
            for (int t = -s_max; t <= s_max; ++t) {
              auto at = [&] { return "n=" + std::to_string(n) + " " + idx({i, j, k, s, t}); };
              ik.check(same(evaluate(e(n, {{i, j, s}, {i, k, t}, {i, j, -s}, {i, k, -t}})), id), at);
              kj.check(same(evaluate(e(n, {{i, j, s}, {k, j, t}, {i, j, -s}, {k, j, -t}})), id), at);
              jk.check(same(evaluate(e(n, {{i, j, s}, {j, k, t}})), evaluate(e(n, {{j, k, t}, {i, j, s}, {i, k, s * t}}))),
                       at);
              for (int l = 1; l <= n; ++l) {
                if (l == i || l == j || l == k) continue;
                kl.check(same(evaluate(e(n, {{i, j, s}, {k, l, t}, {i, j, -s}, {k, l, -t}})), id),
                         [&] { return "n=" + std::to_string(n) + " " + idx({i, j, k, l, s, t}); });
              }
            }
          }
        }
    }
  }
  return {ik.done(), kj.done(), kl.done(), jk.done(), sw.done()};
}

std::vector<CheckResult> check_identities(int n_max, int d_max, int m_max) {
  Tally md("identities.conjugate-expansion", "two expansions of e_ji^m e_ij^d e_ji^-m through an auxiliary index");
  Tally sq("identities.shifted-conjugates", "X2 words for e_ji^2 e_ij^d e_ji^-2 and e_ji^-1 e_ij^d e_ji");
  Tally cj("identities.conjugation-closure", "conjugating X2 members by e_i'j'^+-1 stays in the X2 closure");
  Tally fl("identities.flatten-x2", "flattened conjugation words keep their value and use X2 only");
  Tally x1("identities.x2-to-x1", "X2 members rewritten over X1");
  for (int n = 3; n <= n_max; ++n) {
    for (int d = 1; d <= d_max; ++d) {
      const BigInt bd(d);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          for (int k = 1; k <= n; ++k) {
            if (k == i || k == j) continue;
            auto at = [&] { return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " " + idx({i, j, k}); };
            for (int m = -m_max; m <= m_max; ++m) {
              const BigIntMatrix target = evaluate(word_conj(n, j, i, m, bd));
              for (int variant = 1; variant <= 2; ++variant)
                md.guard([&] { return same(evaluate(md_m_word(variant, n, bd, m, i, j, k)), target); },
                         [&] { return at() + " m=" + std::to_string(m) + " variant " + std::to_string(variant); });
            }
            sq.guard([&] {
              return same(evaluate(lemma_2d2_word(ShiftCase::Square, n, bd, i, j, k)),
                          evaluate(word_conj(n, j, i, 2, bd)));
            }, [&] { return at() + " square"; });
            sq.guard([&] {
              return same(evaluate(lemma_2d2_word(ShiftCase::Inverse, n, bd, i, j, k)),
                          evaluate(word_conj(n, j, i, -1, bd)));
            }, [&] { return at() + " inverse"; });
          }
          x1.guard([&] {
            const ConjWord w = x2_to_x1_word(i, j, n, bd);
            return is_x1_alphabet(w) && same(evaluate(w), evaluate(word_conj(n, j, i, 1, bd)));
          }, [&] { return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " " + idx({i, j}); });

          if (n > 4) continue;
          for (int m = 0; m <= 1; ++m)
            for (int i2 = 1; i2 <= n; ++i2)
              for (int j2 = 1; j2 <= n; ++j2) {
                if (i2 == j2) continue;
                for (int eps : {1, -1}) {
                  auto at = [&] {
                    return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " m=" + std::to_string(m) + " " +
                           idx({i, j, i2, j2, eps});
                  };
                  const BigIntMatrix target = conjugate_target(m, i, j, i2, j2, eps, n, bd);
                  ConjWord w(n, bd);
                  cj.guard([&] {
                    w = conjugate_rewrite(m, i, j, i2, j2, eps, n, bd);
                    for (const auto& f : w.factors())
                      if (f.p < -1 || f.p > 2) return false;
                    return same(evaluate(w), target);
                  }, at);
                  fl.guard([&] {
                    const ConjWord flat = flatten_to_x2(w);
                    return is_x2_alphabet(flat) && same(evaluate(flat), target);
                  }, at);
                }
              }
        }
    }
  }
  return {md.done(), sq.done(), cj.done(), fl.done(), x1.done()};
}

std::vector<CheckResult> check_abelianization(Rng& rng, int samples) {
  Tally hom("abelianization.homomorphism", "coordinates of XY are the sums of the coordinates of X and Y");
  Tally ker("abelianization.kernel", "coordinates vanish exactly when d^2 divides the level");
  Tally gen("abelianization.generator-images", "X_with_fk members map to distinct unit vectors");
  const std::pair<int, int> cases[] = {{3, 2}, {3, 3}, {4, 2}};
  for (auto [n, d] : cases) {
    const BigInt bd(d);
    const GenFamily x1 = gen_set(FamilyTag::X1, n, d);
    const GenFamily x1sq = gen_set(FamilyTag::X1, n, d * d);
    auto tag = [n = n, d = d](int t) { return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " #" + std::to_string(t); };
    for (int t = 0; t < samples; ++t) {
      const BigIntMatrix x = evaluate(random_family_word(x1, uniform(rng, 1, 6), rng));
      const BigIntMatrix y = evaluate(random_family_word(x1, uniform(rng, 1, 6), rng));
      hom.guard([&] { return abelianize(mat_mul(x, y), bd) == abel_add(abelianize(x, bd), abelianize(y, bd)); },
                [&] { return tag(t); });
      // Alternate plain samples with kernel elements: X1(d^2) words times a commutator.
      BigIntMatrix z = x;
      if (t % 2) z = mat_mul(evaluate(random_family_word(x1sq, uniform(rng, 0, 4), rng)), commutator(x, y));
      ker.guard([&] { return abelianize(z, bd).is_zero() == level(z).divisible_by(bd * bd); }, [&] { return tag(t); });
    }
    const GenFamily fk = gen_set(FamilyTag::XWithFk, n, d);
    std::set<std::size_t> hit;
    bool units = true;
    for (const auto& mem : fk.members) {
      const auto v = abelianize(evaluate(mem.word), bd).to_vector();
      std::size_t ones = 0, pos = 0;
      for (std::size_t s = 0; s < v.size(); ++s) {
        if (v[s] == 1) ++ones, pos = s;
        else if (v[s] != 0) units = false;
      }
      units = units && ones == 1;
      hit.insert(pos);
    }
    gen.check(units && hit.size() == static_cast<std::size_t>(n * n - 1), [&] { return tag(0); });
  }
  return {hom.done(), ker.done(), gen.done()};
}

std::vector<CheckResult> check_solver(Rng& rng, int per_d) {
  Tally snd("solver.soundness", "decompose2 words re-evaluate to the input");
  Tally alpha("solver.alphabet", "decompose2 words use only labelled solver generators");
  Tally fast("solver.instance-time", "each decomposition finishes within one second");
  const BigInt bound(1000000);
  for (int d = 3; d <= 6; ++d) {
    const GenFamily fam = gen_set(FamilyTag::Solver, 2, d);
    for (int t = 0; t < per_d; ++t) {
      BigIntMatrix a;
      if (t % 2 == 0) {
        a = evaluate(random_family_word(fam, uniform(rng, 1, 12), rng, 3));
      } else {
        const BigIntMatrix g = random_sl2(rng, bound);
        const int i = uniform(rng, 1, 2);
        a = mat_mul(mat_mul(g, elementary<BigInt>(2, i, 3 - i, BigInt(d))), mat_inv(g));
      }
      auto at = [&] { return "d=" + std::to_string(d) + " #" + std::to_string(t); };
      const auto t0 = Clock::now();
      Decomposition dec{GenWord(2), {}};
      bool ran = false;
      snd.guard([&] {
        dec = decompose2(a, d);
        ran = true;
        return same(evaluate(dec.word), a);
      }, at);
      fast.check(std::chrono::duration<double>(Clock::now() - t0).count() < 1.0, at);
      alpha.check(ran && uses_family_alphabet(dec.word, fam), at);
    }
  }
  return {snd.done(), alpha.done(), fast.done()};
}

std::vector<CheckResult> check_presentation(Rng& rng, int rewrite_samples) {
  Tally gh("presentation.gl-relators", "every GL relator evaluates to I for n = 2..5");
  Tally sl("presentation.sl-relators", "every SL relator evaluates to I for n = 2..5");
  Tally rw("presentation.rewrite", "Schreier rewriting preserves the value and lands in {E_ij, F_1k}");
  Tally dr("presentation.derived-relator", "the derived hexagon relator is a conjugate of the i<j<k one");
  for (int n = 2; n <= 5; ++n) {
    const RelatorReport a = verify_relators(relators_gamma2hat(n));
    for (bool ok : a.ok) gh.check(ok, [&] { return "n=" + std::to_string(n) + " " + a.failures.front(); });
    const RelatorReport b = verify_relators(relators_gamma2(n));
    for (bool ok : b.ok) sl.check(ok, [&] { return "n=" + std::to_string(n) + " " + b.failures.front(); });
  }
  for (int t = 0; t < rewrite_samples; ++t) {
    const int n = uniform(rng, 2, 5);
    const Word w = random_gamma2hat_word(n, 40, rng);
    rw.guard([&] {
      const GenWord g = rs_rewrite(w);
      for (const auto& s : g.syllables())
        if (s.label.rfind("E(", 0) != 0 && s.label.rfind("F(1,", 0) != 0) return false;
      return same(evaluate(g), evaluate(w));
    }, [&] { return to_text(w); });
  }
  for (int n = 3; n <= 5; ++n)
    for (int j = 2; j <= n; ++j)
      for (int k = 2; k <= n; ++k) {
        if (j == k) continue;
        const auto [lhs, rhs] = derived_relator_sides(n, j, k);
        dr.check(same(evaluate(lhs), evaluate(rhs)), [&] { return "n=" + std::to_string(n) + " " + idx({j, k}); });
      }
  return {gh.done(), sl.done(), rw.done(), dr.done()};
}

std::vector<CheckResult> check_quotients() {
  Tally ord("quotients.orders", "image orders match the closed-form SL(n, Z/m) counts");
  Tally cl("quotients.claims", "quotient claims for (3,2,4), (3,3,9), (3,2,3), (2,2,3)");
  const std::tuple<int, int, int> orders[] = {{3, 1, 2}, {3, 1, 3}, {2, 1, 6}, {2, 1, 4}, {2, 2, 4}, {2, 3, 9}};
  for (auto [n, l, m] : orders) {
    ord.guard([&] {
      return BigInt(enumerate_image(n, l, m).order()) == sl_order(n, m) / sl_order(n, l);
    }, [&] { return idx({n, l, m}); });
  }
  const std::tuple<int, int, int> claims[] = {{3, 2, 4}, {3, 3, 9}, {3, 2, 3}, {2, 2, 3}};
  for (auto [n, l, m] : claims) {
    const QuotientReport rep = verify_quotient_claims(n, l, m);
    for (const auto& c : rep.claims)
      if (c.asserted) cl.check(c.passed, [&] { return idx({n, l, m}) + " " + c.id + ": " + c.detail; });
  }
  return {ord.done(), cl.done()};
}

std::vector<CheckResult> check_commutator_levels(Rng& rng, int samples, int n2_samples) {
  Tally lv("commutators.level", "d1 d2 divides the level of [X, Y] for X in G_d1(3), Y in G_d2(3)");
  Tally n2("commutators.level6-decompose", "[X, Y] with X in GL-Gamma_2(2), Y in Gamma_3(2) decomposes at level 6");
  for (int t = 0; t < samples; ++t) {
    const int d1 = uniform(rng, 2, 3), d2 = uniform(rng, 2, 3);
    const BigIntMatrix x = evaluate(random_family_word(gen_set(FamilyTag::X1, 3, d1), uniform(rng, 1, 5), rng));
    const BigIntMatrix y = evaluate(random_family_word(gen_set(FamilyTag::X1, 3, d2), uniform(rng, 1, 5), rng));
    lv.check(level(commutator(x, y)).divisible_by(BigInt(d1 * d2)),
             [&] { return "d1=" + std::to_string(d1) + " d2=" + std::to_string(d2) + " #" + std::to_string(t); });
  }
  const GenFamily hat = gen_set(FamilyTag::Gamma2Hat, 2, 2);
  const GenFamily three = gen_set(FamilyTag::Solver, 2, 3);
  for (int t = 0; t < n2_samples; ++t) {
    const BigIntMatrix x = evaluate(random_family_word(hat, uniform(rng, 1, 5), rng));
    const BigIntMatrix y = evaluate(random_family_word(three, uniform(rng, 1, 4), rng));
    const BigIntMatrix c = commutator(x, y);
    n2.guard([&] { return same(evaluate(decompose2(c, 6).word), c); }, [&] { return "#" + std::to_string(t); });
  }
  return {lv.done(), n2.done()};
}

std::vector<CheckResult> check_negative_controls() {
  Tally nc("negative-controls", "corrupted or out-of-domain inputs raise the designated errors");
  auto expect = [&](const std::string& what, auto&& f, auto tag) {
    bool hit = false;
    try {
      f();
    } catch (const decltype(tag)&) {
      hit = true;
    } catch (const Error&) {
    }
    nc.check(hit, [&] { return what; });
  };
  expect("corrupted relator", [] {
    auto rs = relators_gamma2(3);
    rs.front().word.push("e(1,2)", Word(3, {Elem{1, 2, 1}}), 1);
    verify_relators(rs).require();
  }, RelatorFailure(""));
  expect("non-member abelianize", [] { abelianize(elementary<BigInt>(3, 1, 2, BigInt(2)), BigInt(4)); }, NotMember(""));
  expect("non-member decompose2", [] { decompose2(elementary<BigInt>(2, 1, 2, BigInt(1)), 3); }, NotMember(""));
  expect("level-7 solver", [] { decompose2(elementary<BigInt>(2, 1, 2, BigInt(7)), 7); }, Unsupported(""));
  expect("level-7 generators", [] { gen_set(FamilyTag::Solver, 2, 7); }, Unsupported(""));
  expect("singular inverse", [] { mat_inv(BigIntMatrix(BigIntMatrix::Zero(2, 2))); }, NotUnimodular(""));
  return {nc.done()};
}

std::vector<CheckResult> selftest(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckResult> all;
  auto add = [&](std::vector<CheckResult> v) { all.insert(all.end(), v.begin(), v.end()); };
  add(check_relations());
  add(check_identities());
  add(check_abelianization(rng));
  add(check_solver(rng));
  add(check_presentation(rng));
  add(check_quotients());
  add(check_commutator_levels(rng));
  add(check_negative_controls());
  std::sort(all.begin(), all.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return all;
}

}  // namespace ckit
