#include <doctest.h>

#include <random>
#include <set>

#include "ckit/congruence.hpp"
#include "ckit/words.hpp"
#include "oracles.hpp"

using namespace ckit;

namespace {

BigIntMatrix m2(long a, long b, long c, long d) {
  BigIntMatrix x(2, 2);
  x << BigInt(a), BigInt(b), BigInt(c), BigInt(d);
  return x;
}

BigIntMatrix random_member(std::mt19937_64& rng, int n, int d, int len) {
  const GenFamily fam = gen_set(n >= 3 ? FamilyTag::X1 : FamilyTag::X2, n, d);
  std::uniform_int_distribution<std::size_t> pick(0, fam.members.size() - 1);
  std::uniform_int_distribution<int> pw(-2, 2);
  BigIntMatrix x = identity(n);
  for (int t = 0; t < len; ++t) {
    const auto& g = fam.members[pick(rng)];
    x = mat_mul(x, evaluate(word_power(g.word, pw(rng))));
  }
  return x;
}

}  // namespace

TEST_CASE("level") {
  CHECK(level(identity(3)).value == 0);
  CHECK(level(identity(3)).is_identity());
  CHECK(level(identity(3)).divisible_by(7));
  CHECK(level(m2(1, 6, 0, 1)).value == 6);
  CHECK(level(m2(7, 6, 3, 1)).value == 3);
  CHECK(level(m2(-1, 0, 0, -1)).value == 2);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const BigIntMatrix x = random_member(rng, 3, 2 + t % 3, 6);
    CHECK(level(x).value == oracle::level(oracle::from(x)));
  }
}

TEST_CASE("membership") {
  CHECK(is_member(m2(1, 3, 0, 1), 3));
  CHECK_FALSE(is_member(m2(1, 3, 0, 1), 2));
  CHECK(is_member(m2(1, 3, 0, 1), 1));
  CHECK_FALSE(is_member(m2(1, 0, 0, -1), 2));
  CHECK(is_member(m2(1, 0, 0, -1), 2, Variant::GL));
  CHECK_FALSE(is_member(m2(3, 0, 0, 1), 2, Variant::GL));
  CHECK(is_member(m2(1, 2, 2, 5), 2));
}

TEST_CASE("abelianization coordinates") {
  // e12^3 at d = 3 has A(1,2) = 1 and nothing else.
  const AbelCoords a = abelianize(elementary<BigInt>(3, 1, 2, BigInt(3)), 3);
  CHECK(a.offdiag(1, 2) == 1);
  CHECK(a.offdiag(2, 1) == 0);
  CHECK(a.diag(2) == 0);
  CHECK(a.to_vector().size() == 8);
  CHECK(abelianize(identity(3), 2).is_zero());
  CHECK_THROWS_AS(abelianize(elementary<BigInt>(3, 1, 2, BigInt(1)), 2), NotMember);
  CHECK_THROWS_AS(abelianize(identity(3), 1), InvalidModulus);
  CHECK_FALSE(abelianize(m2(1, 2, 0, 1), 2).abelianization_valid());

  std::mt19937_64 rng(5);
  for (auto [n, d] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
    for (int t = 0; t < 60; ++t) {
      const BigIntMatrix x = random_member(rng, n, d, 5), y = random_member(rng, n, d, 5);
      CHECK(abelianize(mat_mul(x, y), d) == abel_add(abelianize(x, d), abelianize(y, d)));
      CHECK(abelianize(x, d).is_zero() == level(x).divisible_by(BigInt(d * d)));
    }
  }
}

TEST_CASE("generator images are unit vectors") {
  for (int n = 3; n <= 4; ++n)
    for (int d = 2; d <= 3; ++d) {
      const GenFamily fam = gen_set(FamilyTag::XWithFk, n, d);
      std::set<std::vector<BigInt>> seen;
      for (const auto& g : fam.members) {
        const auto v = abelianize(evaluate(g.word), d).to_vector();
        int ones = 0, zeros = 0;
        for (const auto& c : v) {
          if (c == 1) ++ones;
          if (c == 0) ++zeros;
        }
        CHECK(ones == 1);
        CHECK(zeros == static_cast<int>(v.size()) - 1);
        seen.insert(v);
      }
      CHECK(seen.size() == static_cast<std::size_t>(n * n - 1));
    }
}

TEST_CASE("determinant forcing: every I + dA in SL has a trace-free A mod d") {
  // Exhaustive over 3x3 perturbations A with entries in {-1, 0, 1}, d = 3..5:
  // det(I + dA) = 1 implies d | tr A, so abelianize never trips its invariant.
  for (int d = 3; d <= 5; ++d) {
    int members = 0;
    std::vector<int> a(9, -1);
    for (;;) {
      BigIntMatrix x(3, 3);
      for (int k = 0; k < 9; ++k) x(k / 3, k % 3) = BigInt((k / 3 == k % 3 ? 1 : 0) + d * a[k]);
      if (mat_det(x) == 1) {
        ++members;
        const int tr = a[0] + a[4] + a[8];
        CHECK(tr % d == 0);
        CHECK_NOTHROW(abelianize(x, d));
      }
      int p = 0;
      while (p < 9 && a[p] == 1) a[p++] = -1;
      if (p == 9) break;
      ++a[p];
    }
    CHECK(members > 0);
  }
}

TEST_CASE("commutator levels") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const int d1 = 2 + t % 2, d2 = 2 + (t / 2) % 2;
    const BigIntMatrix x = random_member(rng, 3, d1, 4), y = random_member(rng, 3, d2, 4);
    const BigIntMatrix c = commutator(x, y);
    CHECK(oracle::equal(oracle::mul(oracle::mul(oracle::from(x), oracle::from(y)),
                                    oracle::mul(oracle::from(mat_inv(x)), oracle::from(mat_inv(y)))),
                        c));
    CHECK(level(c).divisible_by(BigInt(d1 * d2)));
  }
}
