#include "ckit/quotients.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "ckit/words.hpp"

namespace ckit {

namespace {

std::vector<std::int64_t> prime_divisors(std::int64_t x) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    ps.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) ps.push_back(x);
  return ps;
}

// Flat row-major residue arithmetic for the BFS inner loop; keys match
// ResidueMatrix::key byte for byte.
struct Packer {
  int n;
  std::int64_t m;
  int width;

  void decode(const std::string& key, std::vector<std::int64_t>& out) const {
    out.resize(static_cast<std::size_t>(n * n));
    std::size_t pos = 0;
    for (auto& v : out) {
      std::uint64_t x = 0;
      for (int b = 0; b < width; ++b) x = (x << 8) | static_cast<unsigned char>(key[pos++]);
      v = static_cast<std::int64_t>(x);
    }
  }

  std::string encode(const std::vector<std::int64_t>& v) const {
    std::string out;
    out.reserve(v.size() * static_cast<std::size_t>(width));
    for (auto e : v) {
      auto x = static_cast<std::uint64_t>(e);
      for (int b = width - 1; b >= 0; --b) out.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
    }
    return out;
  }

  void mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::vector<std::int64_t>& c) const {
    c.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const std::int64_t aik = a[i * n + k];
        if (aik == 0) continue;
        for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
      }
    for (auto& x : c) x %= m;
  }
};

std::vector<std::int64_t> flat(const ResidueMatrix& x) {
  std::vector<std::int64_t> v;
  for (int r = 0; r < x.n(); ++r)
    for (int c = 0; c < x.n(); ++c) v.push_back(x(r, c));
  return v;
}

ResidueMatrix residue_inverse(const ResidueMatrix& x) {
  // x has finite order, so x^-1 = x^(ord - 1).
  const std::int64_t ord = element_order(x);
  ResidueMatrix out = ResidueMatrix::identity(x.n(), x.modulus());
  for (std::int64_t t = 1; t < ord; ++t) out = out * x;
  return out;
}

}  // namespace

std::size_t default_budget() {
  if (const char* env = std::getenv("CONGRUENCE_KIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

BigInt sl_order(int n, std::int64_t m) {
  if (n < 1) throw InvalidIndex("sl_order: n must be >= 1");
  if (m < 1) throw InvalidModulus("sl_order: m must be >= 1");
  if (m == 1) return 1;
  // m^(n^2-1) prod_p prod_k (p^k - 1) / p^k
  BigInt num = 1, den = 1;
  for (int t = 0; t < n * n - 1; ++t) num *= m;
  for (std::int64_t p : prime_divisors(m)) {
    BigInt pk = p;
    for (int k = 2; k <= n; ++k) {
      pk *= p;
      num *= pk - 1;
      den *= pk;
    }
  }
  return num / den;
}

GroupTable::GroupTable(int n, std::int64_t m, std::vector<std::pair<std::string, ResidueMatrix>> generators,
                       std::vector<std::string> keys, std::unordered_map<std::string, std::size_t> index)
    : n_(n), m_(m), generators_(std::move(generators)), keys_(std::move(keys)), index_(std::move(index)) {
  if (index_.size() == keys_.size()) return;
  index_.clear();
  index_.reserve(keys_.size());
  for (std::size_t t = 0; t < keys_.size(); ++t) index_.emplace(keys_[t], t);
}

ResidueMatrix GroupTable::element(std::size_t idx) const { return ResidueMatrix::from_key(keys_.at(idx), n_, m_); }

bool GroupTable::contains(const ResidueMatrix& x) const {
  return x.n() == n_ && x.modulus() == m_ && index_.count(x.key()) > 0;
}

GroupTable close_group(int n, std::int64_t m, std::vector<std::pair<std::string, ResidueMatrix>> generators,
                       std::size_t budget) {
  if (m < 2) throw InvalidModulus("close_group: modulus must be >= 2");
  const Packer pk{n, m, ResidueMatrix::entry_width(m)};

  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& [label, g] : generators) {
    if (g.n() != n || g.modulus() != m) throw DimensionMismatch("close_group: generator " + label + " has wrong shape");
    if (residue_det(g) != 1 % m) throw InvariantViolation("close_group: generator " + label + " has det != 1");
    gens.push_back(flat(g));
    gens.push_back(flat(residue_inverse(g)));
  }

  std::vector<std::string> keys;
  std::unordered_map<std::string, std::size_t> seen;
  const std::string id = ResidueMatrix::identity(n, m).key();
  keys.push_back(id);
  seen.emplace(id, 0);

  std::vector<std::int64_t> cur, next;
  for (std::size_t head = 0; head < keys.size(); ++head) {
    pk.decode(keys[head], cur);
    for (const auto& g : gens) {
      pk.mul(cur, g, next);
      std::string k = pk.encode(next);
      if (seen.count(k)) continue;
      if (keys.size() >= budget)
        throw BudgetExceeded("close_group: more than " + std::to_string(budget) + " elements");
      seen.emplace(k, keys.size());
      keys.push_back(std::move(k));
    }
  }
  return GroupTable(n, m, std::move(generators), std::move(keys), std::move(seen));
}

std::vector<std::pair<std::string, ResidueMatrix>> quotient_generators(int n, std::int64_t l, std::int64_t m) {
  if (n < 2) throw InvalidIndex("quotient generators need n >= 2");
  if (l < 1 || m < 2) throw InvalidModulus("quotient generators need l >= 1 and m >= 2");
  std::vector<std::pair<std::string, ResidueMatrix>> out;
  if (l == 1) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j)
          out.emplace_back("e(" + std::to_string(i) + "," + std::to_string(j) + ")",
                           mat_mod(elementary<BigInt>(n, i, j, BigInt(1)), m));
    return out;
  }
  FamilyTag tag;
  if (n >= 3) {
    tag = FamilyTag::X1;
  } else if (l == 2) {
    tag = FamilyTag::Gamma2;
  } else if (l <= 6) {
    tag = FamilyTag::Solver;
  } else {
    throw Unsupported("no generating set for Gamma_" + std::to_string(l) + "(2)");
  }
  for (const auto& mem : gen_set(tag, n, static_cast<int>(l)).members)
    out.emplace_back(mem.label, mat_mod(evaluate(mem.word), m));
  return out;
}

GroupTable enumerate_image(int n, std::int64_t l, std::int64_t m, std::size_t budget) {
  if (l < 1 || m < 2 || m % l != 0) throw InvalidModulus("enumerate_image: need l | m and m >= 2");
  const BigInt projected = sl_order(n, m) / sl_order(n, l);
  if (projected > budget)
    throw BudgetExceeded("enumerate_image: projected order " + projected.str() + " exceeds budget " +
                         std::to_string(budget));
  return close_group(n, m, quotient_generators(n, l, m), budget);
}

std::int64_t element_order(const ResidueMatrix& x) {
  const ResidueMatrix id = ResidueMatrix::identity(x.n(), x.modulus());
  ResidueMatrix p = x;
  std::int64_t k = 1;
  while (!(p == id)) {
    p = p * x;
    ++k;
  }
  return k;
}

std::map<std::int64_t, std::size_t> order_census(const GroupTable& t) {
  std::map<std::int64_t, std::size_t> census;
  for (std::size_t i = 0; i < t.order(); ++i) ++census[element_order(t.element(i))];
  return census;
}

bool is_abelian(const GroupTable& t) {
  const auto& g = t.generators();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (!(g[a].second * g[b].second == g[b].second * g[a].second)) return false;
  return true;
}

AbelianStructure abelian_structure(const GroupTable& t) {
  if (!is_abelian(t)) throw NotAbelian("abelian_structure: generators do not commute");
  const auto census = order_census(t);
  const auto order = static_cast<std::int64_t>(t.order());

  // Per prime p: N_k = #{x : x^(p^k) = 1} = p^(sum_i min(k, a_i)), so
  // log_p(N_k / N_{k-1}) counts the cyclic p-factors of exponent >= k.
  std::vector<std::vector<std::int64_t>> per_prime;  // prime-power factors, descending
  for (std::int64_t p : prime_divisors(order)) {
    std::vector<int> at_least;  // at_least[k-1] = #{i : a_i >= k}
    std::size_t prev = 1;
    for (std::int64_t pk = p;; pk *= p) {
      std::size_t nk = 0;
      for (const auto& [o, c] : census)
        if (pk % o == 0) nk += c;
      std::size_t ratio = nk / prev;
      int r = 0;
      while (ratio > 1) {
        ratio /= static_cast<std::size_t>(p);
        ++r;
      }
      if (r == 0) break;
      at_least.push_back(r);
      prev = nk;
    }
    std::vector<std::int64_t> powers;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      std::int64_t q = 1;
      for (std::size_t e = 0; e <= k; ++e) q *= p;
      for (int c = 0; c < exact; ++c) powers.push_back(q);
    }
    std::sort(powers.rbegin(), powers.rend());
    per_prime.push_back(std::move(powers));
  }

  std::size_t len = 0;
  for (const auto& v : per_prime) len = std::max(len, v.size());
  AbelianStructure out;
  out.factors.assign(len, 1);
  // Largest factor collects the largest power of every prime, and so on down.
  for (const auto& v : per_prime)
    for (std::size_t i = 0; i < v.size(); ++i) out.factors[len - 1 - i] *= v[i];

  std::int64_t prod = 1;
  for (auto f : out.factors) prod *= f;
  if (prod != order) throw InvariantViolation("abelian_structure: factors do not multiply to the order");
  return out;
}

bool QuotientReport::all_ok() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return !c.asserted || c.passed; });
}

namespace {

struct Side {
  std::size_t order = 1;
  std::map<std::int64_t, std::size_t> census{{1, 1}};
};

// Gamma_a / Gamma_b for a | b; trivial when a == b.
Side quotient_side(int n, std::int64_t a, std::int64_t b, std::size_t budget, bool with_census) {
  Side s;
  if (a == b) return s;
  const GroupTable t = enumerate_image(n, a, b, budget);
  s.order = t.order();
  if (with_census) s.census = order_census(t);
  return s;
}

std::string census_text(const std::map<std::int64_t, std::size_t>& c) {
  std::string out;
  for (const auto& [o, k] : c) out += (out.empty() ? "" : " ") + std::to_string(o) + ":" + std::to_string(k);
  return out;
}

std::string factors_text(const std::vector<std::int64_t>& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + "]";
}

}  // namespace

QuotientReport verify_quotient_claims(int n, std::int64_t l, std::int64_t m, std::size_t budget) {
  if (n < 2) throw InvalidIndex("verify_quotient_claims: n must be >= 2");
  if (l < 1 || m < 1) throw InvalidModulus("verify_quotient_claims: l, m must be >= 1");
  QuotientReport rep{n, l, m, {}};
  const bool in_range = n >= 3;
  const std::int64_t g = std::gcd(l, m);
  const std::int64_t L = std::lcm(l, m);
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> orders;
  auto order_of = [&](std::int64_t a, std::int64_t b) {
    auto it = orders.find({a, b});
    if (it == orders.end()) it = orders.emplace(std::make_pair(a, b), quotient_side(n, a, b, budget, false).order).first;
    return it->second;
  };

  {
    const Side a = quotient_side(n, g, m, budget, true);
    const Side b = quotient_side(n, l, L, budget, true);
    orders[{g, m}] = a.order;
    orders[{l, L}] = b.order;
    ClaimCheck c{"swap", in_range, a.order == b.order && a.census == b.census, ""};
    c.detail = "|G" + std::to_string(g) + "/G" + std::to_string(m) + "|=" + std::to_string(a.order) + " |G" +
               std::to_string(l) + "/G" + std::to_string(L) + "|=" + std::to_string(b.order) + " census " +
               census_text(a.census) + (a.census == b.census ? " == " : " != ") + census_text(b.census);
    rep.claims.push_back(std::move(c));
  }
  {
    const std::size_t whole = order_of(g, L);
    const std::size_t left = order_of(g, l);
    const std::size_t right = order_of(g, m);
    ClaimCheck c{"product", in_range, whole == left * right, ""};
    c.detail = std::to_string(whole) + " vs " + std::to_string(left) + "*" + std::to_string(right);
    rep.claims.push_back(std::move(c));
  }
  if (L >= 2) {
    auto gens = quotient_generators(n, l, L);
    for (auto& x : quotient_generators(n, m, L)) gens.push_back(std::move(x));
    const std::size_t joined = close_group(n, L, std::move(gens), budget).order();
    const std::size_t target = order_of(g, L);
    ClaimCheck c{"subgroup", in_range, joined == target, ""};
    c.detail = "<G" + std::to_string(l) + ",G" + std::to_string(m) + "> mod " + std::to_string(L) + " has order " +
               std::to_string(joined) + ", G" + std::to_string(g) + " image " + std::to_string(target);
    rep.claims.push_back(std::move(c));
  }
  if (m % l == 0 && (l * l) % m == 0) {
    std::vector<std::int64_t> expect;
    if (m / l > 1) expect.assign(static_cast<std::size_t>(n * n - 1), m / l);
    ClaimCheck c{"abelian", in_range, false, ""};
    if (l == m) {
      c.passed = true;
      c.detail = "trivial quotient";
    } else {
      const GroupTable t = enumerate_image(n, l, m, budget);
      if (!is_abelian(t)) {
        c.detail = "not abelian, order " + std::to_string(t.order());
      } else {
        const auto got = abelian_structure(t).factors;
        c.passed = got == expect;
        c.detail = "order " + std::to_string(t.order()) + " factors " + factors_text(got) + " expected " +
                   factors_text(expect);
      }
    }
    rep.claims.push_back(std::move(c));
  }
  if (g == 1 && l * m >= 2) {
    const std::size_t whole = order_of(1, l * m);
    const std::size_t left = order_of(1, l);
    const std::size_t right = order_of(1, m);
    const BigInt formula = sl_order(n, l * m);
    ClaimCheck c{"crt", true, whole == left * right && formula == whole, ""};
    c.detail = "|SL(" + std::to_string(n) + ",Z/" + std::to_string(l * m) + ")|=" + std::to_string(whole) + " vs " +
               std::to_string(left) + "*" + std::to_string(right) + ", formula " + formula.str();
    rep.claims.push_back(std::move(c));
  }
  return rep;
}

}  // namespace ckit
