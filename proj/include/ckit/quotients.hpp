#pragma once

// Finite quotients Gamma_l(n)/Gamma_m(n), realized as the image of Gamma_l(n)
// in SL(n; Z/mZ) and enumerated by breadth-first closure.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ckit/exactmat.hpp"

namespace ckit {

constexpr std::size_t kDefaultBudget = std::size_t{1} << 20;

/// Element budget: CONGRUENCE_KIT_BUDGET if set and positive, else 2^20.
std::size_t default_budget();

/// |SL(n; Z/mZ)| = m^(n^2-1) prod_{p | m} prod_{k=2..n} (1 - p^-k); 1 for m = 1.
BigInt sl_order(int n, std::int64_t m);

class GroupTable {
 public:
  GroupTable(int n, std::int64_t m, std::vector<std::pair<std::string, ResidueMatrix>> generators,
             std::vector<std::string> keys, std::unordered_map<std::string, std::size_t> index = {});

  int n() const { return n_; }
  std::int64_t modulus() const { return m_; }
  std::size_t order() const { return keys_.size(); }
  const std::vector<std::pair<std::string, ResidueMatrix>>& generators() const { return generators_; }

  /// Elements in discovery order; element(0) is the identity.
  ResidueMatrix element(std::size_t idx) const;
  const std::string& key(std::size_t idx) const { return keys_[idx]; }
  bool contains(const ResidueMatrix& x) const;

 private:
  int n_;
  std::int64_t m_;
  std::vector<std::pair<std::string, ResidueMatrix>> generators_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// BFS closure of the given generators and their inverses inside SL(n; Z/mZ).
GroupTable close_group(int n, std::int64_t m, std::vector<std::pair<std::string, ResidueMatrix>> generators,
                       std::size_t budget);

/// Labelled generators of Gamma_l(n) reduced mod m:
///   l = 1: e_ij;  n >= 3: X1(l);  n = 2, l = 2: E_ij, F_12;  n = 2, l in 3..6: solver set.
std::vector<std::pair<std::string, ResidueMatrix>> quotient_generators(int n, std::int64_t l, std::int64_t m);

/// Image of Gamma_l(n) in SL(n; Z/mZ). Requires l | m and m >= 2. Throws
/// BudgetExceeded before enumerating when the projected order is too large.
GroupTable enumerate_image(int n, std::int64_t l, std::int64_t m, std::size_t budget = default_budget());

std::int64_t element_order(const ResidueMatrix& x);

/// element order -> number of elements of that order
std::map<std::int64_t, std::size_t> order_census(const GroupTable& t);

/// True when the generators pairwise commute.
bool is_abelian(const GroupTable& t);

struct AbelianStructure {
  std::vector<std::int64_t> factors;  // d1 | d2 | ... ; empty for the trivial group
};

/// Invariant factors from the order census. Throws NotAbelian.
AbelianStructure abelian_structure(const GroupTable& t);

struct ClaimCheck {
  std::string id;
  bool asserted = true;  // false: reported as data only
  bool passed = true;
  std::string detail;
};

struct QuotientReport {
  int n = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::vector<ClaimCheck> claims;

  bool all_ok() const;
};

/// Checks the quotient isomorphism claims that apply to (n, l, m):
///   swap:      |G_gcd/G_m| = |G_l/G_lcm| with equal order census
///   product:   |G_gcd/G_lcm| = |G_gcd/G_l| |G_gcd/G_m|
///   subgroup:  images of G_l and G_m together generate G_gcd mod lcm
///   abelian:   for l | m | l^2, abelian with invariant factors (m/l)^(n^2-1)
///   crt:       for coprime l, m, |SL(n; Z/lm)| = |SL(n; Z/l)| |SL(n; Z/m)|
/// Claims for n = 2 are collected as data and never asserted.
QuotientReport verify_quotient_claims(int n, std::int64_t l, std::int64_t m, std::size_t budget = default_budget());

}  // namespace ckit
