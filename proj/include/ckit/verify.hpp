#pragma once

// Batch check suites behind the CLI's verify-* and selftest commands.
// Every randomized suite draws from a seeded std::mt19937_64.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ckit/words.hpp"

namespace ckit {

using Rng = std::mt19937_64;

constexpr std::uint64_t kDefaultSeed = 20240531;

struct CheckResult {
  std::string id;
  std::string about;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

/// Random word of `length` syllables over the family, each raised to a
/// nonzero power in [-max_power, max_power].
GenWord random_family_word(const GenFamily& fam, int length, Rng& rng, int max_power = 2);

/// Random SL(2, Z) matrix as a product of e12^a e21^b blocks whose entries
/// stay at or below `bound` in absolute value.
BigIntMatrix random_sl2(Rng& rng, const BigInt& bound);

/// Random word over E_ij = e_ij^{+-2} and F_k atoms with an even number of flips.
Word random_gamma2hat_word(int n, int max_length, Rng& rng);

// Suites. Each returns one or more named results.
std::vector<CheckResult> check_relations(int n_min = 3, int n_max = 5, int s_max = 5);
std::vector<CheckResult> check_identities(int n_max = 5, int d_max = 5, int m_max = 3);
std::vector<CheckResult> check_abelianization(Rng& rng, int samples = 1000);
std::vector<CheckResult> check_solver(Rng& rng, int per_d = 200);
std::vector<CheckResult> check_presentation(Rng& rng, int rewrite_samples = 1000);
std::vector<CheckResult> check_quotients();
std::vector<CheckResult> check_commutator_levels(Rng& rng, int samples = 1000, int n2_samples = 200);
std::vector<CheckResult> check_negative_controls();

/// All suites, sorted by id.
std::vector<CheckResult> selftest(std::uint64_t seed);

}  // namespace ckit
