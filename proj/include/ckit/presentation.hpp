#pragma once

// Relator families for Gamma_2(n) and its GL analogue, and Reidemeister-Schreier
// rewriting with transversal U = {I, F_1}.
//
// Generator labels: "E(i,j)" = e_ij^2, "F(k)" = F_k, "F(1,k)" = F_1 F_k written
// as the e-word e_1k^2 e_k1^-2 e_k1 e_1k^2 e_k1^-1.
// Commutators are [a,b] = a b a^-1 b^-1.

#include <map>
#include <string>
#include <vector>

#include "ckit/words.hpp"

namespace ckit {

struct Relator {
  std::string family;        // "GH-a".."GH-e" or "M3-1".."M3-4"
  std::string form;          // e.g. "[E_ij,E_jk]E_ik^-2"
  std::vector<int> indices;  // the instantiated (i,j,k,l) prefix
  GenWord word;
};

/// GL presentation: generators E_ij and F_k. n >= 2.
std::vector<Relator> relators_gamma2hat(int n);

/// SL presentation: generators E_ij and F_1k. n >= 2.
std::vector<Relator> relators_gamma2(int n);

/// Rewrites a word in E_ij (even e-exponents) and F_k atoms into E_ij^{+-} and
/// F_1k syllables, tracking the coset of the running prefix. Throws NotMember
/// when the word has determinant -1, ParseError on an odd e-exponent.
GenWord rs_rewrite(const Word& w);

struct FamilyCount {
  int total = 0;
  int passed = 0;
};

struct RelatorReport {
  std::vector<bool> ok;
  std::map<std::string, FamilyCount> families;
  std::vector<std::string> failures;

  bool all_ok() const { return failures.empty(); }
  /// Throws RelatorFailure listing the first failures.
  void require() const;
};

RelatorReport verify_relators(const std::vector<Relator>& rs);

/// Both sides of the derived relator identity for distinct j, k >= 2:
///   (E_j1 E_1j^-1 E_kj^-1 E_jk E_1k E_k1^-1)^2
///     = F_1k F_1j (E_j1^-1 E_1j E_kj^-1 E_jk E_1k^-1 E_k1)^2 F_1j F_1k
std::pair<GenWord, GenWord> derived_relator_sides(int n, int j, int k);

}  // namespace ckit
