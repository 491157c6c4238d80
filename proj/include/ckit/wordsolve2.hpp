#pragma once

// Word decomposition in Gamma_d(2) for d = 3, 4, 5, 6.
//
// Each reduction step left-multiplies A by g^eps (e21^d)^l, where g is one of
// the level-d generators, so that |A(1,1)| strictly decreases. Once
// (XA)(1,1) = 1 we have XA = e21^b e12^c with d | b and d | c, and
// A = X^-1 (e21^d)^(b/d) (e12^d)^(c/d).

#include <string>
#include <vector>

#include "ckit/words.hpp"

namespace ckit {

enum class StepBranch { Standard, Level5Extra, Level6Commutator };

std::string to_string(StepBranch b);

struct StepRecord {
  BigInt l;
  int m = 0;
  int eps = 0;
  StepBranch branch = StepBranch::Standard;
  BigInt remainder;   // A(2,1) + (l d - m) A(1,1)
  BigInt new_corner;  // resulting (1,1) entry
};

struct SolveTrace {
  std::vector<StepRecord> steps;
  BigInt b;  // (XA)(2,1)
  BigInt c;  // (XA)(1,2)
};

struct StepResult {
  GenWord word;  // g^eps (e21^d)^l
  BigIntMatrix next;
  StepRecord record;
};

/// One reduction step. Requires A in Gamma_d(2), |A(1,1)| > 1, d in 3..6.
StepResult reduce_step(const BigIntMatrix& a, int d);

struct Decomposition {
  GenWord word;
  SolveTrace trace;
};

/// Word over gen_set(Solver, 2, d) evaluating exactly to A.
Decomposition decompose2(const BigIntMatrix& a, int d);

}  // namespace ckit
