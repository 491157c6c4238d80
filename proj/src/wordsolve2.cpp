#include "ckit/wordsolve2.hpp"

#include "ckit/congruence.hpp"

namespace ckit {

std::string to_string(StepBranch b) {
  switch (b) {
    case StepBranch::Standard: return "standard";
    case StepBranch::Level5Extra: return "level5";
    case StepBranch::Level6Commutator: return "level6";
  }
  return "?";
}

namespace {

int sign(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

void check_input(const BigIntMatrix& a, int d) {
  if (d < 3 || d > 6) throw Unsupported("decompose2: d must be in 3..6");
  if (a.rows() != 2 || a.cols() != 2) throw DimensionMismatch("decompose2: matrix must be 2x2");
  if (!is_member(a, d, Variant::SL)) throw NotMember("decompose2: matrix is not in Gamma_d(2)");
}

struct Candidate {
  GenWord word;
  BigIntMatrix next;
};

Candidate candidate(const BigIntMatrix& a, int d, int m, const BigInt& l, StepBranch branch, int eps) {
  GenWord w(2);
  switch (branch) {
    case StepBranch::Standard:
      w.push(conj_label(2, 1, m), word_conj(2, 2, 1, m, d), eps);
      break;
    case StepBranch::Level5Extra: {
      const int s = -2 * eps;
      Word body(2, {Elem{2, 1, m}, Elem{1, 2, s}, Elem{2, 1, 5}, Elem{1, 2, -s}, Elem{2, 1, -m}});
      if (m == 0) body = Word(2, {Elem{1, 2, s}, Elem{2, 1, 5}, Elem{1, 2, -s}});
      w.push(level5_label(m, s), body, eps);
      break;
    }
    case StepBranch::Level6Commutator: {
      const int x = 3 * eps, y = 2 * eps;
      Word core(2, {Elem{2, 1, x}, Elem{1, 2, y}, Elem{2, 1, -x}, Elem{1, 2, -y}});
      Word body = core;
      if (m != 0) body = Word(2, {Elem{2, 1, m}}) * core * Word(2, {Elem{2, 1, -m}});
      w.push(level6_label(m, x, y), body, 1);
      break;
    }
  }
  w.push("e(2,1)^d", Word(2, {Elem{2, 1, d}}), l);
  return {w, mat_mul(evaluate(w), a)};
}

}  // namespace

StepResult reduce_step(const BigIntMatrix& a, int d) {
  check_input(a, d);
  const BigInt& c11 = a(0, 0);
  const BigInt& h = a(1, 0);
  const BigInt abs_a = abs(c11);
  if (abs_a <= 1) throw InputError("reduce_step: |A(1,1)| must exceed 1");

  // r = h mod |a| placed in [-|a|/2, |a|/2)
  BigInt r = floor_mod(h, abs_a);
  if (2 * r >= abs_a) r -= abs_a;
  // The tie r = -|a|/2 would stall the level-4 step; nudge it up. Since
  // a = 1 mod 4 is odd this cannot happen, but the guard is cheap.
  if (d == 4 && 2 * r == -abs_a) r += abs_a;
  if (r == 0) throw InvariantViolation("reduce_step: zero remainder with |A(1,1)| > 1");

  const BigInt q = (r - h) / c11;
  const int m = static_cast<int>(floor_mod(-q, BigInt(d)));
  const BigInt l = (q + m) / d;

  const BigInt abs_r = abs(r);
  StepBranch branch = StepBranch::Standard;
  if (d == 5 && 5 * abs_r >= 2 * abs_a) {
    if (5 * abs_r == 2 * abs_a) throw InvariantViolation("reduce_step: level-5 branch tie");
    branch = StepBranch::Level5Extra;
  } else if (d == 6 && 3 * abs_r >= abs_a) {
    if (3 * abs_r == abs_a) throw InvariantViolation("reduce_step: level-6 branch tie");
    branch = StepBranch::Level6Commutator;
  }

  Candidate plus = candidate(a, d, m, l, branch, 1);
  Candidate minus = candidate(a, d, m, l, branch, -1);
  const BigInt np = abs(plus.next(0, 0)), nm = abs(minus.next(0, 0));
  if (np == nm) throw InvariantViolation("reduce_step: both sign choices tie");
  const int eps = np < nm ? 1 : -1;
  Candidate& best = eps == 1 ? plus : minus;

  const bool same = sign(c11) == sign(r);
  const int rule = branch == StepBranch::Level6Commutator ? (same ? 1 : -1) : (same ? -1 : 1);
  if (eps != rule) throw InvariantViolation("reduce_step: chosen sign disagrees with the sign rule");
  if (abs(best.next(0, 0)) >= abs_a) throw InvariantViolation("reduce_step: (1,1) entry did not decrease");

  StepRecord rec{l, m, eps, branch, r, best.next(0, 0)};
  return StepResult{std::move(best.word), std::move(best.next), std::move(rec)};
}

Decomposition decompose2(const BigIntMatrix& a, int d) {
  check_input(a, d);
  Decomposition out{GenWord(2), {}};
  std::vector<GenWord> steps;
  BigIntMatrix cur = a;
  while (cur(0, 0) != 1) {
    StepResult s = reduce_step(cur, d);
    steps.push_back(std::move(s.word));
    out.trace.steps.push_back(std::move(s.record));
    cur = std::move(s.next);
  }
  // cur = [[1, c], [b, 1 + bc]] = e21^b e12^c
  const BigInt b = cur(1, 0), c = cur(0, 1);
  if (floor_mod(b, BigInt(d)) != 0 || floor_mod(c, BigInt(d)) != 0)
    throw InvariantViolation("decompose2: cleanup entries not divisible by d");
  out.trace.b = b;
  out.trace.c = c;

  for (const auto& s : steps) out.word.append(s.inverse());
  out.word.push("e(2,1)^d", Word(2, {Elem{2, 1, d}}), b / d);
  out.word.push(conj_label(2, 1, 0), word_conj(2, 2, 1, 0, d), c / d);

  if (evaluate(out.word) != a) throw InvariantViolation("decompose2: word does not evaluate to the input");
  return out;
}

}  // namespace ckit
