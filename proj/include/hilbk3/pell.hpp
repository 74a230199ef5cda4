#pragma once

// Continued-fraction solvers for X^2 - D Y^2 = -1 and = +1, and the bounded
// scan for the auxiliary equation (n-1) X^2 - t Y^2 = 1.

#include "hilbk3/numeric.hpp"

#include <optional>
#include <utility>

namespace hilbk3 {

// fundamental solution of X^2 - D Y^2 = sign, minimal positive a
struct PellPair {
  Int a, b;
  int sign;  // -1 or +1

  bool operator==(const PellPair& o) const {
    return a == o.a && b == o.b && sign == o.sign;
  }
};

enum class NegPellStatus { Solvable, Unsolvable, SquareD };

struct NegPellResult {
  NegPellStatus status;
  std::optional<PellPair> pair;  // present iff Solvable
};

// Classifies X^2 - D Y^2 = -1 via the continued fraction of sqrt(D):
// solvable iff the period length is odd, in which case the convergent at the
// end of the first period is the fundamental solution.  Square D is its own
// outcome.  D >= 1 required.
NegPellResult solve_neg_pell(const Int& D);

// Fundamental solution of X^2 - D Y^2 = 1; D must be a positive nonsquare.
PellPair solve_pos_pell(const Int& D);

// Searches 1 <= X, Y <= bound for (n-1) X^2 - t Y^2 = 1; returns the first
// witness (by X) or nothing.  Requires t >= 2 and n >= 3: for n = 2 the
// equation is the plain positive Pell equation and always has solutions, so
// the call is rejected.
std::optional<std::pair<Int, Int>> aux_equation_scan(const Int& t, const Int& n,
                                                     const Int& bound);

}  // namespace hilbk3
