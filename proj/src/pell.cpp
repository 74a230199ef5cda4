#include "hilbk3/pell.hpp"

namespace hilbk3 {

namespace {

// First period of the continued fraction of sqrt(D), D a positive nonsquare:
//   P_0 = 0, Q_0 = 1, a_i = floor((a0 + P_i)/Q_i),
//   P_{i+1} = a_i Q_i - P_i, Q_{i+1} = (D - P_{i+1}^2)/Q_i (always exact),
// with the usual convergent recurrences.  The period ends at the least l >= 1
// with Q_l = 1, and p_{l-1}^2 - D q_{l-1}^2 = (-1)^l.
struct PeriodResult {
  Int p, q;    // convergent p_{l-1} / q_{l-1}
  long length; // l
};

PeriodResult sqrt_cf_period(const Int& D) {
  const Int a0 = isqrt(D);
  Int P = 0, Q = 1;
  Int pm2 = 0, pm1 = 1;  // p_{-2}, p_{-1}
  Int qm2 = 1, qm1 = 0;  // q_{-2}, q_{-1}
  for (long i = 0;; ++i) {
    const Int a = (a0 + P) / Q;
    const Int p = a * pm1 + pm2;
    const Int q = a * qm1 + qm2;
    P = a * Q - P;
    Q = (D - P * P) / Q;
    if (Q == 1) return {p, q, i + 1};
    pm2 = pm1;
    pm1 = p;
    qm2 = qm1;
    qm1 = q;
  }
}

}  // namespace

NegPellResult solve_neg_pell(const Int& D) {
  if (D < 1) throw std::invalid_argument("solve_neg_pell: D must be >= 1");
  if (is_square(D)) return {NegPellStatus::SquareD, std::nullopt};
  const PeriodResult cf = sqrt_cf_period(D);
  if (cf.length % 2 == 0) return {NegPellStatus::Unsolvable, std::nullopt};
  return {NegPellStatus::Solvable, PellPair{cf.p, cf.q, -1}};
}

PellPair solve_pos_pell(const Int& D) {
  if (D < 1) throw std::invalid_argument("solve_pos_pell: D must be >= 1");
  if (is_square(D)) throw std::invalid_argument("solve_pos_pell: D must not be a square");
  const PeriodResult cf = sqrt_cf_period(D);
  if (cf.length % 2 == 0) return {cf.p, cf.q, +1};
  // odd period: p/q solves the -1 equation; squaring the unit a + b sqrt(D)
  // gives (a^2 + D b^2) + 2ab sqrt(D) with a^2 + D b^2 = 2a^2 + 1
  return {2 * cf.p * cf.p + 1, 2 * cf.p * cf.q, +1};
}

std::optional<std::pair<Int, Int>> aux_equation_scan(const Int& t, const Int& n,
                                                     const Int& bound) {
  if (t < 2) throw std::invalid_argument("aux_equation_scan: t must be >= 2");
  if (n < 3) throw std::invalid_argument("aux_equation_scan: n must be >= 3");
  if (bound < 1) throw std::invalid_argument("aux_equation_scan: bound must be >= 1");
  const Int nm1 = n - 1;
  for (Int x = 1; x <= bound; ++x) {
    const Int rhs = nm1 * x * x - 1;  // = t Y^2 if (x, Y) is a solution
    if (rhs <= 0 || rhs % t != 0) continue;
    const Int ysq = rhs / t;
    if (!is_square(ysq)) continue;
    const Int y = isqrt(ysq);
    if (y >= 1 && y <= bound) return std::make_pair(x, y);
  }
  return std::nullopt;
}

}  // namespace hilbk3
