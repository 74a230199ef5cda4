#pragma once

// Exact-rational central charges Z_{omega,beta} for divisor-multiple
// parameters (omega, beta) = (xH, yH), the canonical fixed parameters of a
// derived-natural involution, charge invariance, and the spherical
// positivity certificate.

#include "hilbk3/lattice.hpp"
#include "hilbk3/pell.hpp"

#include <optional>

namespace hilbk3 {

// omega = lambda * x * H with lambda >= 1 along the path, beta = y * H;
// lambda itself is irrational in general, but lambda^2 = 1 + 2(n-1) b lambda0
// is rational, so all derived quantities stay in Q.
struct StabilityParams {
  Rat x;        // > 0
  Rat y;
  Rat lambda0;  // >= 0

  bool operator==(const StabilityParams& o) const {
    return x == o.x && y == o.y && lambda0 == o.lambda0;
  }
};

// supplies (n, b) so that lambda^2 = 1 + 2(n-1) b lambda0; without it lambda = 1
struct PathContext {
  Int n, b;
};

Rat lambda_squared(const StabilityParams& params, const std::optional<PathContext>& path);

// Z = re + i * lambda * im_coeff
struct ChargeValue {
  Rat re;
  Rat im_coeff;

  bool operator==(const ChargeValue& o) const { return re == o.re && im_coeff == o.im_coeff; }
};

// re = lambda^2 t x^2 r + 2 t m y - s - t y^2 r,  im_coeff = 2 t x (m - r y)
ChargeValue central_charge(const Surface& surf, const StabilityParams& params,
                           const MukaiVector& v,
                           const std::optional<PathContext>& path = std::nullopt);

// (x, y, lambda0) = (1/(tb), -a/(tb), 0), the unique parameters fixed by tau
StabilityParams canonical_params(const Int& t, const Int& n, const PellPair& p);

// true iff Z(tau e) == Z(e) on the three basis vectors (hence everywhere, by
// linearity); params must have lambda0 = 0
bool charge_invariance(const Mat3& tau, const Surface& surf, const StabilityParams& params);

// Searches 1 <= r <= bound, |m| <= bound, |s| <= (n-1)*bound + bound for a
// spherical class with real central charge at the canonical parameters, i.e.
// a r + t m b = 0 and t m^2 = r s - 1, violating (n-1) r > s.  Returns the
// first witness (by r) or nothing.
std::optional<MukaiVector> spherical_positivity_scan(const Int& t, const Int& n,
                                                     const PellPair& p, const Int& bound);

}  // namespace hilbk3
