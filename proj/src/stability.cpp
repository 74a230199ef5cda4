#include "hilbk3/stability.hpp"

namespace hilbk3 {

namespace {

void check_params(const StabilityParams& params) {
  if (params.x <= 0) throw std::invalid_argument("StabilityParams: x must be positive");
  if (params.lambda0 < 0)
    throw std::invalid_argument("StabilityParams: lambda0 must be nonnegative");
}

}  // namespace

Rat lambda_squared(const StabilityParams& params, const std::optional<PathContext>& path) {
  check_params(params);
  if (!path) return Rat(1);
  return Rat(1) + Rat(2 * (path->n - 1) * path->b) * params.lambda0;
}

ChargeValue central_charge(const Surface& surf, const StabilityParams& params,
                           const MukaiVector& v, const std::optional<PathContext>& path) {
  const Rat lsq = lambda_squared(params, path);
  const Rat t(surf.t);
  const Rat r(v.r), m(v.m), s(v.s);
  const Rat &x = params.x, &y = params.y;
  ChargeValue z;
  z.re = lsq * t * x * x * r + 2 * t * m * y - s - t * y * y * r;
  z.im_coeff = 2 * t * x * (m - r * y);
  return z;
}

StabilityParams canonical_params(const Int& t, const Int& n, const PellPair& p) {
  if (t < 1 || n < 2) throw std::invalid_argument("canonical_params: need t >= 1, n >= 2");
  if (p.a < 1 || p.b < 1 || p.a * p.a - t * (n - 1) * p.b * p.b != -1)
    throw std::invalid_argument("canonical_params: pair does not solve X^2 - t(n-1)Y^2 = -1");
  return StabilityParams{make_rat(1, t * p.b), make_rat(-p.a, t * p.b), Rat(0)};
}

bool charge_invariance(const Mat3& tau, const Surface& surf, const StabilityParams& params) {
  check_params(params);
  if (params.lambda0 != 0)
    throw std::invalid_argument("charge_invariance: params must have lambda0 = 0");
  for (int j = 0; j < 3; ++j) {
    Vec3 e = Vec3::Zero();
    e(j) = 1;
    const Vec3 image = (tau * e).eval();
    if (!(central_charge(surf, params, from_vec3(image)) ==
          central_charge(surf, params, from_vec3(e))))
      return false;
  }
  return true;
}

std::optional<MukaiVector> spherical_positivity_scan(const Int& t, const Int& n,
                                                     const PellPair& p, const Int& bound) {
  if (t < 1 || n < 2) throw std::invalid_argument("spherical_positivity_scan: need t >= 1, n >= 2");
  if (bound < 1) throw std::invalid_argument("spherical_positivity_scan: bound must be >= 1");
  if (p.a < 1 || p.b < 1 || p.a * p.a - t * (n - 1) * p.b * p.b != -1)
    throw std::invalid_argument(
        "spherical_positivity_scan: pair does not solve X^2 - t(n-1)Y^2 = -1");

  // a r + t m b = 0 determines m from r, and t m^2 = r s - 1 determines s;
  // iterating r enumerates the whole |m| <= bound, |s| <= n*bound box.
  const Int s_bound = (n - 1) * bound + bound;
  const Int tb = t * p.b;
  for (Int r = 1; r <= bound; ++r) {
    const Int am = -p.a * r;  // = t b m
    if (am % tb != 0) continue;
    const Int m = am / tb;
    if (m < -bound || m > bound) continue;
    const Int num = t * m * m + 1;  // = r s
    if (num % r != 0) continue;
    const Int s = num / r;
    if (s < -s_bound || s > s_bound) continue;
    if ((n - 1) * r <= s) return MukaiVector{r, m, s};
  }
  return std::nullopt;
}

}  // namespace hilbk3
