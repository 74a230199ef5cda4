#include "hilbk3/walls.hpp"

#include "hilbk3/stability.hpp"

#include <algorithm>
#include <thread>

namespace hilbk3 {

namespace {

void check_case(const Int& t, const Int& n, const PellPair& p, const char* who) {
  if (t < 1) throw std::invalid_argument(std::string(who) + ": t must be >= 1");
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
  if (p.a < 1 || p.b < 1 || p.a * p.a - t * (n - 1) * p.b * p.b != -1)
    throw std::invalid_argument(std::string(who) +
                                ": pair does not solve X^2 - t(n-1)Y^2 = -1");
}

// (2(n-1) b^2 t + lambda^2 - 1) m + a b ((n-1) r + s), with
// lambda^2 - 1 = 2(n-1) b lambda0; zero iff w is on the wall at lambda0
Rat membership_value(const Int& t, const Int& n, const PellPair& p, const Rat& lambda0,
                     const MukaiVector& w) {
  const Int nm1 = n - 1;
  const Rat factor = Rat(Int(2 * nm1 * p.b)) * (Rat(Int(p.b * t)) + lambda0);
  return factor * Rat(w.m) + Rat(Int(p.a * p.b)) * Rat(Int(nm1 * w.r + w.s));
}

// effectivity test assuming w is on the wall at lambda0
bool effective_at(const Int& t, const Int& n, const PellPair& p, const Rat& lambda0,
                  const MukaiVector& w) {
  const Surface surf(t);
  const auto [sq, pv] = pairing_profile(w, n, t);
  (void)pv;
  if (sq < -2) return false;
  const StabilityParams params{make_rat(1, t * p.b), make_rat(-p.a, t * p.b), lambda0};
  const PathContext path{n, p.b};
  const ChargeValue zw = central_charge(surf, params, w, path);
  const ChargeValue zv = central_charge(surf, params, ideal_sheaf_vector(n), path);
  const Rat lsq = lambda_squared(params, path);
  return zw.re * zv.re + lsq * zw.im_coeff * zv.im_coeff > 0;
}

template <typename I>
Int to_int(const I& x) {
  return Int(x);
}
template <>
Int to_int<Int>(const Int& x) {
  return x;
}

template <typename I>
struct SlabParams {
  I t, nm1, a, b, bound;
};

// Enumerates r in [r_lo, r_hi], |m| <= bound, |s| <= bound in ascending
// (r, m, s) order and appends on-path witnesses by profile.  I is either
// long (when every intermediate provably fits) or Int.
template <typename I>
void scan_slab(const SlabParams<I>& c, const Int& t, const Int& n, const PellPair& p,
               const I& r_lo, const I& r_hi, WallScanReport& rep) {
  for (I r = r_lo; r <= r_hi; ++r) {
    for (I m = -c.bound; m <= c.bound; ++m) {
      for (I s = -c.bound; s <= c.bound; ++s) {
        if (r == 0 && m == 0 && s == 0) continue;
        const I s1 = c.nm1 * r + s;
        bool all_lambda = false;
        I num = 0, den = 1;
        if (m == 0) {
          if (s1 != 0) continue;
          all_lambda = true;
        } else {
          num = -c.a * s1 - 2 * c.nm1 * m * c.b * c.t;
          den = 2 * c.nm1 * m;
          const bool nonneg = num == 0 || ((num > 0) == (den > 0));
          if (!nonneg) continue;
        }
        const I sq = 2 * c.t * m * m - 2 * r * s;
        const I pv = c.nm1 * r - s;

        const bool bn = sq == -2 && pv == 0;
        const bool hc = sq == 0 && pv == 1;
        const bool lgu = sq == 0 && pv == 2;
        const bool ts_shape = sq == -2 && pv < 0;
        if (!bn && !hc && !lgu && !ts_shape) continue;

        const MukaiVector w{to_int(r), to_int(m), to_int(s)};
        const Rat lambda0 = all_lambda ? Rat(0) : make_rat(to_int(num), to_int(den));
        const WallCandidate cand{w, all_lambda, lambda0, to_int(sq), to_int(pv)};
        if (bn)
          rep.brill_noether.push_back(cand);
        else if (hc)
          rep.hilbert_chow.push_back(cand);
        else if (lgu)
          rep.li_gieseker_uhlenbeck.push_back(cand);
        else if (effective_at(t, n, p, lambda0, w))
          rep.totally_semistable.push_back(cand);
      }
    }
  }
}

bool kernel_fits_long(const Int& t, const Int& n, const PellPair& p, const Int& B) {
  const Int nm1 = n - 1;
  const Int s1_max = nm1 * B + B;
  const Int num_max = p.a * s1_max + 2 * nm1 * B * p.b * t;
  const Int sq_max = 2 * t * B * B + 2 * B * B;
  Int lim;
  mpz_ui_pow_ui(lim.get_mpz_t(), 2, 62);
  return num_max < lim && sq_max < lim && fits_long(t) && fits_long(n) &&
         fits_long(p.a) && fits_long(p.b) && fits_long(B);
}

void append(WallScanReport& into, WallScanReport&& part) {
  auto move_append = [](std::vector<WallCandidate>& dst, std::vector<WallCandidate>& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()),
               std::make_move_iterator(src.end()));
  };
  move_append(into.brill_noether, part.brill_noether);
  move_append(into.hilbert_chow, part.hilbert_chow);
  move_append(into.li_gieseker_uhlenbeck, part.li_gieseker_uhlenbeck);
  move_append(into.totally_semistable, part.totally_semistable);
}

}  // namespace

WallOutcome wall_lambda0(const Int& t, const Int& n, const PellPair& p, const MukaiVector& w) {
  check_case(t, n, p, "wall_lambda0");
  if (w.is_zero()) throw std::invalid_argument("wall_lambda0: zero vector");
  const Int nm1 = n - 1;
  const Int s1 = nm1 * w.r + w.s;
  if (w.m == 0) {
    if (s1 == 0) return {WallOutcome::Kind::AllLambda, std::nullopt};
    return {WallOutcome::Kind::OffPath, std::nullopt};
  }
  const Rat l0 = make_rat(-p.a * s1 - 2 * nm1 * w.m * p.b * t, 2 * nm1 * w.m);
  if (l0 >= 0) return {WallOutcome::Kind::OnPath, l0};
  return {WallOutcome::Kind::OffPath, std::nullopt};
}

std::pair<Int, Int> pairing_profile(const MukaiVector& w, const Int& n, const Int& t) {
  const Surface surf(t);
  return {mukai_pairing(w, w, surf), mukai_pairing(w, ideal_sheaf_vector(n), surf)};
}

bool is_effective(const Int& t, const Int& n, const PellPair& p, const Rat& lambda0,
                  const MukaiVector& w) {
  check_case(t, n, p, "is_effective");
  if (lambda0 < 0) throw std::invalid_argument("is_effective: lambda0 must be >= 0");
  if (membership_value(t, n, p, lambda0, w) != 0)
    throw std::invalid_argument("is_effective: class is not on the wall at lambda0");
  return effective_at(t, n, p, lambda0, w);
}

WallScanReport scan_walls(const Int& t, const Int& n, const PellPair& p, const Int& bound,
                          int workers) {
  check_case(t, n, p, "scan_walls");
  if (bound < 1) throw std::invalid_argument("scan_walls: bound must be >= 1");

  long nworkers = workers > 0 ? workers : static_cast<long>(std::thread::hardware_concurrency());
  if (nworkers < 1) nworkers = 1;
  const Int width = 2 * bound + 1;
  if (!fits_long(width)) throw std::invalid_argument("scan_walls: bound too large");
  nworkers = std::min(nworkers, width.get_si());

  // contiguous r-slabs; parts are merged in slab order, so the witness lists
  // come out in ascending (r, m, s) order for any worker count
  std::vector<Int> starts;
  const Int chunk = width / nworkers, extra = width % nworkers;
  Int at = -bound;
  for (long i = 0; i < nworkers; ++i) {
    starts.push_back(at);
    at += chunk + (i < extra ? 1 : 0);
  }
  starts.push_back(bound + 1);

  const bool use_long = kernel_fits_long(t, n, p, bound);
  std::vector<WallScanReport> parts(nworkers);
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (long i = 0; i < nworkers; ++i) {
    pool.emplace_back([&, i] {
      const Int lo = starts[i], hi = starts[i + 1] - 1;
      if (lo > hi) return;
      if (use_long) {
        const SlabParams<long> c{t.get_si(), n.get_si() - 1, p.a.get_si(), p.b.get_si(),
                                 bound.get_si()};
        scan_slab<long>(c, t, n, p, lo.get_si(), hi.get_si(), parts[i]);
      } else {
        const SlabParams<Int> c{t, n - 1, p.a, p.b, bound};
        scan_slab<Int>(c, t, n, p, lo, hi, parts[i]);
      }
    });
  }
  for (auto& th : pool) th.join();

  WallScanReport rep;
  rep.bound = bound;
  for (auto& part : parts) append(rep, std::move(part));
  return rep;
}

FloppingReport flopping_obstruction(const Int& t, const Int& n, const PellPair& p,
                                    const Int& p_val, const Int& k, const Int& search_bound) {
  check_case(t, n, p, "flopping_obstruction");
  const Int disc = k * k - 4 * p_val * (n - 1);
  if (disc <= 0)
    throw std::domain_error(
        "flopping_obstruction: profile discriminant k^2 - 4p(n-1) must be positive");

  FloppingReport rep{p_val, k, disc, FloppingVerdict::Inconclusive, 0, {}};
  if (disc == 1) {
    // any class with this profile satisfies X^2 - t(n-1) (2m)^2 = 1 for
    // X = 2(n-1)r - k; minimality of (2a^2+1, 2ab) bounds |X/m| and pushes
    // lambda0 to at most -1/(2(n-1)b), strictly off the path
    rep.verdict = FloppingVerdict::ExcludedOnPath;
    return rep;
  }

  if (search_bound < 1)
    throw std::invalid_argument("flopping_obstruction: search bound must be >= 1");
  rep.search_bound = search_bound;
  const Int nm1 = n - 1;
  for (Int r = -search_bound; r <= search_bound; ++r) {
    const Int rhs = nm1 * r * r - k * r + p_val;  // = t m^2 for profile members
    if (rhs < 0 || rhs % t != 0) continue;
    const Int msq = rhs / t;
    if (!is_square(msq)) continue;
    const Int m0 = isqrt(msq);
    const Int s = nm1 * r - k;
    std::vector<Int> ms;
    if (m0 == 0)
      ms.push_back(0);
    else
      ms = {-m0, m0};
    for (const Int& m : ms) {
      const MukaiVector w{r, m, s};
      if (w.is_zero()) continue;
      const WallOutcome out = wall_lambda0(t, n, p, w);
      if (!out.on_path()) continue;
      const auto [sq, pv] = pairing_profile(w, n, t);
      rep.hits.push_back(WallCandidate{w, out.kind == WallOutcome::Kind::AllLambda,
                                       out.lambda0 ? *out.lambda0 : Rat(0), sq, pv});
    }
  }
  return rep;
}

}  // namespace hilbk3
