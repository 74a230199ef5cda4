#pragma once

// Wall membership along the path lambda -> sigma_{lambda omega0, beta0},
// bounded enumeration of wall candidates for v_n by numerical profile, and
// the flopping-wall obstruction from Pell minimality.

#include "hilbk3/lattice.hpp"
#include "hilbk3/pell.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hilbk3 {

// A class w = (r,m,s) lies on a wall for v_n at path parameter lambda0 iff
//   (2(n-1)b^2 t + lambda^2 - 1) m + a b ((n-1) r + s) = 0
// with lambda^2 = 1 + 2(n-1) b lambda0.  For m != 0 this pins
// lambda0 = -a((n-1)r+s) / (2(n-1)m) - bt; for m = 0 it holds for every
// lambda0 iff (n-1) r + s = 0.
struct WallOutcome {
  enum class Kind { OnPath, OffPath, AllLambda };
  Kind kind;
  std::optional<Rat> lambda0;  // present iff OnPath

  bool on_path() const { return kind != Kind::OffPath; }
};

WallOutcome wall_lambda0(const Int& t, const Int& n, const PellPair& p, const MukaiVector& w);

// (<w,w>, <w,v_n>)
std::pair<Int, Int> pairing_profile(const MukaiVector& w, const Int& n, const Int& t);

// w is effective at lambda0 iff <w,w> >= -2 and Re(Z(w) conj(Z(v_n))) > 0 at
// (lambda x0, y0), evaluated as re_w re_v + lambda^2 im_w im_v in Q.
// Requires w on the wall at lambda0 (membership re-checked, else throws).
bool is_effective(const Int& t, const Int& n, const PellPair& p, const Rat& lambda0,
                  const MukaiVector& w);

struct WallCandidate {
  MukaiVector w;
  bool all_lambda;  // membership holds for every lambda0
  Rat lambda0;      // the wall parameter (0 when all_lambda)
  Int self_pairing;
  Int vn_pairing;

  bool operator==(const WallCandidate& o) const {
    return w == o.w && all_lambda == o.all_lambda && lambda0 == o.lambda0 &&
           self_pairing == o.self_pairing && vn_pairing == o.vn_pairing;
  }
};

// Witnesses collected over |r|,|m|,|s| <= bound among classes on the path,
// by profile: Brill-Noether (-2,0), Hilbert-Chow (0,1), Li-Gieseker-Uhlenbeck
// (0,2), totally semistable (-2, k<0) and effective.  All four lists are
// expected empty; any entry carries full reproduction data.
struct WallScanReport {
  Int bound;
  std::vector<WallCandidate> brill_noether;
  std::vector<WallCandidate> hilbert_chow;
  std::vector<WallCandidate> li_gieseker_uhlenbeck;
  std::vector<WallCandidate> totally_semistable;

  bool all_empty() const {
    return brill_noether.empty() && hilbert_chow.empty() &&
           li_gieseker_uhlenbeck.empty() && totally_semistable.empty();
  }
  bool operator==(const WallScanReport& o) const {
    return bound == o.bound && brill_noether == o.brill_noether &&
           hilbert_chow == o.hilbert_chow &&
           li_gieseker_uhlenbeck == o.li_gieseker_uhlenbeck &&
           totally_semistable == o.totally_semistable;
  }
};

// Deterministic parallel enumeration: r-slabs across workers, witnesses merged
// in ascending (r, m, s) order regardless of worker count (0 = hardware).
WallScanReport scan_walls(const Int& t, const Int& n, const PellPair& p, const Int& bound,
                          int workers = 0);

enum class FloppingVerdict { ExcludedOnPath, Inconclusive };

// Obstruction for a flopping-type profile <w,w> = 2p, <w,v_n> = k.  Any such
// class satisfies (2(n-1)r - k)^2 - t(n-1)(2m)^2 = k^2 - 4p(n-1); when that
// discriminant equals 1, Pell minimality forces lambda0 <= -1/(2(n-1)b) < 0,
// so no class with the profile meets the path: ExcludedOnPath.  Otherwise
// Inconclusive, with a bounded direct search attached.  Profiles with
// discriminant <= 0 are rejected (the reduction is vacuous).
struct FloppingReport {
  Int p_val, k;
  Int discriminant;  // k^2 - 4 p (n-1)
  FloppingVerdict verdict;
  Int search_bound;                 // 0 when no search ran
  std::vector<WallCandidate> hits;  // on-path classes with the profile, |r| <= search_bound

  bool operator==(const FloppingReport& o) const {
    return p_val == o.p_val && k == o.k && discriminant == o.discriminant &&
           verdict == o.verdict && search_bound == o.search_bound && hits == o.hits;
  }
};

FloppingReport flopping_obstruction(const Int& t, const Int& n, const PellPair& p,
                                    const Int& p_val, const Int& k,
                                    const Int& search_bound = 100);

}  // namespace hilbk3
