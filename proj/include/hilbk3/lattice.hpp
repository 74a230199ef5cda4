#pragma once

// Algebraic Mukai lattice of a generic polarized K3 surface of degree 2t,
// the rank-2 Neron-Severi lattice of the Hilbert scheme of n points, and the
// induced action on the discriminant group.

#include "hilbk3/numeric.hpp"

#include <optional>
#include <utility>

namespace hilbk3 {

// generic polarized K3 surface: Pic = Z*H with H^2 = 2t
struct Surface {
  Int t;

  explicit Surface(Int t_) : t(std::move(t_)) {
    if (t < 1) throw std::invalid_argument("Surface: t must be >= 1");
  }
};

// class (r, m*H, s) in H^0 + Z*H + H^4
struct MukaiVector {
  Int r, m, s;

  MukaiVector() : r(0), m(0), s(0) {}
  MukaiVector(Int r_, Int m_, Int s_) : r(std::move(r_)), m(std::move(m_)), s(std::move(s_)) {}

  bool operator==(const MukaiVector& o) const { return r == o.r && m == o.m && s == o.s; }
  bool operator!=(const MukaiVector& o) const { return !(*this == o); }
  bool is_zero() const { return r == 0 && m == 0 && s == 0; }
};

inline MukaiVector operator+(const MukaiVector& v, const MukaiVector& w) {
  return {v.r + w.r, v.m + w.m, v.s + w.s};
}
inline MukaiVector operator-(const MukaiVector& v, const MukaiVector& w) {
  return {v.r - w.r, v.m - w.m, v.s - w.s};
}
inline MukaiVector operator-(const MukaiVector& v) { return {-v.r, -v.m, -v.s}; }
inline MukaiVector operator*(const Int& c, const MukaiVector& v) {
  return {c * v.r, c * v.m, c * v.s};
}

inline Vec3 to_vec3(const MukaiVector& v) {
  Vec3 e;
  e << v.r, v.m, v.s;
  return e;
}
inline MukaiVector from_vec3(const Vec3& e) { return {e(0), e(1), e(2)}; }

// <(r1,m1 H,s1),(r2,m2 H,s2)> = 2t m1 m2 - r1 s2 - r2 s1
inline Int mukai_pairing(const MukaiVector& v, const MukaiVector& w, const Surface& surf) {
  return 2 * surf.t * v.m * w.m - v.r * w.s - w.r * v.s;
}

// v_n = (1, 0, 1-n), the class of ideal sheaves of n points; <v_n,v_n> = 2(n-1)
inline MukaiVector ideal_sheaf_vector(const Int& n) {
  if (n < 2) throw std::invalid_argument("ideal_sheaf_vector: n must be >= 2");
  return {1, 0, 1 - n};
}

// Gram matrix of the Mukai pairing in basis (1,0,0), (0,H,0), (0,0,1)
inline Mat3 mukai_gram(const Surface& surf) {
  Mat3 g = Mat3::Zero();
  g(0, 2) = -1;
  g(2, 0) = -1;
  g(1, 1) = 2 * surf.t;
  return g;
}

// NS(S^[n]) in the basis (theta_n(0,-H,0), theta_n(1,0,n-1)): diag(2t, -2(n-1))
struct NsGram {
  Int t, n;
  Mat2 gram;
};

inline NsGram ns_gram(const Int& t, const Int& n) {
  if (t < 1) throw std::invalid_argument("ns_gram: t must be >= 1");
  if (n < 2) throw std::invalid_argument("ns_gram: n must be >= 2");
  Mat2 g = Mat2::Zero();
  g(0, 0) = 2 * t;
  g(1, 1) = -2 * (n - 1);
  return NsGram{t, n, g};
}

// Action of an isometry M on the discriminant group of diag(2t, -2(n-1)),
// restricted to the Z/2(n-1) summand generated by e2/(2(n-1)).  Writing
// M(e2) = u e1 + c e2 (column convention), the generator maps to
// c * e2/(2(n-1)) plus a spill u e1/(2(n-1)); the spill lands in the Z/2t
// summand as t*u/(n-1) * e1/(2t) when (n-1) | t*u and is reported separately.
struct DiscriminantAction {
  Int modulus;     // 2(n-1)
  Int multiplier;  // c reduced to [0, 2(n-1))
  Int e1_coeff;    // u, unreduced
  std::optional<Int> glue_class;  // t*u/(n-1) mod 2t, when defined

  bool acts_trivially() const {
    return multiplier == mod_floor(1, modulus) && glue_class && *glue_class == 0;
  }
  bool operator==(const DiscriminantAction& o) const {
    return modulus == o.modulus && multiplier == o.multiplier && e1_coeff == o.e1_coeff &&
           glue_class == o.glue_class;
  }
};

DiscriminantAction discriminant_action(const Mat2& M, const NsGram& g);

}  // namespace hilbk3
