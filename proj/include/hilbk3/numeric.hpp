#pragma once

// Exact scalar types (GMP) and fixed-size Eigen matrix aliases used everywhere.

#include <gmpxx.h>

#include <Eigen/Core>
#include <Eigen/LU>

#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 6,
    MulCost = 12,
  };
  static inline Real epsilon() { return mpz_class(0); }
  static inline Real dummy_precision() { return mpz_class(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace hilbk3 {

using Int = mpz_class;
using Rat = mpq_class;

using Mat2 = Eigen::Matrix<Int, 2, 2>;
using Mat3 = Eigen::Matrix<Int, 3, 3>;
using MatX = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using Vec2 = Eigen::Matrix<Int, 2, 1>;
using Vec3 = Eigen::Matrix<Int, 3, 1>;
using Mat32 = Eigen::Matrix<Int, 3, 2>;

// floor(sqrt(x)); x must be nonnegative
inline Int isqrt(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline bool is_square(const Int& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

// representative of x mod m in [0, m); m > 0
inline Int mod_floor(const Int& x, const Int& m) {
  if (m <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// num/den in lowest terms with positive denominator; den must be nonzero
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// parses "p" or "p/q" (decimal)
inline Rat parse_rat(const std::string& text) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("parse_rat: bad rational literal: " + text);
  q.canonicalize();
  return q;
}

inline bool fits_long(const Int& x) { return x.fits_slong_p() != 0; }

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace hilbk3
