#include "hilbk3/isometry.hpp"

namespace hilbk3 {

namespace {

void check_pair(const Int& t, const Int& n, const PellPair& p, const char* who) {
  if (t < 1) throw std::invalid_argument(std::string(who) + ": t must be >= 1");
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
  if (p.a < 1 || p.b < 1)
    throw std::invalid_argument(std::string(who) + ": Pell pair must be positive");
  if (p.a * p.a - t * (n - 1) * p.b * p.b != -1)
    throw std::invalid_argument(std::string(who) +
                                ": pair does not solve X^2 - t(n-1)Y^2 = -1");
}

}  // namespace

Mat2 ns_involution(const Int& t, const Int& n, const PellPair& p) {
  check_pair(t, n, p, "ns_involution");
  const Int &a = p.a, &b = p.b;
  Mat2 M;
  M << 2 * a * a + 1, -2 * (n - 1) * a * b,
       2 * t * a * b, -2 * a * a - 1;
  return M;
}

Mat3 mukai_extension(const Int& t, const Int& n, const PellPair& p) {
  check_pair(t, n, p, "mukai_extension");
  const Int &a = p.a, &b = p.b;
  const Int nm1 = n - 1;
  Mat3 T;
  T << -a * a,             -2 * t * a * b,       -t * b * b,
       nm1 * a * b,        2 * a * a + 1,        a * b,
       -nm1 * nm1 * t * b * b, -2 * t * nm1 * a * b, -a * a;
  return T;
}

Mat32 ns_embedding(const Int& n) {
  if (n < 2) throw std::invalid_argument("ns_embedding: n must be >= 2");
  Mat32 E;
  E << 0, 1,
       -1, 0,
       0, n - 1;
  return E;
}

bool restriction_consistent(const Mat3& tau, const Mat2& M, const Int& n) {
  const Mat32 E = ns_embedding(n);
  return (tau * E).eval() == (E * M).eval();
}

}  // namespace hilbk3
