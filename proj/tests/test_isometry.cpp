#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbk3/isometry.hpp"

using namespace hilbk3;

namespace {

Mat2 m2(long a, long b, long c, long d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("frozen involutions on NS") {
  CHECK(ns_involution(2, 2, {1, 1, -1}) == m2(3, -2, 4, -3));
  CHECK(ns_involution(5, 2, {2, 1, -1}) == m2(9, -4, 20, -9));
  CHECK(ns_involution(5, 3, {3, 1, -1}) == m2(19, -12, 30, -19));
}

TEST_CASE("frozen extension to the Mukai lattice") {
  Mat3 tau;
  tau << -1, -4, -2, 1, 3, 1, -2, -4, -1;
  CHECK(mukai_extension(2, 2, {1, 1, -1}) == tau);
}

TEST_CASE("rejects pairs that do not solve the equation") {
  CHECK_THROWS_AS(ns_involution(2, 2, {1, 2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(ns_involution(2, 3, {1, 1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(ns_involution(2, 2, {-1, -1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(mukai_extension(5, 2, {1, 1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(ns_involution(0, 2, {1, 1, -1}), std::invalid_argument);
}

TEST_CASE("verify_isometry and verify_involution") {
  auto g = ns_gram(2, 2);
  Mat2 M = ns_involution(2, 2, {1, 1, -1});
  CHECK(verify_isometry(M, g.gram));
  CHECK(verify_involution(M));
  CHECK(verify_isometry(Mat2::Identity(), g.gram));

  Mat2 shear = m2(1, 1, 0, 1);
  CHECK_FALSE(verify_isometry(shear, g.gram));
  CHECK_FALSE(verify_involution(shear));

  Mat3 tau = mukai_extension(2, 2, {1, 1, -1});
  CHECK(verify_isometry(tau, mukai_gram(Surface{2})));
  CHECK(verify_involution(tau));

  // dynamic-size dimension mismatch is an error, not a false
  MatX bad = MatX::Identity(2, 3);
  MatX g3 = MatX::Identity(3, 3);
  CHECK_THROWS_AS(verify_isometry(bad, g3), std::invalid_argument);
  CHECK_THROWS_AS(verify_involution(bad), std::invalid_argument);
}

TEST_CASE("embedding and restriction") {
  Mat32 e = ns_embedding(6);
  CHECK(e(0, 0) == 0);
  CHECK(e(1, 0) == -1);
  CHECK(e(2, 0) == 0);
  CHECK(e(0, 1) == 1);
  CHECK(e(1, 1) == 0);
  CHECK(e(2, 1) == 5);

  Mat3 tau = mukai_extension(2, 2, {1, 1, -1});
  Mat2 M = ns_involution(2, 2, {1, 1, -1});
  CHECK(restriction_consistent(tau, M, 2));
  CHECK_FALSE(restriction_consistent(Mat3::Identity(), M, 2));
}

TEST_CASE("full verification sweep over a window") {
  for (Int t = 2; t <= 15; ++t) {
    for (Int n = 2; n <= 15; ++n) {
      auto res = solve_neg_pell(t * (n - 1));
      if (res.status != NegPellStatus::Solvable) continue;
      const auto& p = *res.pair;
      Mat2 M = ns_involution(t, n, p);
      Mat3 tau = mukai_extension(t, n, p);
      CHECK(verify_isometry(M, ns_gram(t, n).gram));
      CHECK(verify_involution(M));
      CHECK(M.determinant() == -1);
      Surface surf{t};
      CHECK(verify_isometry(tau, mukai_gram(surf)));
      CHECK(verify_involution(tau));
      CHECK(tau.determinant() == -1);
      CHECK(restriction_consistent(tau, M, n));
      // fixes the ideal sheaf class
      Vec3 vn = to_vec3(ideal_sheaf_vector(n));
      CHECK((tau * vn).eval() == vn);
    }
  }
}
