#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbk3/isometry.hpp"
#include "hilbk3/lattice.hpp"
#include "hilbk3/pell.hpp"

#include <cstdint>

using namespace hilbk3;

namespace {

// deterministic small integers in [-50, 50]
struct Lcg {
  std::uint64_t s = 0x2545F4914F6CDD1Dull;
  Int next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return Int(static_cast<long>((s >> 33) % 101)) - 50;
  }
};

}  // namespace

TEST_CASE("pairing on basis and standard classes") {
  Surface s2{2}, s5{5};
  CHECK(mukai_pairing({1, 0, -1}, {1, 0, -1}, s2) == 2);
  CHECK(mukai_pairing({0, 1, 0}, {0, 1, 0}, s2) == 4);
  CHECK(mukai_pairing({1, 0, 0}, {0, 0, 1}, s5) == -1);
  CHECK(mukai_pairing({0, 0, 0}, {3, 1, -4}, s5) == 0);
}

TEST_CASE("pairing is symmetric and bilinear") {
  Surface surf{7};
  Lcg g;
  for (int i = 0; i < 200; ++i) {
    MukaiVector u{g.next(), g.next(), g.next()};
    MukaiVector v{g.next(), g.next(), g.next()};
    MukaiVector w{g.next(), g.next(), g.next()};
    Int c = g.next();
    CHECK(mukai_pairing(u, v, surf) == mukai_pairing(v, u, surf));
    CHECK(mukai_pairing(u + v, w, surf) ==
          mukai_pairing(u, w, surf) + mukai_pairing(v, w, surf));
    CHECK(mukai_pairing(c * u, w, surf) == Int(c * mukai_pairing(u, w, surf)));
  }
}

TEST_CASE("ideal sheaf vector") {
  CHECK(ideal_sheaf_vector(2) == MukaiVector{1, 0, -1});
  CHECK(ideal_sheaf_vector(6) == MukaiVector{1, 0, -5});
  CHECK(mukai_pairing(ideal_sheaf_vector(3), ideal_sheaf_vector(3), Surface{5}) == 4);
  for (Int n = 2; n <= 200; ++n) {
    CHECK(mukai_pairing(ideal_sheaf_vector(n), ideal_sheaf_vector(n), Surface{3}) ==
          Int(2 * (n - 1)));
  }
  CHECK_THROWS_AS(ideal_sheaf_vector(1), std::invalid_argument);
}

TEST_CASE("gram matrices") {
  Mat3 g = mukai_gram(Surface{5});
  CHECK(g(1, 1) == 10);
  CHECK(g(0, 2) == -1);
  CHECK(g(2, 0) == -1);
  CHECK(g(0, 0) == 0);
  // pairing agrees with the bilinear form of the gram matrix
  Lcg rnd;
  Surface surf{5};
  for (int i = 0; i < 50; ++i) {
    MukaiVector v{rnd.next(), rnd.next(), rnd.next()};
    MukaiVector w{rnd.next(), rnd.next(), rnd.next()};
    Int via_gram = (to_vec3(v).transpose() * g * to_vec3(w))(0);
    CHECK(mukai_pairing(v, w, surf) == via_gram);
  }

  NsGram ns = ns_gram(2, 6);
  CHECK(ns.gram(0, 0) == 4);
  CHECK(ns.gram(1, 1) == -10);
  CHECK(ns.gram(0, 1) == 0);
  CHECK_THROWS_AS(ns_gram(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ns_gram(2, 1), std::invalid_argument);
}

TEST_CASE("discriminant action of produced involutions is trivial") {
  // t=2, n=2: M = [[3,-2],[4,-3]], modulus 2, c = -3 = 1 mod 2, glue 0
  auto g22 = ns_gram(2, 2);
  auto act22 = discriminant_action(ns_involution(2, 2, {1, 1, -1}), g22);
  CHECK(act22.modulus == 2);
  CHECK(act22.multiplier == 1);
  REQUIRE(act22.glue_class.has_value());
  CHECK(*act22.glue_class == 0);
  CHECK(act22.acts_trivially());

  // t=5, n=3: modulus 4, c = -19 = 1 mod 4
  auto g53 = ns_gram(5, 3);
  auto act53 = discriminant_action(ns_involution(5, 3, {3, 1, -1}), g53);
  CHECK(act53.modulus == 4);
  CHECK(act53.multiplier == 1);
  REQUIRE(act53.glue_class.has_value());
  CHECK(*act53.glue_class == 0);
  CHECK(act53.acts_trivially());
}

TEST_CASE("discriminant action of the identity and of non-involutions") {
  auto g = ns_gram(3, 4);
  auto act = discriminant_action(Mat2::Identity(), g);
  CHECK(act.multiplier == 1);
  CHECK(act.acts_trivially());

  // -identity is an isometry but multiplies the generator by -1
  Mat2 neg = -Mat2::Identity();
  auto actn = discriminant_action(neg, g);
  CHECK(actn.multiplier == mod_floor(-1, Int(6)));
  CHECK_FALSE(actn.acts_trivially());

  // a shear is not an isometry of diag(2t, -2(n-1))
  Mat2 shear;
  shear << 1, 1, 0, 1;
  CHECK_THROWS_AS(discriminant_action(shear, g), std::invalid_argument);
}

TEST_CASE("multiplier is 1 for every produced matrix in the window") {
  for (Int t = 2; t <= 50; ++t) {
    for (Int n = 2; n <= 50; ++n) {
      auto res = solve_neg_pell(t * (n - 1));
      if (res.status != NegPellStatus::Solvable) continue;
      auto g = ns_gram(t, n);
      auto act = discriminant_action(ns_involution(t, n, *res.pair), g);
      CHECK(act.multiplier == mod_floor(1, act.modulus));
      REQUIRE(act.glue_class.has_value());
      CHECK(*act.glue_class == 0);
    }
  }
}
