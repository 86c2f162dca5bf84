#include "doctest.h"
#include "ncqm/coadjoint.hpp"

using namespace ncqm;
using namespace ncqm::coad;

TEST_CASE("identity acts trivially") {
  const DualVector f{{0.3, -0.7, 1.1, 0.2, 0.9, -0.4}};
  const auto e = grp::TransElement::doubly(0, 0, {}, {}, 1.0, 1.0);
  const auto moved = coadjoint_act(e, f);
  CHECK(moved.x == f.x);
  CHECK(coadjoint_matrix_check(e, f) == 0.0);
}

TEST_CASE("worked double-extension action") {
  // only p1 = 2 nonzero, alpha = beta = 1, F = (0,0,0,0,1,1)
  const auto g = grp::TransElement::doubly(0, 0, {0, 0}, {2, 0}, 1.0, 1.0);
  const DualVector f{{0, 0, 0, 0, 1, 1}};
  const auto moved = coadjoint_act(g, f);
  CHECK(moved.x[0] == doctest::Approx(0.0));
  CHECK(moved.x[1] == doctest::Approx(-1.0));
  CHECK(moved.x[2] == doctest::Approx(1.0));
  CHECK(moved.x[3] == doctest::Approx(0.0));
  CHECK(moved.x[4] == 1.0);
  CHECK(moved.x[5] == 1.0);
}

TEST_CASE("invariants read off the central coordinates") {
  const DualVector f{{1, 2, 3, 4, 5, 6}};
  const auto lbl = invariants(f);
  CHECK(lbl.rho == 5.0);
  CHECK(lbl.sigma == 6.0);
  CHECK(!lbl.tau.has_value());
  const DualVector f3{{0, 0, 0, 0, 1.5, -0.5, 2.5}};
  const auto lbl3 = invariants(f3);
  REQUIRE(lbl3.tau.has_value());
  CHECK(*lbl3.tau == 2.5);
}

TEST_CASE("conjugation oracle agrees with the closed form") {
  Rng rng(23);
  for (int s = 0; s < 100; ++s) {
    const auto g2 = grp::TransElement::doubly(rng.uniform(), rng.uniform(), rng.vec2(),
                                              rng.vec2(), 1.3, 0.6);
    DualVector f{{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform(),
                  rng.uniform()}};
    CHECK(coadjoint_matrix_check(g2, f) < 1e-12);
    const auto g3 = grp::TransElement::triply(rng.uniform(), rng.uniform(), rng.uniform(),
                                              rng.vec2(), rng.vec2(), 1.3, 0.6, 0.8);
    DualVector f3{{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform(),
                   rng.uniform(), rng.uniform()}};
    CHECK(coadjoint_matrix_check(g3, f3) < 1e-12);
  }
}

TEST_CASE("orbit representative and rank") {
  // already at the representative: the solver returns the identity
  const DualVector rep{{0, 0, 0, 0, 1.5, -2.0}};
  const auto e = orbit_zero_section(rep, 1.0, 1.0);
  CHECK(std::abs(e.q.x) < 1e-14);
  CHECK(std::abs(e.p.y) < 1e-14);

  const DualVector f{{1, 0, 0, 0, 1, 1}};
  const auto g = orbit_zero_section(f, 1.0, 1.0);
  const auto img = coadjoint_act(g, f);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(img.x[i]) < 1e-12);

  DualVector f3{{0.4, -0.2, 0.9, 1.1, 0.8, -0.6, 1.2}};
  const auto g3 = orbit_zero_section(f3, 1.0, 0.7, 0.5);
  const auto img3 = coadjoint_act(g3, f3);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(img3.x[i]) < 1e-12);

  const DualVector degenerate{{1, 0, 0, 0, 0.0, 1}};
  CHECK_THROWS_AS(orbit_zero_section(degenerate, 1.0, 1.0), std::invalid_argument);

  CHECK(orbit_jacobian_rank(rep, 1.0, 1.0) == 4);
  const DualVector flat{{0, 0, 0, 0, 0.0, 1.0}};
  CHECK(orbit_jacobian_rank(flat, 1.0, 1.0) < 4);
}
