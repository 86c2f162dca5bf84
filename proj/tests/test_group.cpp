#include "doctest.h"
#include "ncqm/group.hpp"

using namespace ncqm;
using namespace ncqm::grp;

namespace {
GalileiElement make(double th, double ph, double angle, double b, Vec2 v, Vec2 a) {
  GalileiElement g;
  g.theta = th;
  g.phi = ph;
  g.rot.angle = angle;
  g.b = b;
  g.v = v;
  g.a = a;
  return g;
}
}  // namespace

TEST_CASE("mass cocycle on worked examples") {
  const auto r = make(0, 0, 0, 0, {1, 0}, {0, 0});
  const auto r2 = make(0, 0, 0, 0, {0, 0}, {1, 0});
  CHECK(galilei_cocycle1(r, r2, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));

  const auto any = make(0.3, -0.2, 0.7, 1.1, {0.4, -0.9}, {1.2, 0.1});
  CHECK(galilei_cocycle1(any, GalileiElement::identity(), 1.7) == 0.0);
  CHECK(galilei_cocycle1(GalileiElement::identity(), any, 1.7) == 0.0);

  const auto s = make(0, 0, 0, 1, {1, 1}, {1, 1});
  CHECK(galilei_cocycle1(s, s, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("second cocycle on worked examples") {
  const auto r = make(0, 0, 0, 0, {1, 0}, {});
  const auto r2 = make(0, 0, 0, 0, {0, 1}, {});
  CHECK(galilei_cocycle2(r, r2, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(galilei_cocycle2(r, make(0, 0, 0, 0, {0, 0}, {2, 2}), 3.0) == 0.0);

  const auto rot = make(0, 0, M_PI / 2, 0, {1, 0}, {});
  const auto r3 = make(0, 0, 0, 0, {1, 0}, {});
  CHECK(galilei_cocycle2(rot, r3, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("composition picks up the cocycle phases") {
  const GalileiParams params(1.0, 1.0);
  const auto g = make(0, 0, 0, 0, {1, 0}, {0, 0});
  const auto g2 = make(0, 0, 0, 0, {0, 0}, {1, 0});
  const auto prod = compose(g, g2, params);
  CHECK(prod.theta == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(prod.phi == 0.0);
  CHECK(prod.v.x == 1.0);
  CHECK(prod.a.x == 1.0);
  CHECK(prod.b == 0.0);

  // neutral element and inverse
  const auto any = make(0.4, -1.1, 0.9, 0.6, {0.8, -0.3}, {1.5, -0.7});
  const auto e = GalileiElement::identity();
  const auto ge = compose(any, e, params);
  CHECK(ge.theta == doctest::Approx(any.theta));
  CHECK(ge.a.y == doctest::Approx(any.a.y));
  const auto gi = compose(any, inverse(any, params), params);
  CHECK(std::abs(gi.theta) < 1e-13);
  CHECK(std::abs(gi.phi) < 1e-13);
  CHECK(std::abs(gi.v.x) < 1e-13);
  CHECK(std::abs(gi.a.x) < 1e-13);
  const auto ig = compose(inverse(any, params), any, params);
  CHECK(std::abs(ig.theta) < 1e-13);
  CHECK(std::abs(ig.a.y) < 1e-13);
}

TEST_CASE("pure translations invert by sign flip") {
  const GalileiParams params(2.0, 0.7);
  const auto t = make(0, 0, 0, 0, {}, {1.5, -2.5});
  const auto ti = inverse(t, params);
  CHECK(ti.a.x == -1.5);
  CHECK(ti.a.y == 2.5);
  CHECK(ti.theta == 0.0);
  CHECK(ti.phi == 0.0);
  const auto ii = inverse(GalileiElement::identity(), params);
  CHECK(ii.a.x == 0.0);
  CHECK(ii.theta == 0.0);
}

TEST_CASE("doubly extended translations compose per the twisted law") {
  const auto g = TransElement::doubly(0, 0, {1, 0}, {0, 0}, 1.0, 1.0);
  const auto g2 = TransElement::doubly(0, 0, {0, 0}, {1, 0}, 1.0, 1.0);
  const auto prod = compose(g, g2);
  CHECK(prod.phase[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(prod.phase[1] == 0.0);

  const auto h = TransElement::doubly(0, 0, {0, 0}, {1, 0}, 1.0, 2.0);
  const auto h2 = TransElement::doubly(0, 0, {0, 0}, {0, 1}, 1.0, 2.0);
  const auto prod2 = compose(h, h2);
  CHECK(prod2.phase[0] == 0.0);
  CHECK(prod2.phase[1] == doctest::Approx(1.0).epsilon(1e-15));

  const auto e = TransElement::identity_like(g);
  const auto ge = compose(g, e);
  CHECK(ge.phase[0] == g.phase[0]);
  CHECK(ge.q.x == g.q.x);
}

TEST_CASE("triple extension adds the position wedge phase") {
  const auto g = TransElement::triply(0, 0, 0, {1, 0}, {}, 1.0, 1.0, 2.0);
  const auto g2 = TransElement::triply(0, 0, 0, {0, 1}, {}, 1.0, 1.0, 2.0);
  CHECK(compose(g, g2).phase[2] == doctest::Approx(1.0).epsilon(1e-15));

  Rng rng(11);
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    auto draw = [&rng]() {
      TransElement t;
      t.arity = 3;
      t.phase = {rng.uniform(), rng.uniform(), rng.uniform()};
      t.q = rng.vec2();
      t.p = rng.vec2();
      return t;
    };
    const auto a = draw(), b = draw(), c = draw();
    const auto lhs = compose(compose(a, b), c);
    const auto rhs = compose(a, compose(b, c));
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(lhs.phase[i] - rhs.phase[i]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("arity and extension mismatches are rejected") {
  const auto d = TransElement::doubly(0, 0, {}, {}, 1.0, 1.0);
  const auto t = TransElement::triply(0, 0, 0, {}, {}, 1.0, 1.0, 1.0);
  CHECK_THROWS_AS(compose(d, t), std::invalid_argument);
  auto d2 = d;
  d2.ext[1] = 3.0;
  CHECK_THROWS_AS(compose(d, d2), std::invalid_argument);
}

TEST_CASE("local exponent values") {
  const auto xi = LocalExponent::xi();
  const auto xip = LocalExponent::xi_prime();
  const auto xipp = LocalExponent::xi_dprime();
  const auto g = TransElement::doubly(0, 0, {1, 0}, {0, 0}, 1, 1);
  const auto g2 = TransElement::doubly(0, 0, {0, 0}, {1, 0}, 1, 1);
  CHECK(xi.eval(g, g2) == doctest::Approx(0.5).epsilon(1e-15));
  const auto h = TransElement::doubly(0, 0, {}, {1, 0}, 1, 1);
  const auto h2 = TransElement::doubly(0, 0, {}, {0, 1}, 1, 1);
  CHECK(xip.eval(h, h2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(xipp.eval(h, h) == 0.0);

  // linear combinations evaluate termwise
  const auto combo = LocalExponent::combination({{2.0, xi}, {-1.0, xip}});
  CHECK(combo.eval(g, g2) == doctest::Approx(2.0 * xi.eval(g, g2) - xip.eval(g, g2)));
}

TEST_CASE("exact rational evaluation agrees with the double path") {
  const std::array<Rational, 4> a = {Rational(1, 2), Rational(-3), Rational(2), Rational(0)};
  const std::array<Rational, 4> b = {Rational(1), Rational(1, 3), Rational(-1, 2), Rational(5)};
  // xi = (1/2)(q.p' - p.q')
  const Rational v0 = exact_exponent(0, a, b);
  const auto ga = TransElement::doubly(0, 0, {0.5, -3}, {2, 0}, 1, 1);
  const auto gb = TransElement::doubly(0, 0, {1, 1.0 / 3.0}, {-0.5, 5}, 1, 1);
  CHECK(v0.value() == doctest::Approx(LocalExponent::xi().eval(ga, gb)).epsilon(1e-15));
  CHECK(exact_exponent(0, a, b) == Rational(-69, 8));
  CHECK(exact_exponent(1, a, b).value() ==
        doctest::Approx(LocalExponent::xi_prime().eval(ga, gb)).epsilon(1e-15));
  CHECK_THROWS_AS(exact_exponent(7, a, b), std::invalid_argument);
}

TEST_CASE("exponent axioms hold, and a coboundary shift keeps them") {
  const auto xi = LocalExponent::xi();
  CHECK(check_exponent_axioms(xi, 2, 300, 5).worst() < 1e-10);

  // q1 q1' is the coboundary of q1^2/2: an equivalent exponent, not a defect
  const LocalExponent shifted{"xi + q1 q1'",
                              [xi](const TransElement& a, const TransElement& b) {
                                return xi.eval(a, b) + a.q.x * b.q.x;
                              }};
  CHECK(check_exponent_axioms(shifted, 2, 300, 5).worst() < 1e-10);

  // a cubic term breaks the composition identity
  const LocalExponent broken{"xi + q1^2 q1'",
                             [xi](const TransElement& a, const TransElement& b) {
                               return xi.eval(a, b) + a.q.x * a.q.x * b.q.x;
                             }};
  CHECK(check_exponent_axioms(broken, 2, 300, 5).worst() > 0.1);
  CHECK_THROWS_AS(check_exponent_axioms(xi, 2, 0, 5), std::invalid_argument);
}

TEST_CASE("witness reports degeneracy for equal exponents") {
  const auto w = antisymmetry_witness(LocalExponent::xi(), LocalExponent::xi(), 100);
  CHECK(w.degenerate);
  CHECK(w.max_difference == 0.0);
  const auto w2 = antisymmetry_witness(LocalExponent::xi(), LocalExponent::xi_prime(), 100);
  CHECK(!w2.degenerate);
  CHECK(w2.max_symmetric_part < 1e-12);
  CHECK(w2.max_difference > 0.1);
}

TEST_CASE("parameters validate") {
  CHECK_THROWS_AS(GalileiParams(-1.0, 0.5), std::invalid_argument);
  const auto p = GalileiParams::from_theta(2.0, 0.3);
  CHECK(p.lambda == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(p.theta() == doctest::Approx(0.3).epsilon(1e-15));
}
