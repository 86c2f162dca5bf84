#include "doctest.h"
#include "ncqm/coherent.hpp"
#include "ncqm/reps.hpp"

using namespace ncqm;
using namespace ncqm::cs;
using grid::cplx;
using grid::GridFunction;
using grid::GridSpec;

namespace {
// moderate sizes keep the unit tests quick; the suites run the defaults
const GridSpec kSpec(64, 10.0);
const grp::GalileiParams kParams(1.0, 0.5);

double rel(const GridFunction& a, const GridFunction& b) {
  GridFunction d = a;
  for (size_t i = 0; i < d.values().size(); ++i) d.values()[i] -= b.values()[i];
  return grid::norm(d) / grid::norm(b);
}
}  // namespace

TEST_CASE("section through phase space") {
  const auto e = section_beta({}, {}, 1.0);
  CHECK(e.v.x == 0.0);
  CHECK(e.a.x == 0.0);
  const auto b = section_beta({0.3, -0.4}, {2.0, 0.0}, 2.0);
  CHECK(b.v.x == doctest::Approx(1.0));
  CHECK(b.v.y == 0.0);
  CHECK(b.a.x == doctest::Approx(0.3));
  CHECK(b.theta == 0.0);
  CHECK(b.b == 0.0);
}

TEST_CASE("fiducial is rotationally invariant and unit normalized") {
  const auto fid = Fiducial::unit_gaussian(kSpec);
  CHECK(fid.dihedral_asymmetry() == 0.0);
  CHECK(std::abs(grid::norm(fid.eta) - 1.0) < 1e-10);
  CHECK(fid.normalization == doctest::Approx(1.0 / std::sqrt(M_PI)));
}

TEST_CASE("coherent states are the section translates of the fiducial") {
  const auto fid = Fiducial::unit_gaussian(kSpec);
  const Vec2 qs[] = {{0, 0}, {1.2, -0.8}, {-0.5, 0.9}};
  const Vec2 ps[] = {{0, 0}, {0.7, 1.1}, {-1.3, 0.2}};
  for (const auto& q : qs) {
    for (const auto& p : ps) {
      const auto st = coherent_state(fid, q, p, kParams);
      const auto via_rep =
          rep::apply_galilei_config(section_beta(q, p, kParams.m), fid.eta, kParams);
      double d = 0.0;
      for (size_t i = 0; i < st.values().size(); ++i)
        d = std::max(d, std::abs(st.values()[i] - via_rep.values()[i]));
      CHECK(d < 1e-10);  // covariance, pointwise
      CHECK(std::abs(grid::norm(st) - grid::norm(fid.eta)) < 1e-10);
    }
  }
  // (q,p) = 0 gives the fiducial itself
  const auto st0 = coherent_state(fid, {}, {}, kParams);
  CHECK(rel(st0, fid.eta) < 1e-14);
}

TEST_CASE("flat limit of the coherent states") {
  const auto fid = Fiducial::unit_gaussian(kSpec);
  const Vec2 q{1.0, -0.5}, p{0.8, 0.6};
  const auto flat = coherent_state(fid, q, p, grp::GalileiParams(1.0, 0.0));
  double prev = 1e9;
  for (double lam : {0.4, 0.2, 0.1}) {
    GridFunction d = coherent_state(fid, q, p, grp::GalileiParams(1.0, lam));
    for (size_t i = 0; i < d.values().size(); ++i) d.values()[i] -= flat.values()[i];
    const double n = grid::norm(d);
    CHECK(n < prev);
    prev = n;
  }
  CHECK(prev < 0.1);
  // the flat state is the canonical coherent state e^{i(x+q/2).p} eta(x+q)
  const auto direct = [&] {
    GridFunction st(kSpec);
    for (int i = 0; i < kSpec.n; ++i)
      for (int j = 0; j < kSpec.n; ++j) {
        const double x1 = kSpec.x(i), x2 = kSpec.x(j);
        st.at(i, j) = std::polar(1.0 / std::sqrt(M_PI), (x1 + q.x / 2) * p.x + (x2 + q.y / 2) * p.y) *
                      std::exp(-0.5 * ((x1 + q.x) * (x1 + q.x) + (x2 + q.y) * (x2 + q.y)));
      }
    return st;
  }();
  CHECK(rel(flat, direct) < 1e-12);
}

TEST_CASE("resolution of the identity on a small quadrature") {
  const auto fid = Fiducial::unit_gaussian(kSpec);
  const PhaseGrid pg(14, 6.0, 14, 6.0);
  const auto f = grid::gaussian(kSpec, {0.4, 0.1}, 1.0);
  const auto g = grid::gaussian(kSpec, {-0.3, 0.5}, 0.9);
  const auto res = resolution_check(fid, f, g, pg, kParams);
  const double expect = 4.0 * M_PI * M_PI;  // (2 pi)^2 |eta|^2 with a unit fiducial
  CHECK(std::abs(res.ratio.real() - expect) / expect < 0.01);
  CHECK(std::abs(res.ratio.imag()) < 0.05);

  // orthogonal pair: the integral vanishes with <f|g>
  const auto odd = grid::hermite_probe(kSpec, {}, 1.0);
  const auto res0 = resolution_check(fid, grid::gaussian(kSpec, {}, 1.0), odd, pg, kParams);
  CHECK(std::abs(res0.lhs) < 1e-3);

  // the batched variant agrees with the single-pair one
  const auto multi = resolution_pairs(fid, {f, g}, {{0, 1}}, pg, kParams);
  CHECK(std::abs(multi[0].lhs - res.lhs) < 1e-12 * std::abs(res.lhs));
}

TEST_CASE("quantizer reproduces the flat momenta and the shifted positions") {
  const auto fid = Fiducial::unit_gaussian(kSpec);
  const PhaseGrid pg(14, 6.0, 14, 6.0);
  const Quantizer qz(fid, pg, kParams);
  CHECK(qz.identity_scale() == doctest::Approx(4.0 * M_PI * M_PI).epsilon(0.01));

  const auto g = grid::gaussian(kSpec, {0.2, -0.3}, 1.0);
  const auto one = qz.apply(Symbol::one(), g);
  CHECK(rel(one, g) < 0.01);

  const auto op1 = qz.apply(Symbol::coord_p(0), g);
  GridFunction want = grid::derivative(g, 0);
  for (auto& v : want.values()) v *= cplx(0, -1);
  CHECK(rel(op1, want) < 0.01);

  const auto oq1 = qz.apply(Symbol::coord_q(0), g);
  const double c = 0.5 * kParams.lambda / (kParams.m * kParams.m);
  GridFunction wq = g;
  const GridFunction d2 = grid::derivative(g, 1);
  for (int i = 0; i < kSpec.n; ++i)
    for (int j = 0; j < kSpec.n; ++j)
      wq.at(i, j) = kSpec.x(i) * g.at(i, j) + cplx(0, c) * d2.at(i, j);
  CHECK(rel(oq1, wq) < 0.01);
}

TEST_CASE("fast correlation path tracks the direct quadrature") {
  const auto fid = Fiducial::unit_gaussian(kSpec);
  const PhaseGrid pg(12, 6.0, 12, 6.0);
  const auto g = grid::gaussian(kSpec, {0.3, 0.2}, 1.0);
  const Quantizer direct(fid, pg, kParams, false);
  const Quantizer fast(fid, pg, kParams, true);
  CHECK(rel(fast.apply(Symbol::coord_q(0), g), direct.apply(Symbol::coord_q(0), g)) < 1e-3);
  const auto f2 = grid::gaussian(kSpec, {-0.4, 0.6}, 0.9);
  const auto r_direct = resolution_check(fid, g, f2, pg, kParams, false);
  const auto r_fast = resolution_check(fid, g, f2, pg, kParams, true);
  CHECK(std::abs(r_fast.lhs - r_direct.lhs) / std::abs(r_direct.lhs) < 1e-3);
}

TEST_CASE("region operators: positivity, additivity, empty region") {
  const auto fid = Fiducial::unit_gaussian(kSpec);
  const PhaseGrid pg(10, 6.0, 10, 6.0);
  const Quantizer qz(fid, pg, kParams);
  PhaseRect box;
  box.q_lo = {-1.2, -1.2};
  box.q_hi = {1.2, 1.2};
  box.p_lo = {-1.2, -1.2};
  box.p_hi = {1.2, 1.2};
  const auto a = qz.pov_operator(box);
  const auto f = grid::gaussian(kSpec, {0.4, 0.0}, 1.0);
  CHECK(grid::inner(f, a.apply(f)).real() >= -1e-13);

  PhaseRect left = box, right = box;
  left.q_hi.x = 0.0;
  right.q_lo.x = 0.0;
  GridFunction sum = qz.pov_operator(left).apply(f);
  const auto rf = qz.pov_operator(right).apply(f);
  for (size_t i = 0; i < sum.values().size(); ++i) sum.values()[i] += rf.values()[i];
  CHECK(rel(sum, a.apply(f)) < 1e-10);

  const auto zero = qz.pov_operator(PhaseRect::empty()).apply(f);
  CHECK(grid::norm(zero) == 0.0);
}

TEST_CASE("phase grid bookkeeping") {
  CHECK_THROWS_AS(PhaseGrid(1, 6.0, 10, 6.0), std::invalid_argument);
  const PhaseGrid pg(8, 3.0, 6, 2.0);
  CHECK(pg.node_count() == 8 * 8 * 6 * 6);
  CHECK(pg.weight() * static_cast<double>(pg.node_count()) ==
        doctest::Approx(pg.volume()).epsilon(1e-12));
  CHECK(pg.qnode(0) == doctest::Approx(-3.0 + 0.375));
}
