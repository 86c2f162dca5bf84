#include "doctest.h"
#include "ncqm/operators.hpp"
#include "ncqm/reps.hpp"

using namespace ncqm;
using namespace ncqm::op;
using grid::cplx;
using grid::GridFunction;
using grid::GridSpec;

namespace {
const GridSpec kSpec(128, 10.0);
const cplx I(0, 1);

double residual_vs(const GridFunction& got, const GridFunction& want) {
  GridFunction d = got;
  for (size_t i = 0; i < d.values().size(); ++i) d.values()[i] -= want.values()[i];
  return grid::norm(d);
}
}  // namespace

TEST_CASE("canonical pair on probes") {
  const auto probes = standard_probes(kSpec);
  const LinearOp x1 = mul_coord(0);
  const LinearOp p1 = scaled(-I, spectral_derivative(0));
  const LinearOp p2 = scaled(-I, spectral_derivative(1));
  for (const auto& f : probes) {
    GridFunction want = f;
    for (auto& v : want.values()) v *= I;
    CHECK(residual_vs(commutator(x1, p1, f), want) < 1e-10);
    GridFunction zero(kSpec);
    CHECK(residual_vs(commutator(p1, p2, f), zero) < 1e-10);
  }
}

TEST_CASE("oscillator realization brackets") {
  const auto nc = ncqm_ops(1.0, 1.0);
  const auto probes = standard_probes(kSpec);
  // [Q1, Q2] = i theta
  for (const auto& f : probes) {
    GridFunction want = f;
    for (auto& v : want.values()) v *= I;  // theta = 1
    CHECK(residual_vs(commutator(nc.q1, nc.q2, f), want) / grid::norm(f) < 1e-8);
  }
  // [M, P1] = i P2
  const auto& f = probes[1];
  GridFunction want = nc.p2.apply(f);
  for (auto& v : want.values()) v *= I;
  CHECK(residual_vs(commutator(nc.mrot, nc.p1, f), want) / grid::norm(f) < 1e-8);

  // commuting limit
  const auto nc0 = ncqm_ops(1.0, 0.0);
  GridFunction zero(kSpec);
  CHECK(residual_vs(commutator(nc0.q1, nc0.q2, f), zero) < 1e-10);
}

TEST_CASE("noncanonical positions equal the direct realization") {
  const double theta = 0.42;
  const auto nc = ncqm_ops(1.0, theta);
  const auto [qh1, qh2] = noncanonical_positions(theta);
  const auto probes = standard_probes(kSpec);
  for (const auto& f : probes) {
    CHECK(residual_vs(qh1.apply(f), nc.q1.apply(f)) < 1e-10);
    CHECK(residual_vs(qh2.apply(f), nc.q2.apply(f)) < 1e-10);
  }
  const auto [q01, q02] = noncanonical_positions(0.0);
  const auto f = probes[0];
  CHECK(residual_vs(q01.apply(f), mul_coord(0).apply(f)) == 0.0);
}

TEST_CASE("extension generator tables") {
  const auto probes = standard_probes(kSpec);
  const double a = 1.2, b = 0.8, c = 0.6;
  for (auto pic : {Picture::s_space, Picture::x_space}) {
    const auto ops = double_ext_ops(a, b, pic);
    const auto rep = bracket_table_check(
        {{"qp11", ops.q1, ops.p1, I * a, {}},
         {"qq", ops.q1, ops.q2, -I * b, {}},
         {"pp", ops.p1, ops.p2, 0.0, {}}},
        probes);
    CHECK(rep.worst < 1e-8);
  }
  const auto t = triple_ext_ops(a, b, c);
  const auto rep3 = bracket_table_check(
      {{"qp11", t.q1, t.p1, I * a, {}},
       {"qp22", t.q2, t.p2, I * a, {}},
       {"qq", t.q1, t.q2, -I * b, {}},
       {"pp", t.p1, t.p2, -I * c, {}}},
      probes);
  CHECK(rep3.worst < 1e-8);

  // the alpha-scaled first momentum breaks the pairing bracket away from alpha=1
  const auto ts = triple_ext_ops(1.5, b, c, true);
  const auto bad = bracket_table_check({{"qp11", ts.q1, ts.p1, I * 1.5, {}}}, {probes[0]});
  CHECK(bad.worst > 0.1);
}

TEST_CASE("bracket checker flags a wrong sign") {
  const auto nc = ncqm_ops(1.0, 0.5);
  const auto probes = standard_probes(kSpec);
  const auto rep = bracket_table_check({{"wrong", nc.q1, nc.p1, -I, {}}}, probes);
  CHECK(rep.worst > 0.5);
  CHECK(rep.results[0].label == "wrong");
}

TEST_CASE("generator extraction converges at second order") {
  const auto f = grid::gaussian(kSpec, {}, 1.0);
  auto family = [&f](double t) {  // e^{i t} f
    GridFunction g = f;
    for (auto& v : g.values()) v *= std::polar(1.0, t);
    return g;
  };
  GridFunction want = f;
  for (auto& v : want.values()) v = -v;  // i d/dt e^{it} = -1
  const double e1 = residual_vs(generator_from_rep(family, 0.2), want);
  const double e2 = residual_vs(generator_from_rep(family, 0.1), want);
  CHECK(std::log2(e1 / e2) > 1.9);
  const double er = residual_vs(generator_from_rep(family, 0.1, true), want);
  CHECK(er < e2 / 10.0);
}

TEST_CASE("operators are linear on probes") {
  const auto nc = ncqm_ops(1.0, 0.7);
  const auto f = grid::gaussian(kSpec, {}, 1.0);
  const auto g = grid::gaussian(kSpec, {0.8, -0.4}, 0.7);
  const cplx a(0.6, -0.3), b(-1.1, 0.2);
  for (const LinearOp* o : {&nc.q1, &nc.p2, &nc.h, &nc.mrot}) {
    GridFunction combo = f;
    for (size_t i = 0; i < combo.values().size(); ++i)
      combo.values()[i] = a * f.values()[i] + b * g.values()[i];
    const GridFunction lhs = o->apply(combo);
    const GridFunction of = o->apply(f), og = o->apply(g);
    GridFunction rhs = of;
    for (size_t i = 0; i < rhs.values().size(); ++i)
      rhs.values()[i] = a * of.values()[i] + b * og.values()[i];
    CHECK(residual_vs(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("adjoint defect of symmetric operators is tiny") {
  const auto probes = standard_probes(kSpec);
  CHECK(adjoint_defect(mul_coord(0), probes) < 1e-14);
  CHECK(adjoint_defect(scaled(-I, spectral_derivative(1)), probes) < 1e-12);
  // a plainly non-symmetric operator is caught
  CHECK(adjoint_defect(spectral_derivative(0), probes) > 1e-3);
}
