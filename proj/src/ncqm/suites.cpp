#include "ncqm/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"
#include "ncqm/coadjoint.hpp"
#include "ncqm/coherent.hpp"
#include "ncqm/grid.hpp"
#include "ncqm/group.hpp"
#include "ncqm/matrep.hpp"
#include "ncqm/operators.hpp"
#include "ncqm/parallel.hpp"
#include "ncqm/reps.hpp"
#include "ncqm/wigner.hpp"

namespace ncqm::suite {

using grid::cplx;
using grid::GridFunction;
using grid::GridSpec;

int Report::failed() const {
  int n = 0;
  for (const auto& r : records)
    if (!r.pass) ++n;
  return n;
}

namespace {

struct Checker {
  std::string prefix;
  std::vector<CheckRecord>* out;
  std::vector<std::string>* details = nullptr;

  void detail(const nlohmann::json& j) {
    if (details) details->push_back(j.dump());
  }

  void le(const std::string& id, const std::string& ref, int crit, double measured, double tol,
          const std::string& note = "") {
    close(id, ref, crit, measured, 0.0, tol, note);
  }
  void close(const std::string& id, const std::string& ref, int crit, double measured,
             double expected, double tol, const std::string& note = "") {
    CheckRecord r;
    r.id = prefix + "." + id;
    r.ref = ref;
    r.criterion = crit;
    r.measured = measured;
    r.expected = expected;
    r.tolerance = tol;
    r.pass = std::abs(measured - expected) <= tol;
    r.note = note;
    out->push_back(std::move(r));
  }
  void ge(const std::string& id, const std::string& ref, int crit, double measured,
          double threshold, const std::string& note = "") {
    CheckRecord r;
    r.id = prefix + "." + id;
    r.ref = ref;
    r.criterion = crit;
    r.measured = measured;
    r.expected = threshold;
    r.tolerance = threshold;
    r.ge = true;
    r.pass = measured >= threshold;
    r.note = note;
    out->push_back(std::move(r));
  }
};

double vmax(double a, double b) { return std::max(a, b); }

grp::GalileiElement sample_galilei(Rng& rng) {
  grp::GalileiElement g;
  g.theta = rng.uniform();
  g.phi = rng.uniform();
  g.rot.angle = rng.uniform();
  g.b = rng.uniform();
  g.v = rng.vec2();
  g.a = rng.vec2();
  return g;
}

double galilei_distance(const grp::GalileiElement& a, const grp::GalileiElement& b) {
  double d = std::abs(a.theta - b.theta);
  d = vmax(d, std::abs(a.phi - b.phi));
  d = vmax(d, std::abs(a.rot.angle - b.rot.angle));
  d = vmax(d, std::abs(a.b - b.b));
  d = vmax(d, vmax(std::abs(a.v.x - b.v.x), std::abs(a.v.y - b.v.y)));
  d = vmax(d, vmax(std::abs(a.a.x - b.a.x), std::abs(a.a.y - b.a.y)));
  return d;
}

grp::TransElement sample_trans(Rng& rng, int arity, double alpha, double beta, double gamma) {
  grp::TransElement g;
  g.arity = arity;
  g.phase = {rng.uniform(), arity >= 2 ? rng.uniform() : 0.0, arity >= 3 ? rng.uniform() : 0.0};
  g.q = rng.vec2();
  g.p = rng.vec2();
  g.ext = {alpha, beta, gamma};
  return g;
}

double trans_distance(const grp::TransElement& a, const grp::TransElement& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d = vmax(d, std::abs(a.phase[i] - b.phase[i]));
  d = vmax(d, vmax(std::abs(a.q.x - b.q.x), std::abs(a.q.y - b.q.y)));
  d = vmax(d, vmax(std::abs(a.p.x - b.p.x), std::abs(a.p.y - b.p.y)));
  return d;
}

double rel_diff(const GridFunction& a, const GridFunction& b) {
  GridFunction d = a;
  for (size_t i = 0; i < d.values().size(); ++i) d.values()[i] -= b.values()[i];
  return grid::norm(d) / grid::norm(b);
}

// ------------------------------------------------------------------ group --

void suite_group(const cfg::RunConfig& cfg, Checker& ck) {
  const grp::GalileiParams params(cfg.m, cfg.lambda);
  Rng rng(cfg.seed);

  double assoc = 0.0, ident = 0.0, inv = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const auto g = sample_galilei(rng), h = sample_galilei(rng), k = sample_galilei(rng);
    assoc = vmax(assoc, galilei_distance(compose(compose(g, h, params), k, params),
                                         compose(g, compose(h, k, params), params)));
    const auto e = grp::GalileiElement::identity();
    ident = vmax(ident, galilei_distance(compose(g, e, params), g));
    ident = vmax(ident, galilei_distance(compose(e, g, params), g));
    inv = vmax(inv, galilei_distance(compose(g, inverse(g, params), params), e));
    inv = vmax(inv, galilei_distance(compose(inverse(g, params), g, params), e));
  }
  ck.le("galilei.associativity", "extended Galilei composition law", 1, assoc, 1e-12);
  ck.le("galilei.identity", "neutral element", 1, ident, 1e-12);
  ck.le("galilei.inverse", "inverse solves the composition law", 1, inv, 1e-12);

  for (int arity : {2, 3}) {
    double tassoc = 0.0, tident = 0.0, tinv = 0.0;
    for (int s = 0; s < 1000; ++s) {
      const auto g = sample_trans(rng, arity, cfg.alpha, cfg.beta, cfg.gamma);
      const auto h = sample_trans(rng, arity, cfg.alpha, cfg.beta, cfg.gamma);
      const auto k = sample_trans(rng, arity, cfg.alpha, cfg.beta, cfg.gamma);
      tassoc = vmax(tassoc, trans_distance(compose(compose(g, h), k), compose(g, compose(h, k))));
      const auto e = grp::TransElement::identity_like(g);
      tident = vmax(tident, trans_distance(compose(g, e), g));
      tident = vmax(tident, trans_distance(compose(e, g), g));
      tinv = vmax(tinv, trans_distance(compose(g, inverse(g)), e));
    }
    const std::string tag = arity == 2 ? "double" : "triple";
    ck.le(tag + ".associativity", "extended translation composition law", 1, tassoc, 1e-12);
    ck.le(tag + ".identity", "neutral element", 1, tident, 1e-12);
    ck.le(tag + ".inverse", "phases negate under inversion", 1, tinv, 1e-12);
  }

  // local exponent axioms
  const auto xi = grp::LocalExponent::xi();
  const auto xip = grp::LocalExponent::xi_prime();
  const auto xipp = grp::LocalExponent::xi_dprime();
  ck.le("axioms.xi", "phase-space pairing exponent", 2,
        grp::check_exponent_axioms(xi, 2, 500, cfg.seed).worst(), 1e-10);
  ck.le("axioms.xi_prime", "momentum wedge exponent", 2,
        grp::check_exponent_axioms(xip, 2, 500, cfg.seed + 1).worst(), 1e-10);
  ck.le("axioms.xi_dprime", "position wedge exponent", 2,
        grp::check_exponent_axioms(xipp, 2, 500, cfg.seed + 2).worst(), 1e-10);
  ck.le("axioms.galilei_mass", "mass cocycle", 2,
        grp::check_galilei_exponent_axioms(
            [&params](const grp::GalileiElement& a, const grp::GalileiElement& b) {
              return grp::galilei_cocycle1(a, b, params.m);
            },
            params, 500, cfg.seed + 3)
            .worst(),
        1e-10);
  ck.le("axioms.galilei_second", "second extension cocycle", 2,
        grp::check_galilei_exponent_axioms(
            [&params](const grp::GalileiElement& a, const grp::GalileiElement& b) {
              return grp::galilei_cocycle2(a, b, params.lambda);
            },
            params, 500, cfg.seed + 4)
            .worst(),
        1e-10);

  // negative control: a cubic perturbation is not an exponent. (A bilinear
  // term like q1 q1' is a coboundary and passes the axioms; see the unit
  // tests for that property.)
  const grp::LocalExponent corrupted{
      "xi + q1^2 q1'", [xi](const grp::TransElement& a, const grp::TransElement& b) {
        return xi.eval(a, b) + a.q.x * a.q.x * b.q.x;
      }};
  ck.ge("axioms.negative_control", "checker flags a non-exponent", 2,
        grp::check_exponent_axioms(corrupted, 2, 500, cfg.seed + 5).worst(), 0.1,
        "cubic corruption violates the composition identity");

  // pairwise inequivalence witnesses
  const std::pair<grp::LocalExponent, grp::LocalExponent> pairs[] = {
      {xi, xip}, {xip, xipp}, {xi, xipp}};
  const char* names[] = {"xi_vs_xi_prime", "xi_prime_vs_xi_dprime", "xi_vs_xi_dprime"};
  for (int i = 0; i < 3; ++i) {
    const auto w = grp::antisymmetry_witness(pairs[i].first, pairs[i].second, 200);
    ck.le(std::string("witness.") + names[i] + ".antisymmetry",
          "difference of exponents is antisymmetric", 2, w.max_symmetric_part, 1e-12);
    ck.ge(std::string("witness.") + names[i] + ".nonvanishing",
          "difference does not vanish (inequivalence)", 2, w.max_difference, 0.1);
  }
  const auto wdeg = grp::antisymmetry_witness(xi, xi, 200);
  ck.close("witness.degenerate_flagged", "equal exponents reported degenerate", 0,
           wdeg.degenerate ? 1.0 : 0.0, 1.0, 0.0);
}

// ----------------------------------------------------------------- matrix --

void suite_matrix(const cfg::RunConfig& cfg, Checker& ck) {
  Rng rng(cfg.seed);
  const double a = cfg.alpha, b = cfg.beta, c = cfg.gamma;

  double hom7 = 0.0, hom8 = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const auto g = sample_trans(rng, 2, a, b, 0), h = sample_trans(rng, 2, a, b, 0);
    hom7 = vmax(hom7, (matrep::group_mat7(g) * matrep::group_mat7(h) -
                       matrep::group_mat7(compose(g, h)))
                          .cwiseAbs()
                          .maxCoeff());
    const auto g3 = sample_trans(rng, 3, a, b, c), h3 = sample_trans(rng, 3, a, b, c);
    hom8 = vmax(hom8, (matrep::group_mat8(g3) * matrep::group_mat8(h3) -
                       matrep::group_mat8(compose(g3, h3)))
                          .cwiseAbs()
                          .maxCoeff());
  }
  ck.le("hom.double", "matrix model follows the double-extension law", 3, hom7, 1e-12);
  ck.le("hom.triple", "matrix model follows the triple-extension law", 3, hom8, 1e-12);

  double invres = 0.0;
  for (int s = 0; s < 100; ++s) {
    const auto g = sample_trans(rng, 3, a, b, c);
    invres = vmax(invres, (matrep::group_mat8(g).inverse() -
                           matrep::group_mat8(grp::inverse(g)))
                              .cwiseAbs()
                              .maxCoeff());
    const auto g2 = sample_trans(rng, 2, a, b, 0);
    invres = vmax(invres, (matrep::group_mat7(g2).inverse() -
                           matrep::group_mat7(grp::inverse(g2)))
                              .cwiseAbs()
                              .maxCoeff());
  }
  ck.le("hom.inverse", "matrix inverse matches the group inverse", 3, invres, 1e-10);

  // structure constants against the expected bracket tables (zero residual)
  auto expect = [](int dim, int i, int j, double alpha, double beta,
                   double gamma) -> std::vector<double> {
    std::vector<double> e(dim, 0.0);
    auto set = [&](int k, double v) { e[k] = v; };
    // basis order Q1 Q2 P1 P2 Theta Phi [Psi]
    if (i == 2 && j == 0) set(4, alpha);
    if (i == 0 && j == 2) set(4, -alpha);
    if (i == 3 && j == 1) set(4, alpha);
    if (i == 1 && j == 3) set(4, -alpha);
    if (i == 0 && j == 1) set(5, beta);
    if (i == 1 && j == 0) set(5, -beta);
    if (dim == 7 && i == 2 && j == 3) set(6, gamma);
    if (dim == 7 && i == 3 && j == 2) set(6, -gamma);
    return e;
  };
  for (int arity : {2, 3}) {
    const auto table = arity == 2 ? matrep::structure_constants(a, b)
                                  : matrep::structure_constants(a, b, c);
    double worst = 0.0;
    for (const auto& br : table.brackets) {
      const auto e = expect(table.dim, br.i, br.j, a, b, c);
      for (int k = 0; k < table.dim; ++k) worst = vmax(worst, std::abs(br.coeffs[k] - e[k]));
    }
    const std::string tag = arity == 2 ? "double" : "triple";
    ck.le("structure." + tag, "bracket table reproduced exactly", 3, worst, 0.0);
    ck.le("structure." + tag + ".span", "commutators stay in the basis span", 3,
          table.max_reexpression_residual, 0.0);
  }

  // nilpotency and the terminating series
  double nil = 0.0, explog = 0.0, oneparam = 0.0;
  for (int s = 0; s < 100; ++s) {
    std::vector<double> x6(6), x7(7);
    for (auto& v : x6) v = rng.uniform();
    for (auto& v : x7) v = rng.uniform();
    const auto m6 = matrep::algebra_mat(x6, a, b);
    const auto m7 = matrep::algebra_mat(x7, a, b, c);
    Eigen::MatrixXd p6 = Eigen::MatrixXd::Identity(7, 7), p7 = Eigen::MatrixXd::Identity(8, 8);
    for (int k = 0; k < 7; ++k) p6 = p6 * m6;
    for (int k = 0; k < 8; ++k) p7 = p7 * m7;
    nil = vmax(nil, vmax(p6.cwiseAbs().maxCoeff(), p7.cwiseAbs().maxCoeff()));
    const auto g = sample_trans(rng, 2, a, b, 0);
    const Eigen::MatrixXd gm = matrep::group_mat7(g);
    explog = vmax(explog,
                  (matrep::nilpotent_exp(matrep::unipotent_log(gm)) - gm).cwiseAbs().maxCoeff());
  }
  for (int dir = 0; dir < 6; ++dir) {
    const double t = rng.uniform();
    std::vector<double> x(6, 0.0);
    x[dir] = t;
    grp::TransElement g = grp::TransElement::doubly(0, 0, {}, {}, a, b);
    // basis order pairs Q<->p and P<->q
    if (dir == 0) g.p.x = t;
    if (dir == 1) g.p.y = t;
    if (dir == 2) g.q.x = t;
    if (dir == 3) g.q.y = t;
    if (dir == 4) g.phase[0] = t;
    if (dir == 5) g.phase[1] = t;
    oneparam = vmax(oneparam, (matrep::nilpotent_exp(matrep::algebra_mat(x, a, b)) -
                               matrep::group_mat7(g))
                                  .cwiseAbs()
                                  .maxCoeff());
  }
  ck.le("algebra.nilpotent", "algebra matrices are nilpotent", 3, nil, 0.0);
  ck.le("algebra.exp_log", "terminating series invert each other", 3, explog, 1e-12);
  ck.le("algebra.one_parameter", "exp of a basis direction is the subgroup matrix", 3, oneparam,
        1e-13);

  // abelian subgroup matrices
  double subadd = 0.0, subcomm = 0.0;
  for (int s = 0; s < 500; ++s) {
    const double t1 = rng.uniform(), f1 = rng.uniform(), t2 = rng.uniform(), f2 = rng.uniform();
    const Vec2 q1 = rng.vec2(), q2 = rng.vec2();
    const auto h1 = matrep::subgroup_mat7(t1, f1, q1, a);
    const auto h2 = matrep::subgroup_mat7(t2, f2, q2, a);
    // the product is again a subgroup matrix with added parameters
    const auto prod = h1 * h2;
    const auto sum = matrep::subgroup_mat7(t1 + t2, f1 + f2, q1 + q2, a);
    subadd = vmax(subadd, (prod - sum).cwiseAbs().maxCoeff());
    subcomm = vmax(subcomm, (h1 * h2 - h2 * h1).cwiseAbs().maxCoeff());
  }
  ck.le("subgroup.abelian", "polarizing subgroup is abelian", 3, subcomm, 1e-12);
  ck.le("subgroup.additive", "subgroup matrices compose additively", 3, subadd, 1e-12);

  // master equation: closed form vs brute-force factorization
  double master = 0.0, master_res = 0.0;
  for (int s = 0; s < 500; ++s) {
    for (int arity : {2, 3}) {
      const auto g = sample_trans(rng, arity, a, b, c);
      const Vec2 sv = rng.vec2();
      const auto closed = matrep::master_factorize_closed(sv, g);
      const auto brute = matrep::master_factorize_brute(sv, g);
      double d = std::abs(closed.h_theta - brute.h_theta);
      d = vmax(d, std::abs(closed.h_phi - brute.h_phi));
      d = vmax(d, std::abs(closed.h_psi - brute.h_psi));
      d = vmax(d, std::abs(closed.h_u - brute.h_u));
      d = vmax(d, std::abs(closed.h_v - brute.h_v));
      d = vmax(d, std::abs(closed.s_out.x - brute.s_out.x));
      d = vmax(d, std::abs(closed.s_out.y - brute.s_out.y));
      master = vmax(master, d);
      master_res = vmax(master_res, vmax(closed.residual, brute.residual));
    }
  }
  ck.le("master.closed_vs_brute", "coset factorization closed forms", 4, master, 1e-12);
  ck.le("master.residual", "factorization reconstructs the product", 4, master_res, 1e-10);
}

// -------------------------------------------------------------- coadjoint --

void suite_coadjoint(const cfg::RunConfig& cfg, Checker& ck) {
  Rng rng(cfg.seed);
  const double a = cfg.alpha, b = cfg.beta, c = cfg.gamma;

  double conj = 0.0, law = 0.0, invar = 0.0;
  for (int s = 0; s < 500; ++s) {
    for (int arity : {2, 3}) {
      coad::DualVector f;
      f.x.resize(arity == 2 ? 6 : 7);
      for (auto& v : f.x) v = rng.uniform();
      const auto g = sample_trans(rng, arity, a, b, c);
      const auto h = sample_trans(rng, arity, a, b, c);
      conj = vmax(conj, coad::coadjoint_matrix_check(g, f));
      const auto lhs = coad::coadjoint_act(g, coad::coadjoint_act(h, f));
      const auto rhs = coad::coadjoint_act(compose(g, h), f);
      for (size_t i = 0; i < lhs.x.size(); ++i) law = vmax(law, std::abs(lhs.x[i] - rhs.x[i]));
      const auto moved = coad::coadjoint_act(g, f);
      invar = vmax(invar, std::abs(moved.x[4] - f.x[4]));
      invar = vmax(invar, std::abs(moved.x[5] - f.x[5]));
      if (arity == 3) invar = vmax(invar, std::abs(moved.x[6] - f.x[6]));
    }
  }
  ck.le("action.conjugation_oracle", "closed form equals matrix conjugation", 5, conj, 1e-12);
  ck.le("action.group_law", "coadjoint action composes", 5, law, 1e-12);
  ck.le("invariants.preserved", "central coordinates copied bit-exactly", 5, invar, 0.0);

  auto draw_nonzero = [&rng]() {
    const double v = rng.uniform(0.2, 2.0);
    return rng.uniform() < 0 ? -v : v;
  };
  double zero4 = 0.0;
  int rank_failures = 0;
  for (int s = 0; s < 100; ++s) {
    for (int arity : {2, 3}) {
      coad::DualVector f;
      f.x.resize(arity == 2 ? 6 : 7);
      for (int i = 0; i < 4; ++i) f.x[i] = rng.uniform();
      for (size_t i = 4; i < f.x.size(); ++i) f.x[i] = draw_nonzero();
      const auto g = coad::orbit_zero_section(f, a, b, c);
      const auto img = coad::coadjoint_act(g, f);
      for (int i = 0; i < 4; ++i) zero4 = vmax(zero4, std::abs(img.x[i]));
      coad::DualVector rep = f;
      for (int i = 0; i < 4; ++i) rep.x[i] = 0.0;
      if (coad::orbit_jacobian_rank(rep, a, b, c) != 4) ++rank_failures;
    }
  }
  ck.le("orbit.zero_section", "representative reached by the group action", 5, zero4, 1e-12);
  ck.le("orbit.rank4", "generic orbits are four dimensional", 5,
        static_cast<double>(rank_failures), 0.0);
}

// -------------------------------------------------------------------- rep --

void suite_rep(const cfg::RunConfig& cfg, Checker& ck) {
  const GridSpec spec(cfg.grid_n, cfg.grid_l);
  const grp::GalileiParams params(cfg.m, cfg.lambda);
  Rng rng(cfg.seed);
  const auto probes = op::standard_probes(spec);
  const GridFunction& f0 = probes[0];
  const double h = spec.h();

  // lattice-aligned draws; the shift budget keeps composed translations small
  // enough that the probes' periodic wrap tails stay below the tolerances
  auto lattice = [&rng, h](double range) {
    const Vec2 u = rng.vec2(-range, range);
    return Vec2{std::round(u.x / h) * h, std::round(u.y / h) * h};
  };

  // unitarity
  double uni = 0.0;
  for (int s = 0; s < 50; ++s) {
    grp::GalileiElement g = sample_galilei(rng);
    g.rot.angle = (M_PI / 2.0) * rng.integer(0, 3);
    const double n0 = grid::norm(f0);
    uni = vmax(uni, std::abs(grid::norm(rep::apply_galilei_config(g, f0, params)) - n0));
    const auto fhat = grid::fourier(f0);
    uni = vmax(uni, std::abs(grid::norm(rep::apply_galilei_momentum(g, fhat, params)) -
                             grid::norm(fhat)));
    const auto g2 = sample_trans(rng, 2, cfg.alpha, cfg.beta, 0);
    uni = vmax(uni, std::abs(grid::norm(rep::apply_double(g2, f0)) - n0));
    const auto g3 = sample_trans(rng, 3, cfg.alpha, cfg.beta, cfg.gamma);
    uni = vmax(uni, std::abs(grid::norm(rep::apply_triple(g3, f0)) - n0));
  }
  ck.le("unitarity", "norm preserved by every action", 6, uni, 1e-10);

  // representation law, lattice-aligned translation groups
  double law2 = 0.0, law3 = 0.0;
  for (int s = 0; s < 100; ++s) {
    auto g = sample_trans(rng, 2, cfg.alpha, cfg.beta, 0);
    auto h2 = sample_trans(rng, 2, cfg.alpha, cfg.beta, 0);
    g.q = lattice(2.0);
    g.p = lattice(0.9);
    h2.q = lattice(2.0);
    h2.p = lattice(0.9);
    law2 = vmax(law2, rel_diff(rep::apply_double(g, rep::apply_double(h2, f0)),
                               rep::apply_double(compose(g, h2), f0)));
    auto g3 = sample_trans(rng, 3, cfg.alpha, cfg.beta, cfg.gamma);
    auto h3 = sample_trans(rng, 3, cfg.alpha, cfg.beta, cfg.gamma);
    g3.q = lattice(0.9);
    g3.p = lattice(0.9);
    h3.q = lattice(0.9);
    h3.p = lattice(0.9);
    law3 = vmax(law3, rel_diff(rep::apply_triple(g3, rep::apply_triple(h3, f0)),
                               rep::apply_triple(compose(g3, h3), f0)));
  }
  ck.le("law.double", "double-extension action follows the group law", 6, law2, 1e-10);
  ck.le("law.triple", "triple-extension action follows the group law", 6, law3, 1e-10);

  // Galilei configuration action, b = 0, R = id
  double lawg = 0.0;
  for (int s = 0; s < 25; ++s) {
    grp::GalileiElement g, h2;
    g.theta = rng.uniform();
    g.phi = rng.uniform();
    g.v = rng.vec2(-0.7, 0.7);
    g.a = rng.vec2(-0.8, 0.8);
    h2.theta = rng.uniform();
    h2.phi = rng.uniform();
    h2.v = rng.vec2(-0.7, 0.7);
    h2.a = rng.vec2(-0.8, 0.8);
    lawg = vmax(lawg, rel_diff(rep::apply_galilei_config(g, rep::apply_galilei_config(h2, f0, params), params),
                               rep::apply_galilei_config(compose(g, h2, params), f0, params)));
  }
  ck.le("law.galilei_config", "configuration action follows the group law", 6, lawg, 1e-6);

  // momentum/configuration intertwining through the transform
  double twine = 0.0;
  for (int s = 0; s < 25; ++s) {
    grp::GalileiElement g = sample_galilei(rng);
    g.rot.angle = (M_PI / 2.0) * rng.integer(0, 3);
    g.v = rng.vec2(-0.7, 0.7);
    g.a = rng.vec2(-0.8, 0.8);
    // keep the freely evolved probe clear of the periodic boundary
    g.b = rng.uniform(-0.5, 0.5);
    const auto lhs = grid::fourier(rep::apply_galilei_config(g, f0, params));
    const auto rhs = rep::apply_galilei_momentum(g, grid::fourier(f0), params);
    twine = vmax(twine, rel_diff(lhs, rhs));
  }
  ck.le("intertwining", "the two pictures are conjugate under the transform", 6, twine, 1e-6);

  // time translation semigroup
  grp::GalileiElement gb, gb2, gb3;
  gb.b = 0.4;
  gb2.b = 0.7;
  gb3.b = 1.1;
  const auto once = rep::apply_galilei_config(gb, rep::apply_galilei_config(gb2, f0, params), params);
  const auto both = rep::apply_galilei_config(gb3, f0, params);
  ck.le("free_evolution.semigroup", "kinetic factor is additive in b", 6, rel_diff(once, both),
        1e-10);
  ck.le("free_evolution.norm", "kinetic factor preserves norm", 6,
        std::abs(grid::norm(both) - grid::norm(f0)), 1e-12);
}

// ------------------------------------------------------------- generators --

void suite_generators(const cfg::RunConfig& cfg, Checker& ck) {
  const GridSpec spec(cfg.grid_n, cfg.grid_l);
  const grp::GalileiParams params(cfg.m, cfg.lambda);
  const double m = params.m, lam = params.lambda, th = params.theta();
  const auto probes = op::standard_probes(spec);
  const cplx I(0.0, 1.0);

  const auto nc = op::ncqm_ops(m, th);
  std::vector<op::BracketCase> table = {
      {"[M,N1]=iN2", nc.mrot, nc.n1, I, nc.n2},
      {"[M,N2]=-iN1", nc.mrot, nc.n2, -I, nc.n1},
      {"[M,P1]=iP2", nc.mrot, nc.p1, I, nc.p2},
      {"[M,P2]=-iP1", nc.mrot, nc.p2, -I, nc.p1},
      {"[H,P1]=0", nc.h, nc.p1, 0.0, nc.id},
      {"[H,P2]=0", nc.h, nc.p2, 0.0, nc.id},
      {"[M,H]=0", nc.mrot, nc.h, 0.0, nc.id},
      {"[N1,N2]=i lambda", nc.n1, nc.n2, I * lam, nc.id},
      {"[P1,P2]=0", nc.p1, nc.p2, 0.0, nc.id},
      {"[N1,P1]=i m", nc.n1, nc.p1, I * m, nc.id},
      {"[N1,P2]=0", nc.n1, nc.p2, 0.0, nc.id},
      {"[N2,P2]=i m", nc.n2, nc.p2, I * m, nc.id},
      {"[N2,P1]=0", nc.n2, nc.p1, 0.0, nc.id},
      {"[N1,H]=iP1", nc.n1, nc.h, I, nc.p1},
      {"[N2,H]=iP2", nc.n2, nc.h, I, nc.p2},
      {"[Q1,Q2]=i theta", nc.q1, nc.q2, I * th, nc.id},
  };
  ck.le("brackets.galilei_algebra", "extended kinematical algebra on probes", 7,
        op::bracket_table_check(table, probes).worst, 1e-6);

  // the commuting limit
  const auto nc0 = op::ncqm_ops(m, 0.0);
  ck.le("brackets.commuting_limit", "positions commute at theta = 0", 7,
        op::bracket_table_check({{"[Q1,Q2]=0", nc0.q1, nc0.q2, 0.0, nc0.id}}, probes).worst,
        1e-10);

  // noncanonical positions agree with the direct realization
  const auto [qh1, qh2] = op::noncanonical_positions(th);
  double pos = 0.0;
  for (const auto& f : probes) {
    pos = vmax(pos, rel_diff(qh1.apply(f), nc.q1.apply(f)));
    pos = vmax(pos, rel_diff(qh2.apply(f), nc.q2.apply(f)));
  }
  ck.le("noncanonical.match", "canonical-pair assembly equals the direct form", 7, pos, 1e-10);

  // doubly extended generators, both pictures
  for (auto picture : {op::Picture::s_space, op::Picture::x_space}) {
    const auto ops = op::double_ext_ops(cfg.alpha, cfg.beta, picture);
    std::vector<op::BracketCase> t2 = {
        {"[Q1,P1]", ops.q1, ops.p1, I * cfg.alpha, {}},
        {"[Q2,P2]", ops.q2, ops.p2, I * cfg.alpha, {}},
        {"[Q1,P2]", ops.q1, ops.p2, 0.0, {}},
        {"[Q2,P1]", ops.q2, ops.p1, 0.0, {}},
        {"[Q1,Q2]", ops.q1, ops.q2, -I * cfg.beta, {}},
        {"[P1,P2]", ops.p1, ops.p2, 0.0, {}},
    };
    ck.le(picture == op::Picture::s_space ? "brackets.double_s" : "brackets.double_x",
          "double-extension generator algebra", 7, op::bracket_table_check(t2, probes).worst,
          1e-8);
  }

  // picture change through the transform
  {
    const auto s_ops = op::double_ext_ops(cfg.alpha, cfg.beta, op::Picture::s_space);
    const auto x_ops = op::double_ext_ops(cfg.alpha, cfg.beta, op::Picture::x_space);
    double worst = 0.0;
    const op::LinearOp* sops[] = {&s_ops.q1, &s_ops.q2, &s_ops.p1, &s_ops.p2};
    const op::LinearOp* xops[] = {&x_ops.q1, &x_ops.q2, &x_ops.p1, &x_ops.p2};
    for (int i = 0; i < 4; ++i)
      for (const auto& f : probes) {
        const auto via_s = grid::inv_fourier(sops[i]->apply(grid::fourier(f)));
        worst = vmax(worst, rel_diff(via_s, xops[i]->apply(f)));
      }
    ck.le("pictures.conjugate", "position picture is the transform of the s picture", 7, worst,
          1e-10);
  }

  // identification with the oscillator realization at alpha = 1, beta = -theta
  {
    const auto ops = op::double_ext_ops(1.0, -th, op::Picture::x_space);
    double worst = 0.0;
    for (const auto& f : probes) {
      worst = vmax(worst, rel_diff(ops.q1.apply(f), nc.q1.apply(f)));
      worst = vmax(worst, rel_diff(ops.q2.apply(f), nc.q2.apply(f)));
      worst = vmax(worst, rel_diff(ops.p1.apply(f), nc.p1.apply(f)));
      worst = vmax(worst, rel_diff(ops.p2.apply(f), nc.p2.apply(f)));
    }
    ck.le("dictionary.alpha_beta", "alpha = 1, beta = -theta reproduces the oscillator set", 7,
          worst, 1e-10);
  }

  // triply extended generators; run at alpha != 1 so the two printed p1
  // variants are distinguishable
  for (double alpha : {cfg.alpha, 1.5}) {
    const auto ops = op::triple_ext_ops(alpha, cfg.beta, cfg.gamma, false);
    std::vector<op::BracketCase> t3 = {
        {"[Q1,P1]", ops.q1, ops.p1, I * alpha, {}},
        {"[Q2,P2]", ops.q2, ops.p2, I * alpha, {}},
        {"[Q1,P2]", ops.q1, ops.p2, 0.0, {}},
        {"[Q2,P1]", ops.q2, ops.p1, 0.0, {}},
        {"[Q1,Q2]", ops.q1, ops.q2, -I * cfg.beta, {}},
        {"[P1,P2]", ops.p1, ops.p2, -I * cfg.gamma, {}},
    };
    const auto rep = op::bracket_table_check(t3, probes);
    ck.le(alpha == cfg.alpha ? "brackets.triple" : "brackets.triple_alpha_probe",
          "triple-extension generator algebra (unscaled p1)", 7, rep.worst, 1e-8,
          "p1 = -s1 as printed closes the algebra");
  }
  {
    // the alpha-scaled variant fails [Q1,P1] away from alpha = 1
    const auto ops = op::triple_ext_ops(1.5, cfg.beta, cfg.gamma, true);
    const auto rep = op::bracket_table_check(
        {{"[Q1,P1]", ops.q1, ops.p1, I * 1.5, {}}}, {probes[0]});
    ck.ge("brackets.triple_scaled_variant", "alpha-scaled p1 breaks the pairing bracket", 0,
          rep.worst, 0.1, "records the arbitration between the two printed forms");
  }

  // self-adjointness on contained probes
  {
    double worst = 0.0;
    const op::LinearOp* all[] = {&nc.q1, &nc.q2, &nc.p1, &nc.p2, &nc.h, &nc.mrot, &nc.n1, &nc.n2};
    for (const auto* o : all) worst = vmax(worst, op::adjoint_defect(*o, probes));
    const auto d = op::double_ext_ops(cfg.alpha, cfg.beta, op::Picture::x_space);
    const op::LinearOp* dd[] = {&d.q1, &d.q2, &d.p1, &d.p2};
    for (const auto* o : dd) worst = vmax(worst, op::adjoint_defect(*o, probes));
    ck.le("self_adjoint", "position/momentum type operators are symmetric", 7, worst, 1e-8);
  }

  // finite-difference generators: convergence order and analytic match
  {
    const GridFunction& f = probes[0];
    struct Case {
      std::string name;
      std::function<GridFunction(double)> u;
      std::function<GridFunction()> expected;
    };
    const double alpha = cfg.alpha, beta = cfg.beta;
    std::vector<Case> cases;
    cases.push_back({"double_q1",
                     [&](double t) {
                       return rep::apply_double(
                           grp::TransElement::doubly(0, 0, {t, 0}, {0, 0}, alpha, beta), f);
                     },
                     [&]() { return op::scaled(alpha, op::mul_coord(0)).apply(f); }});
    cases.push_back({"galilei_boost",
                     [&](double t) {
                       grp::GalileiElement g;
                       g.v = {t, 0};
                       return rep::apply_galilei_config(g, f, params);
                     },
                     [&]() {
                       GridFunction e = op::mul_coord(0).apply(f);
                       const GridFunction d2 = grid::derivative(f, 1);
                       for (size_t i = 0; i < e.values().size(); ++i)
                         e.values()[i] = -m * e.values()[i] +
                                         cplx(0, 0.5 * lam / m) * d2.values()[i];
                       return e;
                     }});
    cases.push_back({"galilei_translation",
                     [&](double t) {
                       grp::GalileiElement g;
                       g.a = {t, 0};
                       return rep::apply_galilei_config(g, f, params);
                     },
                     [&]() {
                       GridFunction e = grid::derivative(f, 0);
                       for (auto& v : e.values()) v *= I;
                       return e;
                     }});
    cases.push_back({"central_phase",
                     [&](double t) {
                       grp::GalileiElement g;
                       g.theta = t;
                       return rep::apply_galilei_config(g, f, params);
                     },
                     [&]() {
                       GridFunction e = f;
                       for (auto& v : e.values()) v = -v;
                       return e;
                     }});
    for (const auto& cse : cases) {
      const GridFunction want = cse.expected();
      auto err = [&](double eps, bool rich) {
        GridFunction g = op::generator_from_rep(cse.u, eps, rich);
        for (size_t i = 0; i < g.values().size(); ++i) g.values()[i] -= want.values()[i];
        return grid::norm(g) / grid::norm(f);
      };
      const double e1 = err(0.2, false), e2 = err(0.1, false);
      ck.ge("fdgen." + cse.name + ".order", "central differences converge at second order", 7,
            std::log2(e1 / e2), 1.9);
      ck.le("fdgen." + cse.name + ".richardson", "extrapolated generator matches the analytic form",
            7, err(0.1, true), 1e-4);
    }
  }
}

// ------------------------------------------------------------- resolution --

void suite_resolution(const cfg::RunConfig& cfg, Checker& ck) {
  const GridSpec spec(cfg.grid_n, cfg.grid_l);
  const grp::GalileiParams params(cfg.m, cfg.lambda);
  const auto fid = cs::Fiducial::unit_gaussian(spec);
  const cs::PhaseGrid pg(cfg.phase_n, cfg.phase_l, cfg.phase_n, cfg.phase_l);

  ck.le("fiducial.rotational", "fiducial is rotationally invariant on the lattice", 8,
        fid.dihedral_asymmetry(), 1e-10);
  ck.close("phase_grid.volume", "plumbing", 0,
           pg.weight() * static_cast<double>(pg.node_count()), pg.volume(), 1e-9);

  std::vector<GridFunction> funcs = {
      grid::gaussian(spec, {0.0, 0.0}, 1.0),   grid::gaussian(spec, {1.0, 0.5}, 0.7),
      grid::hermite_probe(spec, {0.0, 0.0}, 1.0), grid::gaussian(spec, {-0.8, 0.6}, 1.0),
      grid::gaussian(spec, {0.5, -0.5}, 0.9)};
  const std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 3}, {0, 4}, {1, 4}, {3, 4}};
  const auto results = cs::resolution_pairs(fid, funcs, pairs, pg, params);

  double lo = 1e300, hi = -1e300;
  for (const auto& r : results) {
    lo = std::min(lo, r.ratio.real());
    hi = std::max(hi, r.ratio.real());
  }
  const double mean = 0.5 * (lo + hi);
  ck.le("ratio.spread", "operator integral is a multiple of the identity", 8,
        (hi - lo) / mean, 0.01);

  const double eta2 = grid::inner(fid.eta, fid.eta).real();
  const double cand_sq = 4.0 * M_PI * M_PI * eta2;  // (2 pi)^2 |eta|^2
  const double cand_lin = 2.0 * M_PI * eta2;        // 2 pi |eta|^2
  const bool matches_sq = std::abs(mean - cand_sq) < std::abs(mean - cand_lin);
  ck.close("ratio.constant", "measured constant against the quadratic candidate", 8, mean,
           cand_sq, 0.01 * cand_sq,
           std::string("matches ") + (matches_sq ? "(2 pi)^2 |eta|^2" : "2 pi |eta|^2") +
               "; linear candidate = " + std::to_string(cand_lin));

  // orthogonal pair: both sides proportional to <f|g>
  const auto orth = cs::resolution_check(fid, funcs[0], funcs[2], pg, params);
  ck.le("orthogonal.lhs", "integral vanishes on orthogonal pairs", 8, std::abs(orth.lhs), 1e-3);

  // quadrature convergence: doubled phase grid moves the value by < 0.2%.
  // A coarse position grid suffices here; the statement is about the phase
  // quadrature and the probe spectra die well below its Nyquist band.
  const GridSpec spec_coarse(std::min(cfg.grid_n, 32), cfg.grid_l);
  const auto fid_coarse = cs::Fiducial::unit_gaussian(spec_coarse);
  const std::vector<GridFunction> fc = {grid::gaussian(spec_coarse, {0.0, 0.0}, 1.0),
                                        grid::gaussian(spec_coarse, {1.0, 0.5}, 0.7)};
  const cs::PhaseGrid pg2(2 * cfg.phase_n, cfg.phase_l, 2 * cfg.phase_n, cfg.phase_l);
  const auto base = cs::resolution_pairs(fid_coarse, fc, {{0, 1}}, pg, params)[0];
  const auto fine = cs::resolution_pairs(fid_coarse, fc, {{0, 1}}, pg2, params)[0];
  ck.le("doubling.stability", "quadrature already converged at the default grid", 8,
        std::abs(fine.lhs - base.lhs) / std::abs(base.lhs), 0.002);
}

// --------------------------------------------------------------- quantize --

void suite_quantize(const cfg::RunConfig& cfg, Checker& ck) {
  const GridSpec spec(cfg.grid_n, cfg.grid_l);
  const grp::GalileiParams params(cfg.m, cfg.lambda);
  const double m = params.m, th = params.theta();
  const double cderiv = 0.5 * params.lambda / (m * m);
  const auto fid = cs::Fiducial::unit_gaussian(spec);
  const cs::PhaseGrid pg(cfg.phase_n, cfg.phase_l, cfg.phase_n, cfg.phase_l);
  const cs::Quantizer qz(fid, pg, params, cfg.fast);

  const std::vector<GridFunction> probes = {grid::gaussian(spec, {0.0, 0.0}, 1.0),
                                            grid::gaussian(spec, {1.0, 0.5}, 0.7)};
  const std::vector<cs::Symbol> syms = {cs::Symbol::one(), cs::Symbol::coord_q(0),
                                        cs::Symbol::coord_q(1), cs::Symbol::coord_p(0),
                                        cs::Symbol::coord_p(1)};
  const auto outs = qz.apply_batch(syms, probes);

  double ident = 0.0;
  for (size_t j = 0; j < probes.size(); ++j) ident = vmax(ident, rel_diff(outs[0][j], probes[j]));
  ck.le("identity.unit_symbol", "unit symbol quantizes to the identity", 9, ident, 0.005,
        "measured scale divided out; scale = " + std::to_string(qz.identity_scale()));

  // momentum symbols
  double perr = 0.0;
  for (size_t j = 0; j < probes.size(); ++j) {
    GridFunction d1 = grid::derivative(probes[j], 0);
    GridFunction d2 = grid::derivative(probes[j], 1);
    for (auto& v : d1.values()) v *= cplx(0, -1);
    for (auto& v : d2.values()) v *= cplx(0, -1);
    perr = vmax(perr, rel_diff(outs[3][j], d1));
    perr = vmax(perr, rel_diff(outs[4][j], d2));
  }
  ck.le("momentum.form", "quantized momenta are the flat derivatives", 9, perr, 0.01);

  // position symbols: sign of the derivative term measured
  double qerr_plus = 0.0, qerr_minus = 0.0;
  for (size_t j = 0; j < probes.size(); ++j) {
    const GridFunction x1 = op::mul_coord(0).apply(probes[j]);
    const GridFunction x2 = op::mul_coord(1).apply(probes[j]);
    const GridFunction d1 = grid::derivative(probes[j], 0);
    const GridFunction d2 = grid::derivative(probes[j], 1);
    auto combine = [](const GridFunction& a, const GridFunction& b, cplx cb) {
      GridFunction r = a;
      for (size_t i = 0; i < r.values().size(); ++i) r.values()[i] += cb * b.values()[i];
      return r;
    };
    qerr_plus = vmax(qerr_plus, rel_diff(outs[1][j], combine(x1, d2, cplx(0, cderiv))));
    qerr_plus = vmax(qerr_plus, rel_diff(outs[2][j], combine(x2, d1, cplx(0, -cderiv))));
    qerr_minus = vmax(qerr_minus, rel_diff(outs[1][j], combine(x1, d2, cplx(0, -cderiv))));
    qerr_minus = vmax(qerr_minus, rel_diff(outs[2][j], combine(x2, d1, cplx(0, cderiv))));
  }
  ck.le("position.form", "quantized positions carry the noncommutative derivative term", 9,
        std::min(qerr_plus, qerr_minus), 0.01,
        qerr_plus <= qerr_minus
            ? "matched sign: q1 -> x1 + i(lambda/2m^2) d2 (plus branch)"
            : "matched sign: q1 -> x1 - i(lambda/2m^2) d2 (minus branch)");

  // per-symbol probe measurements for the machine-readable table
  {
    const char* names[] = {"q1", "q2", "p1", "p2"};
    for (size_t k = 1; k <= 4; ++k) {
      for (size_t j = 0; j < probes.size(); ++j) {
        GridFunction want;
        if (k <= 2) {
          want = op::mul_coord(static_cast<int>(k) - 1).apply(probes[j]);
          GridFunction d = grid::derivative(probes[j], k == 1 ? 1 : 0);
          const cplx cc = k == 1 ? cplx(0, cderiv) : cplx(0, -cderiv);
          for (size_t ii = 0; ii < want.values().size(); ++ii)
            want.values()[ii] += cc * d.values()[ii];
        } else {
          want = grid::derivative(probes[j], static_cast<int>(k) - 3);
          for (auto& v : want.values()) v *= cplx(0, -1);
        }
        const cplx fit = grid::inner(want, outs[k][j]) / grid::inner(want, want);
        nlohmann::json dj;
        dj["symbol"] = names[k - 1];
        dj["probe_id"] = static_cast<int>(j);
        dj["coefficient_re"] = fit.real();
        dj["coefficient_im"] = fit.imag();
        dj["residual"] = rel_diff(outs[k][j], want);
        ck.detail(dj);
      }
    }
  }

  // commutator table
  const auto comms = cs::quantized_commutators(qz, probes);
  double dqq = 0.0, dqp_diag = 0.0, dqp_off = 0.0, dpp = 0.0, wres = 0.0;
  for (const auto& e : comms) {
    nlohmann::json dj;
    dj["symbol"] = "[" + e.a + "," + e.b + "]";
    dj["probe_id"] = e.probe_id;
    dj["coefficient_re"] = e.coeff.real();
    dj["coefficient_im"] = e.coeff.imag();
    dj["residual"] = e.residual;
    ck.detail(dj);
    wres = vmax(wres, e.residual);
    if (e.a == "q1" && e.b == "q2") dqq = vmax(dqq, std::abs(e.coeff - cplx(th)));
    else if (e.a == "p1" && e.b == "p2") dpp = vmax(dpp, std::abs(e.coeff));
    else if ((e.a == "q1" && e.b == "p1") || (e.a == "q2" && e.b == "p2"))
      dqp_diag = vmax(dqp_diag, std::abs(e.coeff - cplx(1.0)));
    else
      dqp_off = vmax(dqp_off, std::abs(e.coeff));
  }
  ck.le("commutators.qq", "position-position commutator equals i theta", 9, dqq, 0.02 * th);
  ck.le("commutators.qp_diag", "canonical pairs keep the flat commutator", 9, dqp_diag, 0.02);
  ck.le("commutators.qp_off", "cross pairs commute", 9, dqp_off, 0.02);
  ck.le("commutators.pp", "momenta commute", 9, dpp, 1e-3);
  ck.le("commutators.identity_fit", "commutators are multiples of the identity", 9, wres, 0.02);

  // linearity in the symbol and symmetry of real symbols
  {
    const cs::Symbol mix{"0.7 q1 + 0.3 p2", [](const Vec2& q, const Vec2& p) {
                           return cplx(0.7 * q.x + 0.3 * p.y);
                         }};
    const GridFunction lhs = qz.apply(mix, probes[0]);
    GridFunction rhs = outs[1][0];
    for (size_t i = 0; i < rhs.values().size(); ++i)
      rhs.values()[i] = 0.7 * rhs.values()[i] + 0.3 * outs[4][0].values()[i];
    ck.le("linearity", "quantization is linear in the symbol", 9, rel_diff(lhs, rhs), 1e-10);
    ck.le("symmetry.real_symbol", "real symbols give symmetric operators", 9,
          op::adjoint_defect(qz.as_operator(cs::Symbol::coord_q(0)), {probes[0]}), 1e-8);
  }

  // fast path against the direct quadrature
  if (cfg.fast) {
    const cs::Quantizer direct(fid, pg, params, false);
    const GridFunction a = qz.apply(cs::Symbol::coord_q(0), probes[0]);
    const GridFunction b = direct.apply(cs::Symbol::coord_q(0), probes[0]);
    ck.le("fast.matches_direct", "correlation path agrees with direct quadrature", 9,
          rel_diff(a, b), 1e-3);
  }

  // scaling of the noncommutative term with lambda
  {
    const cs::PhaseGrid pg_small(16, cfg.phase_l, 16, cfg.phase_l);
    std::vector<double> slopes;
    for (double lam : {0.4, 0.2, 0.1}) {
      const grp::GalileiParams pl(m, lam);
      const cs::Quantizer qzl(fid, pg_small, pl, false);
      const GridFunction oq1 = qzl.apply(cs::Symbol::coord_q(0), probes[0]);
      GridFunction d = oq1;
      const GridFunction x1g = op::mul_coord(0).apply(probes[0]);
      for (size_t i = 0; i < d.values().size(); ++i) d.values()[i] -= x1g.values()[i];
      GridFunction id2 = grid::derivative(probes[0], 1);
      for (auto& v : id2.values()) v *= cplx(0, 1);
      const cplx kappa = grid::inner(id2, d) / grid::inner(id2, id2);
      slopes.push_back(kappa.real() / lam);
    }
    double lo = *std::min_element(slopes.begin(), slopes.end());
    double hi = *std::max_element(slopes.begin(), slopes.end());
    ck.le("limit.slope", "derivative coefficient is linear in lambda", 10,
          (hi - lo) / (0.5 * (hi + lo)), 0.05,
          "slope target 1/(2 m^2) = " + std::to_string(0.5 / (m * m)));

    // coherent states converge in norm to the flat ones
    const Vec2 q{1.2, -0.8}, p{0.6, 1.1};
    const grp::GalileiParams p0(m, 0.0);
    const GridFunction flat = cs::coherent_state(fid, q, p, p0);
    std::vector<double> dist;
    for (double lam : {0.4, 0.2, 0.1}) {
      const grp::GalileiParams pl(m, lam);
      GridFunction d = cs::coherent_state(fid, q, p, pl);
      for (size_t i = 0; i < d.values().size(); ++i) d.values()[i] -= flat.values()[i];
      dist.push_back(grid::norm(d));
    }
    ck.close("limit.cs_halving", "state distance halves with lambda", 10, dist[1] / dist[0], 0.5,
             0.1);
    ck.le("limit.cs_converges", "states approach the flat coherent states", 10, dist[2], 0.1);
  }
}

// -------------------------------------------------------------------- pov --

void suite_pov(const cfg::RunConfig& cfg, Checker& ck) {
  const GridSpec spec(cfg.grid_n, cfg.grid_l);
  const grp::GalileiParams params(cfg.m, cfg.lambda);
  const auto fid = cs::Fiducial::unit_gaussian(spec);
  const cs::PhaseGrid pg(cfg.phase_n, cfg.phase_l, cfg.phase_n, cfg.phase_l);
  const cs::Quantizer qz(fid, pg, params, false);
  Rng rng(cfg.seed);

  cs::PhaseRect box;
  box.q_lo = {0.0, 0.0};
  box.q_hi = {2.0, 2.0};
  box.p_lo = {0.0, 0.0};
  box.p_hi = {2.0, 2.0};
  const auto a_box = qz.pov_operator(box);
  double min_expect = 1e300;
  for (int s = 0; s < 20; ++s) {
    const GridFunction f = grid::gaussian(spec, rng.vec2(-1.5, 1.5), rng.uniform(0.6, 1.2));
    min_expect = std::min(min_expect, grid::inner(f, a_box.apply(f)).real());
  }
  ck.ge("positivity", "region operators are positive", 11, min_expect, -1e-12);

  // finite additivity on a probe
  cs::PhaseRect left = box, right = box, both = box;
  left.q_lo.x = -2.0;
  left.q_hi.x = 0.0;
  right.q_lo.x = 0.0;
  right.q_hi.x = 2.0;
  both.q_lo.x = -2.0;
  both.q_hi.x = 2.0;
  const GridFunction probe = grid::gaussian(spec, {0.5, 0.5}, 1.0);
  GridFunction sum = qz.pov_operator(left).apply(probe);
  const GridFunction rightf = qz.pov_operator(right).apply(probe);
  for (size_t i = 0; i < sum.values().size(); ++i) sum.values()[i] += rightf.values()[i];
  const GridFunction union_f = qz.pov_operator(both).apply(probe);
  GridFunction diff = sum;
  for (size_t i = 0; i < diff.values().size(); ++i) diff.values()[i] -= union_f.values()[i];
  ck.le("additivity", "disjoint regions add", 11, grid::norm(diff) / grid::norm(probe), 1e-10);

  // the whole domain reproduces the quantized unit symbol
  const GridFunction full_f = qz.pov_operator(cs::PhaseRect::full(pg)).apply(probe);
  const GridFunction one_f = qz.apply(cs::Symbol::one(), probe);
  ck.le("whole_domain", "full-domain operator equals the quantized unit", 11,
        rel_diff(full_f, one_f), 1e-12);

  const GridFunction none = qz.pov_operator(cs::PhaseRect::empty()).apply(probe);
  ck.le("empty", "empty region gives the zero operator", 11, grid::norm(none), 0.0);
}

// ----------------------------------------------------------------- wigner --

void suite_wigner(const cfg::RunConfig& cfg, Checker& ck) {
  const GridSpec spec(cfg.grid_n, cfg.grid_l);
  double th = grp::GalileiParams(cfg.m, cfg.lambda).theta();
  std::string note;
  if (th == 0.0) {
    th = 0.5;
    note = "theta = 0 not representable here; using 0.5";
  }
  const int dim = 32;

  {
    auto [q, p] = wig::base_qp(dim);
    const Eigen::MatrixXcd comm = q * p - p * q;
    const Eigen::MatrixXcd expect =
        cplx(0, 1) * Eigen::MatrixXcd::Identity(dim, dim);
    ck.le("ladder.canonical_block", "canonical pair on the stable block", 12,
          (comm - expect).topLeftCorner(dim - 1, dim - 1).cwiseAbs().maxCoeff(), 1e-13);
  }

  // superoperator commutators on the truncation-safe block
  {
    const auto hs = wig::hs_ops(th, dim);
    const auto probes = wig::standard_fock_probes(dim);
    const int safe = dim / 2;
    auto block_residual = [&](const std::function<wig::FockOperator(const wig::FockOperator&)>& A,
                              const std::function<wig::FockOperator(const wig::FockOperator&)>& B,
                              cplx coeff) {
      double worst = 0.0;
      for (const auto& x : probes) {
        const Eigen::MatrixXcd lhs = A(B(x)).m - B(A(x)).m - coeff * x.m;
        worst = vmax(worst, lhs.topLeftCorner(safe, safe).cwiseAbs().maxCoeff());
      }
      return worst;
    };
    double worst = 0.0;
    worst = vmax(worst, block_residual(hs.q1, hs.q2, cplx(0, th)));
    worst = vmax(worst, block_residual(hs.q1, hs.p1, cplx(0, 1)));
    worst = vmax(worst, block_residual(hs.q2, hs.p2, cplx(0, 1)));
    worst = vmax(worst, block_residual(hs.q1, hs.p2, 0.0));
    worst = vmax(worst, block_residual(hs.q2, hs.p1, 0.0));
    worst = vmax(worst, block_residual(hs.p1, hs.p2, 0.0));
    ck.le("hs.commutators", "operator-space realization closes the algebra", 12, worst, 1e-10,
          note);
  }

  // the map: vacuum profile, isometry, linearity
  {
    const auto probes = wig::standard_fock_probes(dim);
    const GridFunction w00 = wig::wigner_map(probes[0], spec);
    double prof = 0.0;
    const double pts[5][2] = {{0.0, 0.0}, {1.0, 0.5}, {-1.5, 0.8}, {2.0, -1.0}, {0.3, 2.2}};
    for (const auto& pt : pts) {
      // compare at the nearest node against the closed form of the ladder
      // generating series for the ground state
      const int i = static_cast<int>(std::round((pt[0] + spec.l) / spec.h()));
      const int j = static_cast<int>(std::round((pt[1] + spec.l) / spec.h()));
      const double x = spec.x(i), y = spec.x(j);
      const double closed = std::exp(-(x * x + y * y) / 4.0) / std::sqrt(2.0 * M_PI);
      prof = vmax(prof, std::abs(w00.at(i, j).real() - closed) + std::abs(w00.at(i, j).imag()));
    }
    ck.le("map.vacuum_profile", "ground-state image matches the closed form", 12, prof, 1e-8);

    double iso = 0.0;
    std::vector<GridFunction> mapped;
    for (const auto& x : probes) mapped.push_back(wig::wigner_map(x, spec));
    for (size_t i = 0; i < probes.size(); ++i)
      for (size_t j = 0; j < probes.size(); ++j) {
        const cplx hs = (probes[i].m.adjoint() * probes[j].m).trace();
        iso = vmax(iso, std::abs(grid::inner(mapped[i], mapped[j]) - hs));
      }
    ck.le("map.isometry", "map preserves the Hilbert-Schmidt pairing", 12, iso, 1e-4);

    wig::FockOperator combo = wig::FockOperator::zero(dim);
    combo.m = 0.6 * probes[0].m + cplx(0, 0.8) * probes[1].m;
    GridFunction lin = wig::wigner_map(combo, spec);
    for (size_t i = 0; i < lin.values().size(); ++i)
      lin.values()[i] -= 0.6 * mapped[0].values()[i] + cplx(0, 0.8) * mapped[1].values()[i];
    ck.le("map.linearity", "map is linear", 12, grid::norm(lin), 1e-12);
  }

  // realization map intertwines the two operator realizations
  {
    double prev = 0.0;
    double worst32 = 0.0;
    bool monotone = true;
    std::string detail;
    for (int d : {16, 32, 64}) {
      const auto rep = wig::equivalence_check(th, d, spec, wig::standard_fock_probes(4));
      if (d > 16 && rep.worst >= prev) monotone = false;
      if (d == 32) worst32 = rep.worst;
      detail += "dim " + std::to_string(d) + ": " + std::to_string(rep.worst) + "  ";
      prev = rep.worst;
    }
    ck.le("equivalence.residual", "realizations agree through the map", 12, worst32, 1e-3, note);
    ck.close("equivalence.monotone", "residual improves with the truncation", 12,
             monotone ? 1.0 : 0.0, 1.0, 0.0, detail);
  }

  // the second position path scales linearly in theta
  {
    const wig::FockOperator x = wig::FockOperator::ket_bra(16, 0, 1);
    std::vector<double> ratio;
    for (double t : {0.4, 0.2}) {
      const auto hs = wig::hs_ops(t, 16);
      ratio.push_back(grid::norm(wig::realization_map(hs.q2(x), spec, t)) / t);
    }
    ck.le("theta_scaling", "second position path is linear in theta", 12,
          std::abs(ratio[0] - ratio[1]) / ratio[0], 1e-3);
  }
}

// ------------------------------------------------------------------ dumps --

void dump_states(const cfg::RunConfig& cfg) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.dump_dir);
  const GridSpec spec(cfg.grid_n, cfg.grid_l);
  const grp::GalileiParams params(cfg.m, cfg.lambda);
  const auto fid = cs::Fiducial::unit_gaussian(spec);
  grid::save(fid.eta, cfg.dump_dir + "/fiducial.grid");
  const auto probes = op::standard_probes(spec);
  for (size_t i = 0; i < probes.size(); ++i)
    grid::save(probes[i], cfg.dump_dir + "/probe" + std::to_string(i) + ".grid");
  grid::save(cs::coherent_state(fid, {1.0, -0.5}, {0.5, 1.0}, params),
             cfg.dump_dir + "/coherent_state.grid");
  grid::save(wig::wigner_map(wig::FockOperator::ket_bra(32, 0, 0), spec),
             cfg.dump_dir + "/vacuum_map.grid");
}

using SuiteFn = void (*)(const cfg::RunConfig&, Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"group", suite_group},         {"matrix", suite_matrix},
      {"coadjoint", suite_coadjoint}, {"rep", suite_rep},
      {"generators", suite_generators}, {"resolution", suite_resolution},
      {"quantize", suite_quantize},   {"pov", suite_pov},
      {"wigner", suite_wigner},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suite_table()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

bool is_suite_name(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

Report run_suite(const std::string& name, const cfg::RunConfig& cfg) {
  if (!is_suite_name(name)) throw std::invalid_argument("unknown suite: " + name);
  Report report;
  report.suite = name;
  report.config = cfg;
  const auto start = std::chrono::steady_clock::now();
  if (!cfg.dump_dir.empty()) dump_states(cfg);
  for (const auto& [sname, fn] : suite_table()) {
    if (name != "all" && name != sname) continue;
    Checker ck{sname, &report.records, &report.detail_records};
    fn(cfg, ck);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_report(const Report& report, std::ostream& os) {
  nlohmann::json header;
  header["suite"] = report.suite;
  header["checks"] = report.records.size();
  header["failed"] = report.failed();
  header["elapsed_seconds"] = report.elapsed_seconds;
  {
    char buf[64];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    header["timestamp"] = buf;
  }
  nlohmann::json jc;
  jc["m"] = report.config.m;
  jc["lambda"] = report.config.lambda;
  jc["alpha"] = report.config.alpha;
  jc["beta"] = report.config.beta;
  jc["gamma"] = report.config.gamma;
  jc["grid_n"] = report.config.grid_n;
  jc["grid_l"] = report.config.grid_l;
  jc["phase_n"] = report.config.phase_n;
  jc["phase_l"] = report.config.phase_l;
  jc["seed"] = report.config.seed;
  jc["fast"] = report.config.fast;
  header["config"] = jc;
  os << header.dump() << "\n";
  for (const auto& r : report.records) {
    nlohmann::json j;
    j["id"] = r.id;
    j["ref"] = r.ref.empty() ? "plumbing" : r.ref;
    j["criterion"] = r.criterion;
    j["measured"] = r.measured;
    j["expected"] = r.expected;
    j["tolerance"] = r.tolerance;
    j["cmp"] = r.ge ? "ge" : "le";
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    os << j.dump() << "\n";
  }
  for (const auto& d : report.detail_records) os << d << "\n";
}

void write_report_file(const Report& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file " + path);
  write_report(report, out);
}

}  // namespace ncqm::suite
