#include "ncqm/group.hpp"

#include <cmath>
#include <stdexcept>

namespace ncqm::grp {

GalileiParams::GalileiParams(double m_, double lambda_) : m(m_), lambda(lambda_) {
  if (!(m > 0.0)) throw std::invalid_argument("GalileiParams: m must be positive");
}

double galilei_cocycle1(const GalileiElement& r, const GalileiElement& r2, double m) {
  const Vec2 rv2 = r.rot.apply(r2.v);
  const Vec2 ra2 = r.rot.apply(r2.a);
  return 0.5 * m * (dot(r.a, rv2) - dot(r.v, ra2) + r2.b * dot(r.v, rv2));
}

double galilei_cocycle2(const GalileiElement& r, const GalileiElement& r2, double lambda) {
  return 0.5 * lambda * wedge(r.v, r.rot.apply(r2.v));
}

GalileiElement compose(const GalileiElement& g, const GalileiElement& g2,
                       const GalileiParams& params) {
  GalileiElement out;
  out.theta = g.theta + g2.theta + galilei_cocycle1(g, g2, params.m);
  out.phi = g.phi + g2.phi + galilei_cocycle2(g, g2, params.lambda);
  out.rot = g.rot.compose(g2.rot);
  out.b = g.b + g2.b;
  out.v = g.v + g.rot.apply(g2.v);
  out.a = g.a + g.rot.apply(g2.a) + g.v * g2.b;
  return out;
}

GalileiElement inverse(const GalileiElement& g, const GalileiParams& params) {
  GalileiElement inv;
  inv.rot = g.rot.inverse();
  inv.b = -g.b;
  inv.v = -inv.rot.apply(g.v);
  inv.a = inv.rot.apply(g.v * g.b - g.a);
  inv.theta = -g.theta - galilei_cocycle1(g, inv, params.m);
  inv.phi = -g.phi - galilei_cocycle2(g, inv, params.lambda);
  return inv;
}

TransElement TransElement::singly(double theta, Vec2 q, Vec2 p, double alpha) {
  TransElement g;
  g.arity = 1;
  g.phase = {theta, 0.0, 0.0};
  g.q = q;
  g.p = p;
  g.ext = {alpha, 0.0, 0.0};
  return g;
}

TransElement TransElement::doubly(double theta, double phi, Vec2 q, Vec2 p, double alpha,
                                  double beta) {
  TransElement g;
  g.arity = 2;
  g.phase = {theta, phi, 0.0};
  g.q = q;
  g.p = p;
  g.ext = {alpha, beta, 0.0};
  return g;
}

TransElement TransElement::triply(double theta, double phi, double psi, Vec2 q, Vec2 p,
                                  double alpha, double beta, double gamma) {
  TransElement g;
  g.arity = 3;
  g.phase = {theta, phi, psi};
  g.q = q;
  g.p = p;
  g.ext = {alpha, beta, gamma};
  return g;
}

TransElement TransElement::identity_like(const TransElement& g) {
  TransElement e = g;
  e.phase = {0.0, 0.0, 0.0};
  e.q = e.p = Vec2{};
  return e;
}

static void require_compatible(const TransElement& g, const TransElement& g2) {
  if (g.arity != g2.arity) throw std::invalid_argument("TransElement: arity mismatch");
  for (int i = 0; i < g.arity; ++i)
    if (g.ext[i] != g2.ext[i])
      throw std::invalid_argument("TransElement: extension constants differ");
}

TransElement compose(const TransElement& g, const TransElement& g2) {
  require_compatible(g, g2);
  TransElement out = g;
  out.q = g.q + g2.q;
  out.p = g.p + g2.p;
  out.phase[0] = g.phase[0] + g2.phase[0] +
                 0.5 * g.ext[0] * (dot(g.q, g2.p) - dot(g.p, g2.q));
  if (g.arity >= 2) out.phase[1] = g.phase[1] + g2.phase[1] + 0.5 * g.ext[1] * wedge(g.p, g2.p);
  if (g.arity >= 3) out.phase[2] = g.phase[2] + g2.phase[2] + 0.5 * g.ext[2] * wedge(g.q, g2.q);
  return out;
}

TransElement inverse(const TransElement& g) {
  // The twisting terms vanish on (g, -g), so phases just negate.
  TransElement inv = g;
  inv.q = -g.q;
  inv.p = -g.p;
  for (int i = 0; i < 3; ++i) inv.phase[i] = -g.phase[i];
  return inv;
}

LocalExponent LocalExponent::xi() {
  return {"xi", [](const TransElement& g, const TransElement& g2) {
            return 0.5 * (dot(g.q, g2.p) - dot(g.p, g2.q));
          }};
}

LocalExponent LocalExponent::xi_prime() {
  return {"xi'", [](const TransElement& g, const TransElement& g2) {
            return 0.5 * wedge(g.p, g2.p);
          }};
}

LocalExponent LocalExponent::xi_dprime() {
  return {"xi''", [](const TransElement& g, const TransElement& g2) {
            return 0.5 * wedge(g.q, g2.q);
          }};
}

LocalExponent LocalExponent::combination(
    const std::vector<std::pair<double, LocalExponent>>& terms) {
  std::string label;
  for (const auto& [c, t] : terms) label += (label.empty() ? "" : " + ") + std::to_string(c) + "*" + t.label;
  auto copy = terms;
  return {label, [copy](const TransElement& g, const TransElement& g2) {
            double acc = 0.0;
            for (const auto& [c, t] : copy) acc += c * t.eval(g, g2);
            return acc;
          }};
}

Rational exact_exponent(int kind, const std::array<Rational, 4>& g,
                        const std::array<Rational, 4>& g2) {
  const Rational half(1, 2);
  // coordinates (q1, q2, p1, p2)
  switch (kind) {
    case 0:
      return half * (g[0] * g2[2] + g[1] * g2[3] - g[2] * g2[0] - g[3] * g2[1]);
    case 1:
      return half * (g[2] * g2[3] - g[3] * g2[2]);
    case 2:
      return half * (g[0] * g2[1] - g[1] * g2[0]);
    default:
      throw std::invalid_argument("exact_exponent: kind must be 0, 1 or 2");
  }
}

double AxiomReport::worst() const {
  return std::max(max_cocycle_residual, std::max(max_neutral_residual, max_inverse_residual));
}

namespace {

template <class G, class Xi, class Compose, class Inverse, class Sample>
AxiomReport run_axiom_checks(const Xi& xi, const Compose& comp, const Inverse& inv,
                             const Sample& sample, const G& identity, int samples,
                             std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("check_exponent_axioms: samples >= 1");
  Rng rng(seed);
  AxiomReport rep;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const G g = sample(rng);
    const G g1 = sample(rng);
    const G g2 = sample(rng);
    // xi(g2,g1) + xi(g2 g1, g) == xi(g2, g1 g) + xi(g1, g)
    const double lhs = xi(g2, g1) + xi(comp(g2, g1), g);
    const double rhs = xi(g2, comp(g1, g)) + xi(g1, g);
    rep.max_cocycle_residual = std::max(rep.max_cocycle_residual, std::abs(lhs - rhs));
    rep.max_neutral_residual = std::max(
        rep.max_neutral_residual, std::max(std::abs(xi(g, identity)), std::abs(xi(identity, g))));
    const G gi = inv(g);
    rep.max_inverse_residual =
        std::max(rep.max_inverse_residual, std::abs(xi(g, gi) - xi(gi, g)));
  }
  return rep;
}

TransElement sample_trans(Rng& rng, int arity) {
  TransElement g;
  g.arity = arity;
  g.q = rng.vec2();
  g.p = rng.vec2();
  g.phase = {rng.uniform(), arity >= 2 ? rng.uniform() : 0.0, arity >= 3 ? rng.uniform() : 0.0};
  return g;
}

}  // namespace

AxiomReport check_exponent_axioms(const LocalExponent& xi, int arity, int samples,
                                  std::uint64_t seed) {
  auto sample = [arity](Rng& rng) { return sample_trans(rng, arity); };
  TransElement e;
  e.arity = arity;
  return run_axiom_checks<TransElement>(
      xi.eval, [](const TransElement& a, const TransElement& b) { return compose(a, b); },
      [](const TransElement& a) { return inverse(a); }, sample, e, samples, seed);
}

AxiomReport check_galilei_exponent_axioms(const GalileiExponent& xi, const GalileiParams& params,
                                          int samples, std::uint64_t seed) {
  auto sample = [](Rng& rng) {
    GalileiElement g;
    g.rot.angle = rng.uniform();
    g.b = rng.uniform();
    g.v = rng.vec2();
    g.a = rng.vec2();
    return g;
  };
  return run_axiom_checks<GalileiElement>(
      xi,
      [&params](const GalileiElement& a, const GalileiElement& b) {
        return compose(a, b, params);
      },
      [&params](const GalileiElement& a) { return inverse(a, params); }, sample,
      GalileiElement::identity(), samples, seed);
}

WitnessReport antisymmetry_witness(const LocalExponent& xi_a, const LocalExponent& xi_b,
                                   int samples, std::uint64_t seed) {
  Rng rng(seed);
  WitnessReport rep;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    TransElement g = sample_trans(rng, 2);
    TransElement g2 = sample_trans(rng, 2);
    const double d = xi_a.eval(g, g2) - xi_b.eval(g, g2);
    const double dswap = xi_a.eval(g2, g) - xi_b.eval(g2, g);
    rep.max_symmetric_part = std::max(rep.max_symmetric_part, std::abs(d + dswap));
    rep.max_difference = std::max(rep.max_difference, std::abs(d));
  }
  rep.degenerate = rep.max_difference == 0.0;
  return rep;
}

}  // namespace ncqm::grp
