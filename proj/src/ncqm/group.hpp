#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "ncqm/rational.hpp"
#include "ncqm/rng.hpp"
#include "ncqm/vec2.hpp"

namespace ncqm::grp {

/// Physical parameters of the doubly extended planar Galilei group. The
/// position noncommutativity scale is theta = lambda / m^2.
struct GalileiParams {
  double m = 1.0;
  double lambda = 0.5;

  GalileiParams() = default;
  GalileiParams(double m_, double lambda_);
  static GalileiParams from_theta(double m, double theta) { return {m, theta * m * m}; }
  double theta() const { return lambda / (m * m); }
};

/// Element (theta, phi, R, b, v, a): two central phases, a rotation, a time
/// translation, a boost, and a space translation. Identity is all zeros.
struct GalileiElement {
  double theta = 0.0;
  double phi = 0.0;
  Rot2 rot{};
  double b = 0.0;
  Vec2 v{};
  Vec2 a{};

  static GalileiElement identity() { return {}; }
};

/// Mass cocycle exponent (m/2)(a.Rv' - v.Ra' + b' v.Rv').
double galilei_cocycle1(const GalileiElement& r, const GalileiElement& r2, double m);
/// Second-extension cocycle exponent (lambda/2)(v ^ Rv').
double galilei_cocycle2(const GalileiElement& r, const GalileiElement& r2, double lambda);

GalileiElement compose(const GalileiElement& g, const GalileiElement& g2,
                       const GalileiParams& params);
/// Inverse obtained by solving the composition law for the neutral element:
/// the (R,b,v,a) part is forced, then the phases absorb the cocycle values.
GalileiElement inverse(const GalileiElement& g, const GalileiParams& params);

/// Element of a centrally extended translation group of the plane's phase
/// space. Carries 1, 2 or 3 central phases and the matching extension
/// constants alongside.
struct TransElement {
  int arity = 2;                             // number of central phases
  std::array<double, 3> phase{0.0, 0.0, 0.0};  // theta, phi, psi
  Vec2 q{};
  Vec2 p{};
  std::array<double, 3> ext{1.0, 1.0, 1.0};  // alpha, beta, gamma

  static TransElement singly(double theta, Vec2 q, Vec2 p, double alpha);
  static TransElement doubly(double theta, double phi, Vec2 q, Vec2 p, double alpha, double beta);
  static TransElement triply(double theta, double phi, double psi, Vec2 q, Vec2 p, double alpha,
                             double beta, double gamma);
  static TransElement identity_like(const TransElement& g);
};

/// Composition with the centrally twisted law; phases pick up
/// (alpha/2)(<q,p'>-<p,q'>), (beta/2) p^p', (gamma/2) q^q' per arity.
TransElement compose(const TransElement& g, const TransElement& g2);
TransElement inverse(const TransElement& g);

/// A local exponent on the translation group: a real two-argument function
/// entering a centrally extended composition law.
struct LocalExponent {
  std::string label;
  std::function<double(const TransElement&, const TransElement&)> eval;

  static LocalExponent xi();         // (1/2)(<q,p'> - <p,q'>)
  static LocalExponent xi_prime();   // (1/2) p ^ p'
  static LocalExponent xi_dprime();  // (1/2) q ^ q'
  static LocalExponent combination(const std::vector<std::pair<double, LocalExponent>>& terms);
};

/// Exact-rational evaluation of the three bilinear exponents on rational
/// coordinates (q1,q2,p1,p2). kind: 0 = xi, 1 = xi', 2 = xi''.
Rational exact_exponent(int kind, const std::array<Rational, 4>& g,
                        const std::array<Rational, 4>& g2);

struct AxiomReport {
  double max_cocycle_residual = 0.0;    // associativity-type identity
  double max_neutral_residual = 0.0;    // xi(g,e), xi(e,g)
  double max_inverse_residual = 0.0;    // xi(g,g^-1) - xi(g^-1,g)
  int samples = 0;
  double worst() const;
};

/// Randomized verification of the local-exponent axioms for a translation
/// group exponent. Components drawn uniform in [-2,2] from the given seed.
AxiomReport check_exponent_axioms(const LocalExponent& xi, int arity, int samples,
                                  std::uint64_t seed);

/// Same axioms for a Galilei-side exponent (the two cocycles above or any
/// custom combination).
using GalileiExponent = std::function<double(const GalileiElement&, const GalileiElement&)>;
AxiomReport check_galilei_exponent_axioms(const GalileiExponent& xi, const GalileiParams& params,
                                          int samples, std::uint64_t seed);

struct WitnessReport {
  double max_symmetric_part = 0.0;  // |d(g,g') + d(g',g)| for d = xi_a - xi_b
  double max_difference = 0.0;      // |d(g,g')|, must be > 0 for a witness
  bool degenerate = false;          // the two exponents coincide on all samples
  int samples = 0;
};

/// Antisymmetry witness for inequivalence of two exponents on an abelian
/// group: their difference must be antisymmetric and not identically zero.
/// Evaluated on a fixed deterministic sample set.
WitnessReport antisymmetry_witness(const LocalExponent& xi_a, const LocalExponent& xi_b,
                                   int samples, std::uint64_t seed = 2024);

}  // namespace ncqm::grp
