#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "ncqm/grid.hpp"

namespace ncqm::op {

using grid::cplx;
using grid::GridFunction;
using grid::GridSpec;

/// A linear operator on grid functions, carried as a closure over immutable
/// data. Thread-safe to apply concurrently.
struct LinearOp {
  std::string label;
  std::function<GridFunction(const GridFunction&)> apply;

  GridFunction operator()(const GridFunction& f) const { return apply(f); }
};

LinearOp identity_op();
LinearOp mul_coord(int axis);                          // multiplication by x_axis
LinearOp spectral_derivative(int axis);                // d/dx_axis via ik
LinearOp scaled(cplx c, const LinearOp& a);
LinearOp sum(const LinearOp& a, const LinearOp& b, const std::string& label = "");
LinearOp difference(const LinearOp& a, const LinearOp& b, const std::string& label = "");

GridFunction commutator(const LinearOp& a, const LinearOp& b, const GridFunction& f);

/// Position-space realization of the noncommutative oscillator operators:
///   Q1 = x + i(theta/2) d/dy,   Q2 = y - i(theta/2) d/dx,
///   P_i = -i d/dx_i,  H = -lap/(2m),  M = -i(x d/dy - y d/dx),  N_i = m Q_i.
/// (hbar = 1 throughout.)
struct NcOps {
  LinearOp q1, q2, p1, p2, h, mrot, n1, n2, id;
};
NcOps ncqm_ops(double m, double theta);

/// Noncommutative positions assembled from the canonical pair:
/// Qhat_i = x_i -+ (theta/2) P_{3-i}; equals the q1/q2 of ncqm_ops as an
/// operator identity on probes.
std::pair<LinearOp, LinearOp> noncanonical_positions(double theta);

enum class Picture { s_space, x_space };

/// Self-adjoint generators of the doubly extended translation group.
struct QuadOps {
  LinearOp q1, q2, p1, p2;
};
QuadOps double_ext_ops(double alpha, double beta, Picture picture);

/// Generators of the triply extended group on (s1, s2). The printed p1 has no
/// alpha factor; scaled_p1 switches in the -alpha*s1 variant for comparison.
QuadOps triple_ext_ops(double alpha, double beta, double gamma, bool scaled_p1 = false);

/// One-sided generator extraction from a one-parameter unitary family:
/// i [U(+eps) - U(-eps)] f / (2 eps), optionally Richardson-extrapolated
/// (one halving, O(eps^4)).
GridFunction generator_from_rep(const std::function<GridFunction(double)>& one_param, double eps,
                                bool richardson = false);

struct BracketCase {
  std::string label;
  LinearOp a, b;
  cplx coeff;           // expected [a,b] = coeff * rhs
  LinearOp rhs;         // defaults to the identity
};

struct BracketResult {
  std::string label;
  double residual = 0.0;  // max over probes of |[a,b]f - coeff rhs f| / |f|
};

struct BracketReport {
  std::vector<BracketResult> results;
  double worst = 0.0;
};

/// Evaluates every bracket on every probe; relative residuals per bracket.
BracketReport bracket_table_check(const std::vector<BracketCase>& table,
                                  const std::vector<GridFunction>& probes);

/// The documented fixed probe set: unit Gaussians centered at 0 and (1, 0.5)
/// with widths 1 and 0.7, plus one Hermite-modulated Gaussian.
std::vector<GridFunction> standard_probes(const GridSpec& spec);

/// max over probe pairs of |<f, A g> - <A f, g>| (self-adjointness defect).
double adjoint_defect(const LinearOp& a, const std::vector<GridFunction>& probes);

}  // namespace ncqm::op
