#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "ncqm/grid.hpp"

namespace ncqm::wig {

using grid::cplx;
using grid::GridFunction;
using grid::GridSpec;

/// Operator on the truncated one-mode ladder space.
struct FockOperator {
  Eigen::MatrixXcd m;

  int dim() const { return static_cast<int>(m.rows()); }
  static FockOperator zero(int dim) { return {Eigen::MatrixXcd::Zero(dim, dim)}; }
  static FockOperator ket_bra(int dim, int i, int j);
  double hs_norm() const { return m.norm(); }
};

/// Oscillator-basis canonical pair: Q real symmetric tridiagonal, P
/// i-antisymmetric; [Q, P] = i I on the upper-left (dim-1) block.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> base_qp(int dim);

/// The four superoperators realizing the noncommutative algebra on
/// Hilbert-Schmidt space: Q1: X -> QX, Q2: X -> theta PX, P1: X -> [P, X],
/// P2: X -> -(1/theta)[Q, X]. Throws for theta == 0.
struct HsOps {
  std::function<FockOperator(const FockOperator&)> q1, q2, p1, p2;
};
HsOps hs_ops(double theta, int dim);

/// Exact synthesis of the truncated displacement exp(-i(z1 Q + z2 P)):
/// conjugating Q's spectral decomposition by the number-operator phase turns
/// an arbitrary direction into the radial one, exactly in the truncation.
/// Values are windowed to the radius where the truncated ladder still
/// resolves the displacement; the radius is calibrated once against the
/// closed-form vacuum overlap e^{-r^2/4}.
class DisplacementSynth {
 public:
  explicit DisplacementSynth(int dim, double tail_tol = 1e-8);

  int dim() const { return dim_; }
  double validity_radius() const { return radius_; }
  /// Full matrix (not windowed); matches a dense matrix exponential.
  Eigen::MatrixXcd displacement(double z1, double z2) const;
  /// Windowed Tr[exp(-i(z1 Q + z2 P)) X].
  cplx char_value(const FockOperator& x, double z1, double z2) const;

 private:
  int dim_;
  double radius_ = 0.0;
  Eigen::VectorXd evals_;
  Eigen::MatrixXd evecs_;
};

/// (W X)(x, y) = (1/sqrt(2 pi)) Tr[e^{-i(xQ + yP)} X] on the grid. Unitary
/// onto its image: <W X, W Y> == Tr[X^dag Y] for well-contained operators.
GridFunction wigner_map(const FockOperator& x, const GridSpec& spec);

/// The full realization map onto L^2: the transform above composed with the
/// unitary scaled Fourier layer that carries the Hilbert-Schmidt operators
/// q1 -> x + i(theta/2) d2, q2 -> y - i(theta/2) d1, p_i -> -i d_i.
GridFunction realization_map(const FockOperator& x, const GridSpec& spec, double theta);

struct EquivalencePair {
  std::string label;
  double residual = 0.0;
};

struct EquivalenceReport {
  int dim = 0;
  double validity_radius = 0.0;
  std::vector<EquivalencePair> pairs;
  double worst = 0.0;
};

/// Compares the realization map of each superoperator applied to each probe
/// against the grid operator applied to the mapped probe.
EquivalenceReport equivalence_check(double theta, int dim, const GridSpec& spec,
                                    const std::vector<FockOperator>& probes);

/// Low-level default probes |0><0|, |0><1|, |1><1|.
std::vector<FockOperator> standard_fock_probes(int dim);

}  // namespace ncqm::wig
