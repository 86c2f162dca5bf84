#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncqm/grid.hpp"
#include "ncqm/group.hpp"
#include "ncqm/operators.hpp"

namespace ncqm::cs {

using grid::cplx;
using grid::GridFunction;
using grid::GridSpec;

struct GaussianProfile {
  double amp = 1.0;    // eta(x) = amp * exp(-|x|^2 / (2 width^2))
  double width = 1.0;
};

/// Fiducial vector of the coherent-state family. Must be rotationally
/// invariant. When the closed-form Gaussian profile is present, phase-space
/// translates are sampled exactly instead of Fourier-shifted.
struct Fiducial {
  GridFunction eta;
  double normalization = 1.0;  // constant applied to the raw window function
  std::optional<GaussianProfile> profile;

  static Fiducial unit_gaussian(const GridSpec& spec);
  /// Max deviation of eta under the lattice dihedral symmetries; a grid proxy
  /// for the rotational-invariance requirement.
  double dihedral_asymmetry() const;
};

/// Midpoint-rule quadrature over (q, p) in [-lq, lq)^2 x [-lp, lp)^2.
struct PhaseGrid {
  int nq = 24, np = 24;
  double lq = 6.0, lp = 6.0;

  PhaseGrid() = default;
  PhaseGrid(int nq_, double lq_, int np_, double lp_);

  double hq() const { return 2.0 * lq / nq; }
  double hp() const { return 2.0 * lp / np; }
  double qnode(int i) const { return -lq + (i + 0.5) * hq(); }
  double pnode(int i) const { return -lp + (i + 0.5) * hp(); }
  double weight() const { return hq() * hq() * hp() * hp(); }
  std::int64_t node_count() const {
    return static_cast<std::int64_t>(nq) * nq * np * np;
  }
  /// Total weight equals the 4-volume of the quadrature box.
  double volume() const { return 16.0 * lq * lq * lp * lp; }
};

/// Coset section over phase space: beta(q, p) = (0, 0, I, 0, p/m, q).
grp::GalileiElement section_beta(const Vec2& q, const Vec2& p, double m);

/// Coherent state at the coset point (q, p):
///   eta_{q,p}(x) = e^{i(x + q/2).p} eta(x + q + (lambda/2m^2) J p),
/// equal to apply_galilei_config(section_beta(q,p), eta).
GridFunction coherent_state(const Fiducial& fid, const Vec2& q, const Vec2& p,
                            const grp::GalileiParams& params);

/// State used by the quantizer for the phase-space point (q, p): the group
/// translate concentrated at position q with momentum p. The representation
/// moves a packet at the origin to -a, so this is the coset point (-q, p).
GridFunction quantizer_state(const Fiducial& fid, const Vec2& q, const Vec2& p,
                             const grp::GalileiParams& params);

struct ResolutionResult {
  cplx lhs = 0.0;       // quadrature of <f|state><state|g>
  cplx inner_fg = 0.0;  // <f|g>
  cplx ratio = 0.0;     // lhs / <f|g>
};

/// Numerical resolution-of-identity check over the phase grid. The measured
/// ratio is compared by the caller against the candidate constants
/// (2 pi)^2 ||eta||^2 and 2 pi ||eta||^2.
ResolutionResult resolution_check(const Fiducial& fid, const GridFunction& f,
                                  const GridFunction& g, const PhaseGrid& pg,
                                  const grp::GalileiParams& params, bool fast = false);

/// Same check for several (f, g) pairs drawn from a shared function list;
/// the states and projections are computed once per phase node.
std::vector<ResolutionResult> resolution_pairs(const Fiducial& fid,
                                               const std::vector<GridFunction>& funcs,
                                               const std::vector<std::pair<int, int>>& pairs,
                                               const PhaseGrid& pg,
                                               const grp::GalileiParams& params);

/// Phase-space symbol f(q, p).
struct Symbol {
  std::string name;
  std::function<cplx(const Vec2&, const Vec2&)> eval;

  static Symbol one();
  static Symbol coord_q(int axis);  // q1 or q2
  static Symbol coord_p(int axis);  // p1 or p2
};

/// Axis-aligned box in phase space (half-open per axis).
struct PhaseRect {
  Vec2 q_lo{}, q_hi{}, p_lo{}, p_hi{};

  bool contains(const Vec2& q, const Vec2& p) const;
  static PhaseRect full(const PhaseGrid& pg);
  static PhaseRect empty();
};

/// Coherent-state quantization engine over one fiducial + phase grid. The
/// operator of the unit symbol is measured once and its scalar divided out of
/// every quantized operator, so quantize(1) == I by construction.
class Quantizer {
 public:
  Quantizer(Fiducial fid, PhaseGrid pg, grp::GalileiParams params, bool fast = false);

  /// Measured scalar of the unit-symbol operator before normalization.
  double identity_scale() const;

  GridFunction apply(const Symbol& sym, const GridFunction& g) const;
  /// out[k][j] = (normalized) quantized symbol k applied to input j; one
  /// quadrature pass over the phase grid.
  std::vector<std::vector<GridFunction>> apply_batch(const std::vector<Symbol>& symbols,
                                                     const std::vector<GridFunction>& inputs) const;
  op::LinearOp as_operator(const Symbol& sym) const;

  /// Positive operator of a phase-space region, sharing the quantizer's
  /// normalization so that pov(full) == quantize(1).
  op::LinearOp pov_operator(const PhaseRect& rect) const;

  const PhaseGrid& phase_grid() const { return pg_; }
  const grp::GalileiParams& params() const { return params_; }
  const Fiducial& fiducial() const { return fid_; }
  bool fast() const { return fast_; }

 private:
  std::vector<std::vector<GridFunction>> run_batch(const std::vector<Symbol>& symbols,
                                                   const std::vector<GridFunction>& inputs,
                                                   const PhaseRect* rect, bool normalized) const;
  std::vector<std::vector<GridFunction>> direct_batch(const std::vector<Symbol>& symbols,
                                                      const std::vector<GridFunction>& inputs,
                                                      const PhaseRect* rect) const;
  std::vector<std::vector<GridFunction>> fft_batch(const std::vector<Symbol>& symbols,
                                                   const std::vector<GridFunction>& inputs,
                                                   const PhaseRect* rect) const;

  Fiducial fid_;
  PhaseGrid pg_;
  grp::GalileiParams params_;
  bool fast_ = false;
  mutable double scale_ = 0.0;  // measured once, then cached
};

struct CommutatorEntry {
  std::string a, b;     // symbol names
  int probe_id = 0;
  cplx coeff = 0.0;     // fit of [O_a, O_b] f against i f
  double residual = 0.0;
};

/// Measures all pairwise commutators of the quantized coordinate symbols on
/// the given probes.
std::vector<CommutatorEntry> quantized_commutators(const Quantizer& qz,
                                                   const std::vector<GridFunction>& probes);

}  // namespace ncqm::cs
