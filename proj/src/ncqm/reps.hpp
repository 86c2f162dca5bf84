#pragma once

#include "ncqm/grid.hpp"
#include "ncqm/group.hpp"

namespace ncqm::rep {

using grid::GridFunction;

/// Unitary action of an extended Galilei element on configuration space:
///   (U f)(x) = e^{i(theta+phi)} e^{i[(m/2) a.v + (b m/2)|v|^2]} e^{i m v.x}
///              [e^{i (b/2m)|k|^2} f](R^{-1}(x + a + b v + (lambda/2m) J v)).
/// This is the exact Fourier conjugate of the momentum-space action below;
/// the two pictures are intertwined by fourier() to machine precision.
GridFunction apply_galilei_config(const grp::GalileiElement& g, const GridFunction& f,
                                  const grp::GalileiParams& params);

/// Momentum-space action:
///   (U fh)(k) = e^{i(theta+phi)} e^{i[a.(k - m v/2) + (b/2m) k.k
///               + (lambda/2m) v^k]} fh(R^{-1}(k - m v)).
/// Rotations here must be quarter turns (exact lattice permutations).
GridFunction apply_galilei_momentum(const grp::GalileiElement& g, const GridFunction& fhat,
                                    const grp::GalileiParams& params);

/// Irreducible action of the doubly extended translation group:
///   (U f)(s) = exp i(theta + phi - alpha<q, s + p/2> - (beta/2) p^s) f(s + p).
GridFunction apply_double(const grp::TransElement& g, const GridFunction& f);

/// Irreducible action of the triply extended translation group on the
/// (r1, s2) coordinates (axis 0 is r1, axis 1 is s2).
GridFunction apply_triple(const grp::TransElement& g, const GridFunction& f);

/// True when the support of f shifted by s stays clear of the periodic
/// boundary (mass outside |x| <= l - margin below the given tolerance).
bool shift_stays_on_grid(const GridFunction& f, const Vec2& s, double tol = 1e-10);

}  // namespace ncqm::rep
