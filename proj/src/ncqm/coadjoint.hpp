#pragma once

#include <optional>
#include <vector>

#include "ncqm/group.hpp"

namespace ncqm::coad {

/// Coordinates (X1..X6) or (X1..X7) of a dual Lie-algebra element.
struct DualVector {
  std::vector<double> x;  // size 6 (double ext) or 7 (triple ext)

  int arity() const { return x.size() == 6 ? 2 : 3; }
};

struct OrbitLabel {
  double rho = 0.0;
  double sigma = 0.0;
  std::optional<double> tau;
};

/// Closed-form coadjoint action of g on F. The central coordinates
/// X5, X6 (and X7) are copied through unchanged.
DualVector coadjoint_act(const grp::TransElement& g, const DualVector& f);

/// Re-derives the action by conjugating the dual-element matrix with the
/// faithful group matrix and reading the designated slots; returns the max
/// discrepancy against the closed form.
double coadjoint_matrix_check(const grp::TransElement& g, const DualVector& f);

/// The polynomial invariants: the central coordinates.
OrbitLabel invariants(const DualVector& f);

/// Group element whose coadjoint action sends F to (0,0,0,0,rho,sigma[,tau]).
/// Throws when an invariant vanishes (the generic orbit degenerates).
grp::TransElement orbit_zero_section(const DualVector& f, double alpha, double beta,
                                     double gamma = 0.0);

/// Numerical rank of the Jacobian of (a1..a4) -> first four coordinates of
/// K(g)F at the orbit representative; generic orbits have rank 4.
int orbit_jacobian_rank(const DualVector& f_rep, double alpha, double beta, double gamma = 0.0,
                        double threshold = 1e-8);

}  // namespace ncqm::coad
