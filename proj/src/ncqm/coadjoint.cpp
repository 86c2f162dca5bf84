#include "ncqm/coadjoint.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "ncqm/matrep.hpp"

namespace ncqm::coad {

DualVector coadjoint_act(const grp::TransElement& g, const DualVector& f) {
  if (g.arity != f.arity()) throw std::invalid_argument("coadjoint_act: arity mismatch");
  const double alpha = g.ext[0], beta = g.ext[1], gamma = g.ext[2];
  // group parameters in the (a1..a4) = (p1, p2, q1, q2) order
  const double a1 = g.p.x, a2 = g.p.y, a3 = g.q.x, a4 = g.q.y;
  DualVector out = f;
  const auto& x = f.x;
  if (f.arity() == 2) {
    out.x[0] = x[0] - 0.5 * alpha * a3 * x[4] + 0.5 * beta * a2 * x[5];
    out.x[1] = x[1] - 0.5 * alpha * a4 * x[4] - 0.5 * beta * a1 * x[5];
    out.x[2] = x[2] + 0.5 * alpha * a1 * x[4];
    out.x[3] = x[3] + 0.5 * alpha * a2 * x[4];
  } else {
    out.x[0] = x[0] - 0.5 * alpha * a3 * x[4];
    out.x[1] = x[1] - 0.5 * alpha * a4 * x[4];
    out.x[2] = x[2] + 0.5 * alpha * a1 * x[4] + 0.5 * gamma * a4 * x[6];
    out.x[3] = x[3] + 0.5 * alpha * a2 * x[4] - 0.5 * gamma * a3 * x[6];
  }
  return out;
}

double coadjoint_matrix_check(const grp::TransElement& g, const DualVector& f) {
  const DualVector closed = coadjoint_act(g, f);
  const double alpha = g.ext[0];
  DualVector read = f;
  if (f.arity() == 2) {
    Eigen::Matrix<double, 7, 7> fm = Eigen::Matrix<double, 7, 7>::Zero();
    fm(6, 0) = f.x[4];
    fm(6, 1) = f.x[5];
    fm(6, 2) = f.x[2];
    fm(6, 3) = f.x[3];
    fm(6, 4) = f.x[0];
    fm(6, 5) = f.x[1];
    const auto m = matrep::group_mat7(g);
    const Eigen::Matrix<double, 7, 7> c = m * fm * m.inverse();
    read.x = {c(6, 4), c(6, 5), c(6, 2), c(6, 3), c(6, 0), c(6, 1)};
  } else {
    if (alpha == 0.0) throw std::invalid_argument("coadjoint_matrix_check: alpha must be nonzero");
    Eigen::Matrix<double, 8, 8> fm = Eigen::Matrix<double, 8, 8>::Zero();
    fm(3, 0) = -2.0 / alpha * f.x[0];
    fm(4, 0) = -2.0 / alpha * f.x[1];
    fm(7, 0) = f.x[4];
    fm(7, 1) = f.x[5];
    fm(7, 2) = f.x[6];
    fm(7, 3) = f.x[2];
    fm(7, 4) = f.x[3];
    const auto m = matrep::group_mat8(g);
    const Eigen::Matrix<double, 8, 8> c = m * fm * m.inverse();
    read.x = {-0.5 * alpha * c(3, 0), -0.5 * alpha * c(4, 0), c(7, 3), c(7, 4),
              c(7, 0),                c(7, 1),                c(7, 2)};
  }
  double worst = 0.0;
  for (size_t i = 0; i < closed.x.size(); ++i)
    worst = std::max(worst, std::abs(closed.x[i] - read.x[i]));
  return worst;
}

OrbitLabel invariants(const DualVector& f) {
  OrbitLabel lbl;
  lbl.rho = f.x[4];
  lbl.sigma = f.x[5];
  if (f.arity() == 3) lbl.tau = f.x[6];
  return lbl;
}

namespace {

// The action is affine in the group parameters; columns of the derivative are
// exact differences along the four translation directions.
Eigen::Matrix4d orbit_jacobian(const DualVector& f, double alpha, double beta, double gamma) {
  Eigen::Matrix4d jac;
  const int arity = f.arity();
  auto element = [&](double a1, double a2, double a3, double a4) {
    return arity == 2
               ? grp::TransElement::doubly(0, 0, {a3, a4}, {a1, a2}, alpha, beta)
               : grp::TransElement::triply(0, 0, 0, {a3, a4}, {a1, a2}, alpha, beta, gamma);
  };
  const DualVector base = coadjoint_act(element(0, 0, 0, 0), f);
  for (int dir = 0; dir < 4; ++dir) {
    double a[4] = {0, 0, 0, 0};
    a[dir] = 1.0;
    const DualVector moved = coadjoint_act(element(a[0], a[1], a[2], a[3]), f);
    for (int row = 0; row < 4; ++row) jac(row, dir) = moved.x[row] - base.x[row];
  }
  return jac;
}

}  // namespace

grp::TransElement orbit_zero_section(const DualVector& f, double alpha, double beta,
                                     double gamma) {
  const OrbitLabel lbl = invariants(f);
  const bool degenerate =
      lbl.rho == 0.0 || lbl.sigma == 0.0 || (lbl.tau.has_value() && *lbl.tau == 0.0);
  if (degenerate) throw std::invalid_argument("orbit_zero_section: vanishing invariant");

  const Eigen::Matrix4d jac = orbit_jacobian(f, alpha, beta, gamma);
  Eigen::Vector4d rhs;
  for (int i = 0; i < 4; ++i) rhs(i) = -f.x[i];
  const Eigen::Vector4d u = jac.fullPivLu().solve(rhs);
  return f.arity() == 2
             ? grp::TransElement::doubly(0, 0, {u(2), u(3)}, {u(0), u(1)}, alpha, beta)
             : grp::TransElement::triply(0, 0, 0, {u(2), u(3)}, {u(0), u(1)}, alpha, beta, gamma);
}

int orbit_jacobian_rank(const DualVector& f_rep, double alpha, double beta, double gamma,
                        double threshold) {
  const Eigen::Matrix4d jac = orbit_jacobian(f_rep, alpha, beta, gamma);
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(jac);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold * sv(0)) ++rank;
  return rank;
}

}  // namespace ncqm::coad
