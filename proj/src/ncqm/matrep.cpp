#include "ncqm/matrep.hpp"

#include <stdexcept>

namespace ncqm::matrep {

Mat7 group_mat7(const grp::TransElement& g) {
  if (g.arity != 2) throw std::invalid_argument("group_mat7: arity-2 element required");
  const double a = g.ext[0], b = g.ext[1];
  Mat7 m = Mat7::Identity();
  m(0, 2) = -0.5 * a * g.p.x;
  m(0, 3) = -0.5 * a * g.p.y;
  m(0, 4) = 0.5 * a * g.q.x;
  m(0, 5) = 0.5 * a * g.q.y;
  m(0, 6) = g.phase[0];
  m(1, 4) = -0.5 * b * g.p.y;
  m(1, 5) = 0.5 * b * g.p.x;
  m(1, 6) = g.phase[1];
  m(2, 6) = g.q.x;
  m(3, 6) = g.q.y;
  m(4, 6) = g.p.x;
  m(5, 6) = g.p.y;
  return m;
}

Mat8 group_mat8(const grp::TransElement& g) {
  if (g.arity != 3) throw std::invalid_argument("group_mat8: arity-3 element required");
  const double a = g.ext[0], b = g.ext[1], c = g.ext[2];
  Mat8 m = Mat8::Identity();
  m(0, 3) = -0.5 * a * g.p.x;
  m(0, 4) = -0.5 * a * g.p.y;
  m(0, 5) = 0.5 * a * g.q.x;
  m(0, 6) = 0.5 * a * g.q.y;
  m(0, 7) = g.phase[0];
  m(1, 5) = -0.5 * b * g.p.y;
  m(1, 6) = 0.5 * b * g.p.x;
  m(1, 7) = g.phase[1];
  m(2, 3) = -0.5 * c * g.q.y;
  m(2, 4) = 0.5 * c * g.q.x;
  m(2, 7) = g.phase[2];
  m(3, 7) = g.q.x;
  m(4, 7) = g.q.y;
  m(5, 7) = g.p.x;
  m(6, 7) = g.p.y;
  return m;
}

Eigen::MatrixXd algebra_mat(const std::vector<double>& x, double alpha, double beta) {
  if (x.size() != 6) throw std::invalid_argument("algebra_mat: 6 coefficients required");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(7, 7);
  m(0, 2) = -0.5 * alpha * x[0];
  m(0, 3) = -0.5 * alpha * x[1];
  m(0, 4) = 0.5 * alpha * x[2];
  m(0, 5) = 0.5 * alpha * x[3];
  m(0, 6) = x[4];
  m(1, 4) = -0.5 * beta * x[1];
  m(1, 5) = 0.5 * beta * x[0];
  m(1, 6) = x[5];
  m(2, 6) = x[2];
  m(3, 6) = x[3];
  m(4, 6) = x[0];
  m(5, 6) = x[1];
  return m;
}

Eigen::MatrixXd algebra_mat(const std::vector<double>& x, double alpha, double beta,
                            double gamma) {
  if (x.size() != 7) throw std::invalid_argument("algebra_mat: 7 coefficients required");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(8, 8);
  m(0, 3) = -0.5 * alpha * x[0];
  m(0, 4) = -0.5 * alpha * x[1];
  m(0, 5) = 0.5 * alpha * x[2];
  m(0, 6) = 0.5 * alpha * x[3];
  m(0, 7) = x[4];
  m(1, 5) = -0.5 * beta * x[1];
  m(1, 6) = 0.5 * beta * x[0];
  m(1, 7) = x[5];
  m(2, 3) = -0.5 * gamma * x[3];
  m(2, 4) = 0.5 * gamma * x[2];
  m(2, 7) = x[6];
  m(3, 7) = x[2];
  m(4, 7) = x[3];
  m(5, 7) = x[0];
  m(6, 7) = x[1];
  return m;
}

Eigen::MatrixXd basis_mat(int index, double alpha, double beta) {
  std::vector<double> x(6, 0.0);
  x.at(index) = 1.0;
  return algebra_mat(x, alpha, beta);
}

Eigen::MatrixXd basis_mat(int index, double alpha, double beta, double gamma) {
  std::vector<double> x(7, 0.0);
  x.at(index) = 1.0;
  return algebra_mat(x, alpha, beta, gamma);
}

Eigen::MatrixXd nilpotent_exp(const Eigen::MatrixXd& x) {
  const int n = static_cast<int>(x.rows());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k < n; ++k) {
    term = (term * x) / static_cast<double>(k);
    acc += term;
  }
  return acc;
}

Eigen::MatrixXd unipotent_log(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  const Eigen::MatrixXd u = m - Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  double sign = 1.0;
  for (int k = 1; k < n; ++k) {
    power = power * u;
    acc += (sign / static_cast<double>(k)) * power;
    sign = -sign;
  }
  return acc;
}

const Bracket& StructureTable::find(int i, int j) const {
  for (const auto& b : brackets)
    if (b.i == i && b.j == j) return b;
  throw std::out_of_range("StructureTable: no such bracket");
}

namespace {

// Reads coefficients off the distinguished last-column slots, then verifies
// the commutator is exactly reproduced by those coefficients.
std::vector<double> reexpress(const Eigen::MatrixXd& c, double alpha, double beta, double gamma,
                              bool triple, double* residual) {
  std::vector<double> x;
  Eigen::MatrixXd rebuilt;
  if (!triple) {
    x = {c(4, 6), c(5, 6), c(2, 6), c(3, 6), c(0, 6), c(1, 6)};
    rebuilt = algebra_mat(x, alpha, beta);
  } else {
    x = {c(5, 7), c(6, 7), c(3, 7), c(4, 7), c(0, 7), c(1, 7), c(2, 7)};
    rebuilt = algebra_mat(x, alpha, beta, gamma);
  }
  const double r = (rebuilt - c).cwiseAbs().maxCoeff();
  if (residual) *residual = r;
  if (r != 0.0 && r > 1e-13)
    throw std::runtime_error("structure_constants: commutator left the basis span");
  return x;
}

StructureTable build_table(int nbasis, double alpha, double beta, double gamma, bool triple) {
  StructureTable table;
  table.dim = nbasis;
  std::vector<Eigen::MatrixXd> basis;
  for (int i = 0; i < nbasis; ++i)
    basis.push_back(triple ? basis_mat(i, alpha, beta, gamma) : basis_mat(i, alpha, beta));
  for (int i = 0; i < nbasis; ++i) {
    for (int j = 0; j < nbasis; ++j) {
      if (i == j) continue;
      const Eigen::MatrixXd comm = basis[i] * basis[j] - basis[j] * basis[i];
      double r = 0.0;
      Bracket b;
      b.i = i;
      b.j = j;
      b.coeffs = reexpress(comm, alpha, beta, gamma, triple, &r);
      table.max_reexpression_residual = std::max(table.max_reexpression_residual, r);
      table.brackets.push_back(std::move(b));
    }
  }
  return table;
}

}  // namespace

StructureTable structure_constants(double alpha, double beta) {
  return build_table(6, alpha, beta, 0.0, false);
}

StructureTable structure_constants(double alpha, double beta, double gamma) {
  return build_table(7, alpha, beta, gamma, true);
}

Mat7 subgroup_mat7(double theta, double phi, const Vec2& q, double alpha) {
  Mat7 m = Mat7::Identity();
  m(0, 4) = 0.5 * alpha * q.x;
  m(0, 5) = 0.5 * alpha * q.y;
  m(0, 6) = theta;
  m(1, 6) = phi;
  m(2, 6) = q.x;
  m(3, 6) = q.y;
  return m;
}

Mat8 subgroup_mat8(double theta, double phi, double psi, double p1, double q2, double alpha,
                   double beta, double gamma) {
  Mat8 m = Mat8::Identity();
  m(0, 3) = -0.5 * alpha * p1;
  m(0, 6) = 0.5 * alpha * q2;
  m(0, 7) = theta;
  m(1, 6) = 0.5 * beta * p1;
  m(1, 7) = phi;
  m(2, 3) = -0.5 * gamma * q2;
  m(2, 7) = psi;
  m(4, 7) = q2;
  m(5, 7) = p1;
  return m;
}

Mat7 section_mat7(const Vec2& s, double alpha, double beta) {
  Mat7 m = Mat7::Identity();
  m(0, 2) = -0.5 * alpha * s.x;
  m(0, 3) = -0.5 * alpha * s.y;
  m(1, 4) = -0.5 * beta * s.y;
  m(1, 5) = 0.5 * beta * s.x;
  m(4, 6) = s.x;
  m(5, 6) = s.y;
  return m;
}

Mat8 section_mat8(double r1, double s2, double alpha, double beta, double gamma) {
  Mat8 m = Mat8::Identity();
  m(0, 4) = -0.5 * alpha * s2;
  m(0, 5) = 0.5 * alpha * r1;
  m(1, 5) = -0.5 * beta * s2;
  m(2, 4) = 0.5 * gamma * r1;
  m(3, 7) = r1;
  m(6, 7) = s2;
  return m;
}

namespace {

double factor_residual2(const Vec2& s, const grp::TransElement& g, const CosetFactors& f) {
  const Mat7 lhs = section_mat7(s, g.ext[0], g.ext[1]) * group_mat7(g);
  const Mat7 rhs = subgroup_mat7(f.h_theta, f.h_phi, {f.h_u, f.h_v}, g.ext[0]) *
                   section_mat7(f.s_out, g.ext[0], g.ext[1]);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double factor_residual3(const Vec2& s, const grp::TransElement& g, const CosetFactors& f) {
  const Mat8 lhs = section_mat8(s.x, s.y, g.ext[0], g.ext[1], g.ext[2]) * group_mat8(g);
  const Mat8 rhs = subgroup_mat8(f.h_theta, f.h_phi, f.h_psi, f.h_u, f.h_v, g.ext[0], g.ext[1],
                                 g.ext[2]) *
                   section_mat8(f.s_out.x, f.s_out.y, g.ext[0], g.ext[1], g.ext[2]);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace

CosetFactors master_factorize_closed(const Vec2& s, const grp::TransElement& g) {
  CosetFactors f;
  if (g.arity == 2) {
    const double alpha = g.ext[0], beta = g.ext[1];
    f.h_u = g.q.x;
    f.h_v = g.q.y;
    f.s_out = {g.p.x + s.x, g.p.y + s.y};
    f.h_theta = g.phase[0] - alpha * dot(g.q, s + 0.5 * g.p);
    f.h_phi = g.phase[1] - 0.5 * beta * wedge(g.p, s);
    f.residual = factor_residual2(s, g, f);
  } else if (g.arity == 3) {
    const double alpha = g.ext[0], beta = g.ext[1], gamma = g.ext[2];
    const double r1 = s.x, s2 = s.y;
    f.h_u = g.p.x;  // p1
    f.h_v = g.q.y;  // q2
    f.s_out = {r1 + g.q.x, s2 + g.p.y};
    f.h_theta = g.phase[0] - alpha * g.q.y * s2 + alpha * g.p.x * r1 +
                0.5 * alpha * g.q.x * g.p.x - 0.5 * alpha * g.q.y * g.p.y;
    f.h_phi = g.phase[1] - beta * g.p.x * s2 - 0.5 * beta * g.p.x * g.p.y;
    f.h_psi = g.phase[2] + gamma * g.q.y * r1 + 0.5 * gamma * g.q.x * g.q.y;
    f.residual = factor_residual3(s, g, f);
  } else {
    throw std::invalid_argument("master_factorize: arity 2 or 3 required");
  }
  return f;
}

CosetFactors master_factorize_brute(const Vec2& s, const grp::TransElement& g) {
  CosetFactors f;
  if (g.arity == 2) {
    const Mat7 t = section_mat7(s, g.ext[0], g.ext[1]) * group_mat7(g);
    f.s_out = {t(4, 6), t(5, 6)};
    const Mat7 h = t * section_mat7(f.s_out, g.ext[0], g.ext[1]).inverse();
    f.h_theta = h(0, 6);
    f.h_phi = h(1, 6);
    f.h_u = h(2, 6);
    f.h_v = h(3, 6);
    f.residual = factor_residual2(s, g, f);
  } else if (g.arity == 3) {
    const Mat8 t = section_mat8(s.x, s.y, g.ext[0], g.ext[1], g.ext[2]) * group_mat8(g);
    f.s_out = {t(3, 7), t(6, 7)};
    const Mat8 h =
        t * section_mat8(f.s_out.x, f.s_out.y, g.ext[0], g.ext[1], g.ext[2]).inverse();
    f.h_theta = h(0, 7);
    f.h_phi = h(1, 7);
    f.h_psi = h(2, 7);
    f.h_u = h(5, 7);  // p1
    f.h_v = h(4, 7);  // q2
    f.residual = factor_residual3(s, g, f);
  } else {
    throw std::invalid_argument("master_factorize: arity 2 or 3 required");
  }
  return f;
}

}  // namespace ncqm::matrep
