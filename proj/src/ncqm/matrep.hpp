#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ncqm/group.hpp"

namespace ncqm::matrep {

using Mat7 = Eigen::Matrix<double, 7, 7>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

/// Faithful unipotent matrix of a doubly extended translation-group element.
Mat7 group_mat7(const grp::TransElement& g);
/// Same for the triply extended group.
Mat8 group_mat8(const grp::TransElement& g);

/// Strictly upper triangular algebra element with coefficients x on the basis
/// (Q1, Q2, P1, P2, Theta, Phi[, Psi]). The Q's generate the p-parameters and
/// the P's the q-parameters; the basis order follows that pairing.
Eigen::MatrixXd algebra_mat(const std::vector<double>& x, double alpha, double beta);
Eigen::MatrixXd algebra_mat(const std::vector<double>& x, double alpha, double beta, double gamma);

/// Basis matrix with a single unit coefficient, double (dim 7) or triple
/// (dim 8) extension depending on how many constants are passed.
Eigen::MatrixXd basis_mat(int index, double alpha, double beta);
Eigen::MatrixXd basis_mat(int index, double alpha, double beta, double gamma);

/// exp for nilpotent / log for unipotent matrices; both series terminate.
Eigen::MatrixXd nilpotent_exp(const Eigen::MatrixXd& x);
Eigen::MatrixXd unipotent_log(const Eigen::MatrixXd& m);

inline const char* basis_name(int i) {
  static const char* names[] = {"Q1", "Q2", "P1", "P2", "Theta", "Phi", "Psi"};
  return names[i];
}

struct Bracket {
  int i = 0, j = 0;                // bracket [basis_i, basis_j]
  std::vector<double> coeffs;      // expansion back on the basis
};

struct StructureTable {
  int dim = 0;  // 6 or 7 basis elements
  std::vector<Bracket> brackets;
  double max_reexpression_residual = 0.0;

  const Bracket& find(int i, int j) const;
  double coeff(int i, int j, int k) const { return find(i, j).coeffs[k]; }
};

/// All pairwise commutators of the basis matrices, re-expressed on the basis.
/// Throws if a commutator leaves the span (transcription bug).
StructureTable structure_constants(double alpha, double beta);
StructureTable structure_constants(double alpha, double beta, double gamma);

/// Abelian subgroup matrices h(...): the polarizing subgroup of each group.
Mat7 subgroup_mat7(double theta, double phi, const Vec2& q, double alpha);
Mat8 subgroup_mat8(double theta, double phi, double psi, double p1, double q2, double alpha,
                   double beta, double gamma);

/// Coset section matrices delta(s).
Mat7 section_mat7(const Vec2& s, double alpha, double beta);
Mat8 section_mat8(double r1, double s2, double alpha, double beta, double gamma);

/// Solution of delta(s) M(g) = h(...) delta(s_out).
struct CosetFactors {
  double h_theta = 0.0, h_phi = 0.0, h_psi = 0.0;
  double h_u = 0.0, h_v = 0.0;  // (q1,q2) for the double, (p1,q2) for the triple
  Vec2 s_out{};
  double residual = 0.0;  // max-abs entry of delta(s) M(g) - h delta(s_out)
};

CosetFactors master_factorize_closed(const Vec2& s, const grp::TransElement& g);
CosetFactors master_factorize_brute(const Vec2& s, const grp::TransElement& g);

}  // namespace ncqm::matrep
