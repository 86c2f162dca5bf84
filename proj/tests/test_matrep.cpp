#include <fstream>

#include "doctest.h"
#include "ncqm/matrep.hpp"

using namespace ncqm;
using namespace ncqm::matrep;

namespace {

Eigen::MatrixXd load_golden(const std::string& name, int dim) {
  std::ifstream in(std::string(NCQM_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) in >> m(i, j);
  return m;
}

}  // namespace

TEST_CASE("identity elements map to identity matrices") {
  const auto e2 = grp::TransElement::doubly(0, 0, {}, {}, 1.3, 0.7);
  CHECK(group_mat7(e2).isIdentity(0.0));
  const auto e3 = grp::TransElement::triply(0, 0, 0, {}, {}, 1.3, 0.7, 0.4);
  CHECK(group_mat8(e3).isIdentity(0.0));
  CHECK_THROWS_AS(group_mat7(e3), std::invalid_argument);
  CHECK_THROWS_AS(group_mat8(e2), std::invalid_argument);
}

TEST_CASE("hand-transcribed group matrix") {
  const auto g = grp::TransElement::doubly(1.0, 0.0, {1, 0}, {0, 0}, 2.0, 1.0);
  const Mat7 m = group_mat7(g);
  CHECK(m(0, 4) == 1.0);
  CHECK(m(0, 6) == 1.0);
  const auto golden = load_golden("mat7_theta1_q10_alpha2.txt", 7);
  CHECK((m - golden).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("matrix model is a homomorphism") {
  Rng rng(3);
  for (int s = 0; s < 50; ++s) {
    const auto g = grp::TransElement::doubly(rng.uniform(), rng.uniform(), rng.vec2(),
                                             rng.vec2(), 1.2, 0.8);
    const auto h = grp::TransElement::doubly(rng.uniform(), rng.uniform(), rng.vec2(),
                                             rng.vec2(), 1.2, 0.8);
    CHECK((group_mat7(g) * group_mat7(h) - group_mat7(compose(g, h))).cwiseAbs().maxCoeff() <
          1e-12);
    const auto g3 = grp::TransElement::triply(rng.uniform(), rng.uniform(), rng.uniform(),
                                              rng.vec2(), rng.vec2(), 1.2, 0.8, 0.5);
    CHECK((group_mat8(g3).inverse() - group_mat8(grp::inverse(g3))).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("algebra basis brackets reproduce the printed tables") {
  const double a = 1.7, b = 0.9, c = 0.4;
  const auto t2 = structure_constants(a, b);
  // basis order: Q1 Q2 P1 P2 Theta Phi
  CHECK(t2.coeff(2, 0, 4) == a);   // [P1, Q1] = alpha Theta
  CHECK(t2.coeff(3, 1, 4) == a);   // [P2, Q2] = alpha Theta
  CHECK(t2.coeff(2, 1, 4) == 0.0);
  CHECK(t2.coeff(0, 1, 5) == b);   // [Q1, Q2] = beta Phi
  CHECK(t2.coeff(2, 3, 4) == 0.0);
  CHECK(t2.coeff(2, 3, 5) == 0.0);
  CHECK(t2.max_reexpression_residual == 0.0);
  for (int i = 0; i < 6; ++i) {
    if (i == 4 || i == 5) continue;
    for (int k = 0; k < 6; ++k) {
      CHECK(t2.coeff(i, 4, k) == 0.0);  // centrals commute with everything
      CHECK(t2.coeff(i, 5, k) == 0.0);
    }
  }

  const auto t3 = structure_constants(a, b, c);
  CHECK(t3.coeff(2, 3, 6) == c);   // [P1, P2] = gamma Psi
  CHECK(t3.coeff(0, 1, 5) == b);
  CHECK(t3.coeff(2, 0, 4) == a);
  CHECK_THROWS_AS(t3.find(0, 0), std::out_of_range);
}

TEST_CASE("algebra matrices are nilpotent and exponentiate to subgroup flows") {
  const std::vector<double> zero(6, 0.0);
  CHECK(algebra_mat(zero, 1.0, 1.0).cwiseAbs().maxCoeff() == 0.0);

  // single-direction exponentials are one-parameter group matrices
  std::vector<double> x(6, 0.0);
  x[0] = 0.7;  // Q1 direction generates the p1 flow
  auto g = grp::TransElement::doubly(0, 0, {}, {0.7, 0}, 1.0, 1.0);
  CHECK((nilpotent_exp(algebra_mat(x, 1.0, 1.0)) - group_mat7(g)).cwiseAbs().maxCoeff() <
        1e-15);

  const auto h = grp::TransElement::doubly(0.4, -0.9, {1.1, 0.3}, {-0.6, 0.8}, 1.0, 1.0);
  const Eigen::MatrixXd hm = group_mat7(h);
  CHECK((nilpotent_exp(unipotent_log(hm)) - hm).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("section and subgroup matrices") {
  CHECK(section_mat7({0, 0}, 1.0, 1.0).isIdentity(0.0));
  CHECK(subgroup_mat7(0, 0, {}, 1.0).isIdentity(0.0));
  CHECK(section_mat8(0, 0, 1, 1, 1).isIdentity(0.0));
  CHECK(subgroup_mat8(0, 0, 0, 0, 0, 1, 1, 1).isIdentity(0.0));
  const auto golden = load_golden("section_double_s12_alphabeta1.txt", 7);
  CHECK((section_mat7({1, 2}, 1.0, 1.0) - golden).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("coset factorization on the worked example") {
  // identity input: h = identity, s unchanged
  const auto e = grp::TransElement::doubly(0, 0, {}, {}, 1.0, 1.0);
  const auto fe = master_factorize_closed({0.7, -0.4}, e);
  CHECK(fe.h_theta == 0.0);
  CHECK(fe.h_u == 0.0);
  CHECK(fe.s_out.x == doctest::Approx(0.7));
  CHECK(fe.residual < 1e-14);

  const auto g = grp::TransElement::doubly(0, 0, {1, 1}, {2, 3}, 1.0, 1.0);
  const auto f = master_factorize_closed({0, 0}, g);
  CHECK(f.h_u == doctest::Approx(1.0));
  CHECK(f.h_v == doctest::Approx(1.0));
  CHECK(f.s_out.x == doctest::Approx(2.0));
  CHECK(f.s_out.y == doctest::Approx(3.0));
  CHECK(f.h_theta == doctest::Approx(-2.5));
  CHECK(f.h_phi == doctest::Approx(0.0));
  CHECK(f.residual < 1e-14);

  const auto fb = master_factorize_brute({0, 0}, g);
  CHECK(fb.h_theta == doctest::Approx(f.h_theta).epsilon(1e-13));
  CHECK(fb.residual < 1e-13);

  Rng rng(17);
  for (int s = 0; s < 100; ++s) {
    const auto g3 = grp::TransElement::triply(rng.uniform(), rng.uniform(), rng.uniform(),
                                              rng.vec2(), rng.vec2(), 1.0, 0.7, 0.4);
    const Vec2 sv = rng.vec2();
    const auto fc = master_factorize_closed(sv, g3);
    const auto fbr = master_factorize_brute(sv, g3);
    CHECK(std::abs(fc.h_psi - fbr.h_psi) < 1e-12);
    CHECK(std::abs(fc.s_out.y - fbr.s_out.y) < 1e-12);
    CHECK(fc.residual < 1e-12);
  }
}
