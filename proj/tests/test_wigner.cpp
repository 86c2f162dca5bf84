#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "ncqm/wigner.hpp"

using namespace ncqm;
using namespace ncqm::wig;
using grid::cplx;
using grid::GridSpec;

namespace {
const GridSpec kSpec(64, 10.0);
}

TEST_CASE("ladder pair basics") {
  const int d = 16;
  auto [q, p] = base_qp(d);
  CHECK((q - q.transpose()).norm() == 0.0);          // real symmetric
  CHECK((p + p.transpose()).norm() < 1e-15);         // i-antisymmetric
  CHECK(std::abs(q.trace()) == 0.0);
  CHECK(std::abs(p.trace()) == 0.0);
  const Eigen::MatrixXcd comm = q * p - p * q;
  const Eigen::MatrixXcd expect = cplx(0, 1) * Eigen::MatrixXcd::Identity(d, d);
  CHECK((comm - expect).topLeftCorner(d - 1, d - 1).cwiseAbs().maxCoeff() < 1e-14);
  // the truncation corrupts only the last diagonal slot
  CHECK(std::abs(comm(d - 1, d - 1) - cplx(0, 1.0 - d)) < 1e-12);
}

TEST_CASE("operator-space superoperators refuse theta = 0") {
  CHECK_THROWS_AS(hs_ops(0.0, 8), std::invalid_argument);
}

TEST_CASE("displacement synthesis equals the dense matrix exponential") {
  const int d = 24;
  const DisplacementSynth synth(d);
  auto [q, p] = base_qp(d);
  for (const auto& z : {std::pair{0.7, -1.3}, std::pair{2.5, 1.1}, std::pair{-3.0, 0.4}}) {
    const Eigen::MatrixXcd direct = ((cplx(0, -1) * (z.first * q + z.second * p)).eval()).exp();
    CHECK((synth.displacement(z.first, z.second) - direct).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK(synth.validity_radius() > 3.0);
  CHECK_THROWS_AS(DisplacementSynth(2), std::invalid_argument);
}

TEST_CASE("windowed character values match inside the validity radius") {
  const int d = 32;
  const DisplacementSynth synth(d);
  const FockOperator vac = FockOperator::ket_bra(d, 0, 0);
  for (double r : {0.5, 2.0, 4.0}) {
    const cplx v = synth.char_value(vac, r, 0.0);
    CHECK(std::abs(v - std::exp(-r * r / 4.0)) < 1e-10);
  }
  // beyond the calibrated radius the synthesis reports zero
  CHECK(synth.char_value(vac, synth.validity_radius() + 1.0, 0.0) == cplx(0.0));
}

TEST_CASE("map is isometric and linear on low-level operators") {
  const int d = 32;
  const auto probes = standard_fock_probes(d);
  std::vector<grid::GridFunction> mapped;
  for (const auto& x : probes) mapped.push_back(wigner_map(x, kSpec));
  for (size_t i = 0; i < probes.size(); ++i)
    for (size_t j = 0; j < probes.size(); ++j) {
      const cplx hs = (probes[i].m.adjoint() * probes[j].m).trace();
      CHECK(std::abs(grid::inner(mapped[i], mapped[j]) - hs) < 1e-4);
    }
}

TEST_CASE("realization map intertwines the superoperators with the grid operators") {
  const double theta = 0.5;
  // the scaled transform layer spreads the second axis by 1/theta, so this
  // comparison needs the full default conjugate range
  const GridSpec kSpec(128, 10.0);
  const auto rep32 = equivalence_check(theta, 32, kSpec, standard_fock_probes(4));
  CHECK(rep32.worst < 1e-3);
  const auto rep16 = equivalence_check(theta, 16, kSpec, standard_fock_probes(4));
  CHECK(rep16.worst > rep32.worst);
  CHECK(rep32.pairs.size() == 4);
}
