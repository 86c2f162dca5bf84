#include "ncqm/wigner.hpp"

#include <cmath>
#include <stdexcept>

#include "ncqm/operators.hpp"
#include "ncqm/parallel.hpp"

namespace ncqm::wig {

FockOperator FockOperator::ket_bra(int dim, int i, int j) {
  FockOperator x = zero(dim);
  x.m(i, j) = 1.0;
  return x;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> base_qp(int dim) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXcd ad = a.adjoint();
  const Eigen::MatrixXcd q = (a + ad) / std::sqrt(2.0);
  const Eigen::MatrixXcd p = cplx(0.0, -1.0) * (a - ad) / std::sqrt(2.0);
  return {q, p};
}

HsOps hs_ops(double theta, int dim) {
  if (theta == 0.0) throw std::invalid_argument("hs_ops: theta must be nonzero");
  auto [q, p] = base_qp(dim);
  HsOps ops;
  ops.q1 = [q](const FockOperator& x) { return FockOperator{q * x.m}; };
  ops.q2 = [p, theta](const FockOperator& x) { return FockOperator{theta * (p * x.m)}; };
  ops.p1 = [p](const FockOperator& x) { return FockOperator{p * x.m - x.m * p}; };
  ops.p2 = [q, theta](const FockOperator& x) {
    return FockOperator{-(q * x.m - x.m * q) / theta};
  };
  return ops;
}

DisplacementSynth::DisplacementSynth(int dim, double tail_tol) : dim_(dim) {
  if (dim < 4) throw std::invalid_argument("DisplacementSynth: dim >= 4 required");
  auto [q, p] = base_qp(dim);
  (void)p;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q.real());
  evals_ = es.eigenvalues();
  evecs_ = es.eigenvectors();
  // calibrate where the truncated radial displacement still matches the
  // closed-form vacuum overlap
  Eigen::VectorXd w0(dim_);
  for (int m = 0; m < dim_; ++m) w0(m) = evecs_(0, m) * evecs_(0, m);
  double r = 0.0;
  for (double probe = 0.0; probe <= 64.0; probe += 0.05) {
    cplx acc = 0.0;
    for (int m = 0; m < dim_; ++m) acc += w0(m) * std::polar(1.0, -probe * evals_(m));
    if (std::abs(acc - std::exp(-probe * probe / 4.0)) > tail_tol) break;
    r = probe;
  }
  radius_ = r;
}

Eigen::MatrixXcd DisplacementSynth::displacement(double z1, double z2) const {
  const double r = std::hypot(z1, z2);
  const double phi = std::atan2(z2, z1);
  Eigen::VectorXcd ph(dim_);
  for (int m = 0; m < dim_; ++m) ph(m) = std::polar(1.0, -r * evals_(m));
  const Eigen::MatrixXcd core =
      evecs_.cast<cplx>() * ph.asDiagonal() * evecs_.transpose().cast<cplx>();
  Eigen::VectorXcd d(dim_);
  for (int n = 0; n < dim_; ++n) d(n) = std::polar(1.0, phi * n);
  return d.asDiagonal() * core * d.asDiagonal().inverse();
}

cplx DisplacementSynth::char_value(const FockOperator& x, double z1, double z2) const {
  const double r = std::hypot(z1, z2);
  if (r > radius_) return 0.0;
  const double phi = std::atan2(z2, z1);
  // Tr[D X] = sum_{j,k} E_{jk}(r) e^{i phi (j-k)} X_{kj}
  cplx acc = 0.0;
  for (int k = 0; k < x.dim(); ++k) {
    for (int j = 0; j < x.dim(); ++j) {
      const cplx xkj = x.m(k, j);
      if (xkj == cplx(0.0)) continue;
      cplx e = 0.0;
      for (int m = 0; m < dim_; ++m)
        e += evecs_(j, m) * evecs_(k, m) * std::polar(1.0, -r * evals_(m));
      acc += e * std::polar(1.0, phi * (j - k)) * xkj;
    }
  }
  return acc;
}

GridFunction wigner_map(const FockOperator& x, const GridSpec& spec) {
  const DisplacementSynth synth(x.dim());
  GridFunction out(spec);
  const int n = spec.n;
  const double scale = 1.0 / std::sqrt(2.0 * M_PI);
  parallel_chunks(n, [&](int, std::int64_t lo, std::int64_t hi) {
    for (int i = static_cast<int>(lo); i < hi; ++i)
      for (int j = 0; j < n; ++j)
        out.at(i, j) = scale * synth.char_value(x, spec.x(i), spec.x(j));
  });
  return out;
}

GridFunction realization_map(const FockOperator& x, const GridSpec& spec, double theta) {
  if (theta == 0.0) throw std::invalid_argument("realization_map: theta must be nonzero");
  const DisplacementSynth synth(x.dim());
  GridFunction hat(spec, GridFunction::Domain::frequency);
  const int n = spec.n;
  const double scale = std::sqrt(theta) / std::sqrt(2.0 * M_PI);
  parallel_chunks(n, [&](int, std::int64_t lo, std::int64_t hi) {
    for (int i = static_cast<int>(lo); i < hi; ++i) {
      const double k1 = spec.k(i);
      for (int j = 0; j < n; ++j)
        hat.at(i, j) = scale * synth.char_value(x, k1, theta * spec.k(j));
    }
  });
  return grid::inv_fourier(hat);
}

EquivalenceReport equivalence_check(double theta, int dim, const GridSpec& spec,
                                    const std::vector<FockOperator>& probes) {
  EquivalenceReport rep;
  rep.dim = dim;
  rep.validity_radius = DisplacementSynth(dim).validity_radius();
  const HsOps hs = hs_ops(theta, dim);
  const op::NcOps grid_ops = op::ncqm_ops(1.0, theta);

  struct Pair {
    const char* label;
    const std::function<FockOperator(const FockOperator&)>* super;
    const op::LinearOp* gridop;
  };
  const Pair table[] = {{"Q1", &hs.q1, &grid_ops.q1},
                        {"Q2", &hs.q2, &grid_ops.q2},
                        {"P1", &hs.p1, &grid_ops.p1},
                        {"P2", &hs.p2, &grid_ops.p2}};

  for (const auto& pr : table) {
    EquivalencePair ep;
    ep.label = pr.label;
    for (const auto& x : probes) {
      FockOperator padded = FockOperator::zero(dim);
      const int c = std::min(dim, x.dim());
      padded.m.topLeftCorner(c, c) = x.m.topLeftCorner(c, c);
      const GridFunction wx = realization_map(padded, spec, theta);
      const GridFunction lhs = realization_map((*pr.super)(padded), spec, theta);
      const GridFunction rhs = pr.gridop->apply(wx);
      GridFunction diff = lhs;
      for (size_t ii = 0; ii < diff.values().size(); ++ii)
        diff.values()[ii] -= rhs.values()[ii];
      ep.residual = std::max(ep.residual, grid::norm(diff) / grid::norm(wx));
    }
    rep.worst = std::max(rep.worst, ep.residual);
    rep.pairs.push_back(ep);
  }
  return rep;
}

std::vector<FockOperator> standard_fock_probes(int dim) {
  return {FockOperator::ket_bra(dim, 0, 0), FockOperator::ket_bra(dim, 0, 1),
          FockOperator::ket_bra(dim, 1, 1)};
}

}  // namespace ncqm::wig
