#include "ncqm/operators.hpp"

#include <stdexcept>

namespace ncqm::op {

LinearOp identity_op() {
  return {"I", [](const GridFunction& f) { return f; }};
}

LinearOp mul_coord(int axis) {
  return {axis == 0 ? "x1" : "x2", [axis](const GridFunction& f) {
            GridFunction out = f;
            const int n = f.n();
            const bool freq = f.domain() == GridFunction::Domain::frequency;
            for (int i = 0; i < n; ++i) {
              const double c1 = freq ? f.spec().k(i) : f.x(i);
              for (int j = 0; j < n; ++j)
                out.at(i, j) *= axis == 0 ? c1 : (freq ? f.spec().k(j) : f.x(j));
            }
            return out;
          }};
}

LinearOp spectral_derivative(int axis) {
  return {axis == 0 ? "d1" : "d2",
          [axis](const GridFunction& f) { return grid::derivative(f, axis); }};
}

LinearOp scaled(cplx c, const LinearOp& a) {
  return {"(" + std::to_string(c.real()) + (c.imag() < 0 ? "" : "+") + std::to_string(c.imag()) +
              "i)*" + a.label,
          [c, a](const GridFunction& f) {
            GridFunction out = a.apply(f);
            for (auto& v : out.values()) v *= c;
            return out;
          }};
}

LinearOp sum(const LinearOp& a, const LinearOp& b, const std::string& label) {
  return {label.empty() ? a.label + " + " + b.label : label,
          [a, b](const GridFunction& f) {
            GridFunction out = a.apply(f);
            const GridFunction bf = b.apply(f);
            for (size_t i = 0; i < out.values().size(); ++i) out.values()[i] += bf.values()[i];
            return out;
          }};
}

LinearOp difference(const LinearOp& a, const LinearOp& b, const std::string& label) {
  return {label.empty() ? a.label + " - " + b.label : label,
          [a, b](const GridFunction& f) {
            GridFunction out = a.apply(f);
            const GridFunction bf = b.apply(f);
            for (size_t i = 0; i < out.values().size(); ++i) out.values()[i] -= bf.values()[i];
            return out;
          }};
}

GridFunction commutator(const LinearOp& a, const LinearOp& b, const GridFunction& f) {
  GridFunction ab = a.apply(b.apply(f));
  const GridFunction ba = b.apply(a.apply(f));
  for (size_t i = 0; i < ab.values().size(); ++i) ab.values()[i] -= ba.values()[i];
  return ab;
}

NcOps ncqm_ops(double m, double theta) {
  NcOps ops;
  const cplx ihalf(0.0, 0.5 * theta);
  ops.q1 = sum(mul_coord(0), scaled(ihalf, spectral_derivative(1)), "Q1");
  ops.q2 = difference(mul_coord(1), scaled(ihalf, spectral_derivative(0)), "Q2");
  ops.p1 = scaled(cplx(0.0, -1.0), spectral_derivative(0));
  ops.p1.label = "P1";
  ops.p2 = scaled(cplx(0.0, -1.0), spectral_derivative(1));
  ops.p2.label = "P2";
  ops.h = {"H", [m](const GridFunction& f) {
             return grid::apply_k_multiplier(
                 f, [m](double k1, double k2) { return cplx((k1 * k1 + k2 * k2) / (2.0 * m)); });
           }};
  // angular momentum -i (x d/dy - y d/dx)
  ops.mrot = scaled(cplx(0.0, -1.0),
                    difference({"xd2", [](const GridFunction& f) {
                                  GridFunction out = grid::derivative(f, 1);
                                  for (int i = 0; i < f.n(); ++i)
                                    for (int j = 0; j < f.n(); ++j) out.at(i, j) *= f.x(i);
                                  return out;
                                }},
                               {"yd1", [](const GridFunction& f) {
                                  GridFunction out = grid::derivative(f, 0);
                                  for (int i = 0; i < f.n(); ++i)
                                    for (int j = 0; j < f.n(); ++j) out.at(i, j) *= f.x(j);
                                  return out;
                                }}));
  ops.mrot.label = "M";
  ops.n1 = scaled(m, ops.q1);
  ops.n1.label = "N1";
  ops.n2 = scaled(m, ops.q2);
  ops.n2.label = "N2";
  ops.id = identity_op();
  return ops;
}

std::pair<LinearOp, LinearOp> noncanonical_positions(double theta) {
  const LinearOp p1 = scaled(cplx(0.0, -1.0), spectral_derivative(0));
  const LinearOp p2 = scaled(cplx(0.0, -1.0), spectral_derivative(1));
  LinearOp q1 = difference(mul_coord(0), scaled(0.5 * theta, p2), "Qhat1");
  LinearOp q2 = sum(mul_coord(1), scaled(0.5 * theta, p1), "Qhat2");
  return {q1, q2};
}

QuadOps double_ext_ops(double alpha, double beta, Picture picture) {
  QuadOps ops;
  if (picture == Picture::s_space) {
    ops.p1 = scaled(alpha, mul_coord(0));
    ops.p2 = scaled(alpha, mul_coord(1));
    ops.q1 = sum(scaled(0.5 * beta, mul_coord(1)), scaled(cplx(0, 1), spectral_derivative(0)));
    ops.q2 = sum(scaled(-0.5 * beta, mul_coord(0)), scaled(cplx(0, 1), spectral_derivative(1)));
  } else {
    ops.p1 = scaled(cplx(0, -alpha), spectral_derivative(0));
    ops.p2 = scaled(cplx(0, -alpha), spectral_derivative(1));
    ops.q1 = difference(mul_coord(0), scaled(cplx(0, 0.5 * beta), spectral_derivative(1)));
    ops.q2 = sum(mul_coord(1), scaled(cplx(0, 0.5 * beta), spectral_derivative(0)));
  }
  ops.q1.label = "Qhat1";
  ops.q2.label = "Qhat2";
  ops.p1.label = "Phat1";
  ops.p2.label = "Phat2";
  return ops;
}

QuadOps triple_ext_ops(double alpha, double beta, double gamma, bool scaled_p1) {
  QuadOps ops;
  ops.p1 = scaled(scaled_p1 ? -alpha : -1.0, mul_coord(0));
  ops.q1 = sum(scaled(beta, mul_coord(1)), scaled(cplx(0, -alpha), spectral_derivative(0)));
  ops.p2 = sum(scaled(alpha, mul_coord(1)), scaled(cplx(0, -gamma), spectral_derivative(0)));
  ops.q2 = scaled(cplx(0, 1), spectral_derivative(1));
  ops.q1.label = "Qhat1";
  ops.q2.label = "Qhat2";
  ops.p1.label = "Phat1";
  ops.p2.label = "Phat2";
  return ops;
}

GridFunction generator_from_rep(const std::function<GridFunction(double)>& one_param, double eps,
                                bool richardson) {
  auto central = [&one_param](double e) {
    GridFunction plus = one_param(e);
    const GridFunction minus = one_param(-e);
    const cplx scale(0.0, 0.5 / e);  // i/(2e)
    for (size_t i = 0; i < plus.values().size(); ++i)
      plus.values()[i] = scale * (plus.values()[i] - minus.values()[i]);
    return plus;
  };
  GridFunction d = central(eps);
  if (!richardson) return d;
  GridFunction dh = central(0.5 * eps);
  for (size_t i = 0; i < d.values().size(); ++i)
    d.values()[i] = (4.0 * dh.values()[i] - d.values()[i]) / 3.0;
  return d;
}

BracketReport bracket_table_check(const std::vector<BracketCase>& table,
                                  const std::vector<GridFunction>& probes) {
  BracketReport report;
  for (const auto& bc : table) {
    BracketResult r;
    r.label = bc.label;
    const LinearOp& rhs_op = bc.rhs.apply ? bc.rhs : identity_op();
    for (const auto& f : probes) {
      GridFunction lhs = commutator(bc.a, bc.b, f);
      const GridFunction rhs = rhs_op.apply(f);
      for (size_t i = 0; i < lhs.values().size(); ++i)
        lhs.values()[i] -= bc.coeff * rhs.values()[i];
      r.residual = std::max(r.residual, grid::norm(lhs) / grid::norm(f));
    }
    report.worst = std::max(report.worst, r.residual);
    report.results.push_back(std::move(r));
  }
  return report;
}

std::vector<GridFunction> standard_probes(const GridSpec& spec) {
  return {grid::gaussian(spec, {0.0, 0.0}, 1.0), grid::gaussian(spec, {1.0, 0.5}, 0.7),
          grid::hermite_probe(spec, {0.0, 0.0}, 1.0)};
}

double adjoint_defect(const LinearOp& a, const std::vector<GridFunction>& probes) {
  double worst = 0.0;
  for (const auto& f : probes) {
    for (const auto& g : probes) {
      const cplx d = grid::inner(f, a.apply(g)) - grid::inner(a.apply(f), g);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

}  // namespace ncqm::op
