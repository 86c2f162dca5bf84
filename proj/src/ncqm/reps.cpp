#include "ncqm/reps.hpp"

#include <cmath>
#include <stdexcept>

namespace ncqm::rep {

using grid::cplx;

namespace {

bool quarter_turns(double angle, int* turns) {
  const double q = angle / (M_PI / 2.0);
  const double r = std::round(q);
  if (std::abs(q - r) > 1e-12) return false;
  *turns = static_cast<int>(r) % 4;
  return true;
}

GridFunction rotate_any(const GridFunction& f, double angle) {
  int turns = 0;
  if (quarter_turns(angle, &turns)) return grid::rotate90(f, turns);
  return grid::rotated(f, angle);
}

// Cyclic index shift for lattice-aligned s; falls back to the Fourier phase
// shift otherwise.
GridFunction shift_exact_or_spectral(const GridFunction& f, const Vec2& s) {
  const double h = f.spec().h();
  const double i1 = s.x / h, i2 = s.y / h;
  const double r1 = std::round(i1), r2 = std::round(i2);
  if (std::abs(i1 - r1) < 1e-12 && std::abs(i2 - r2) < 1e-12) {
    const int n = f.n();
    const int d1 = ((static_cast<int>(r1) % n) + n) % n;
    const int d2 = ((static_cast<int>(r2) % n) + n) % n;
    if (d1 == 0 && d2 == 0) return f;
    GridFunction out(f.spec(), f.domain());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.at(i, j) = f.at((i + d1) % n, (j + d2) % n);
    return out;
  }
  return grid::shifted(f, s);
}

}  // namespace

bool shift_stays_on_grid(const GridFunction& f, const Vec2& s, double tol) {
  const int n = f.n();
  const double margin = 4.0 * f.spec().h();
  double outside = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = f.x(i) - s.x, y = f.x(j) - s.y;  // where mass lands
      if (std::abs(x) > f.spec().l - margin || std::abs(y) > f.spec().l - margin)
        outside += std::norm(f.at(i, j));
    }
  }
  return std::sqrt(outside) * f.spec().h() < tol;
}

GridFunction apply_galilei_config(const grp::GalileiElement& g, const GridFunction& f,
                                  const grp::GalileiParams& params) {
  if (f.domain() != GridFunction::Domain::position)
    throw std::invalid_argument("apply_galilei_config: position-domain input required");
  const double m = params.m, lambda = params.lambda;

  GridFunction t = f;
  if (g.b != 0.0) {
    const double c = 0.5 * g.b / m;
    t = grid::apply_k_multiplier(t, [c](double k1, double k2) {
      return std::polar(1.0, c * (k1 * k1 + k2 * k2));
    });
  }
  if (g.rot.angle != 0.0) t = rotate_any(t, g.rot.angle);
  const Vec2 s_tot = g.a + g.b * g.v + (0.5 * lambda / m) * jmat(g.v);
  t = shift_exact_or_spectral(t, s_tot);

  const double c0 = g.theta + g.phi + 0.5 * m * dot(g.a, g.v) + 0.5 * g.b * m * dot(g.v, g.v);
  const int n = f.n();
  for (int i = 0; i < n; ++i) {
    const double x1 = f.x(i);
    for (int j = 0; j < n; ++j)
      t.at(i, j) *= std::polar(1.0, c0 + m * (g.v.x * x1 + g.v.y * f.x(j)));
  }
  return t;
}

GridFunction apply_galilei_momentum(const grp::GalileiElement& g, const GridFunction& fhat,
                                    const grp::GalileiParams& params) {
  if (fhat.domain() != GridFunction::Domain::frequency)
    throw std::invalid_argument("apply_galilei_momentum: frequency-domain input required");
  int turns = 0;
  if (!quarter_turns(g.rot.angle, &turns))
    throw std::invalid_argument("apply_galilei_momentum: rotation must be a quarter turn");
  const double m = params.m, lambda = params.lambda;

  // fh(R^{-1}(k - m v)): rotate first, then shift the argument by m v,
  // the latter realized as the transform of e^{i m v.x} f(x)
  GridFunction t = fhat;
  if (turns != 0) t = grid::rotate90(t, turns);
  if (g.v.x != 0.0 || g.v.y != 0.0) {
    GridFunction pos = grid::inv_fourier(t);
    const int n = pos.n();
    for (int i = 0; i < n; ++i) {
      const double x1 = pos.x(i);
      for (int j = 0; j < n; ++j)
        pos.at(i, j) *= std::polar(1.0, m * (g.v.x * x1 + g.v.y * pos.x(j)));
    }
    t = grid::fourier(pos);
  }

  const int n = t.n();
  GridFunction out = t;
  const double c0 = g.theta + g.phi - 0.5 * m * dot(g.a, g.v);
  for (int i = 0; i < n; ++i) {
    const double k1 = t.spec().k(i);
    for (int j = 0; j < n; ++j) {
      const double k2 = t.spec().k(j);
      const double phase = c0 + dot(g.a, {k1, k2}) + 0.5 * g.b / m * (k1 * k1 + k2 * k2) +
                           0.5 * lambda / m * (g.v.x * k2 - g.v.y * k1);
      out.at(i, j) *= std::polar(1.0, phase);
    }
  }
  return out;
}

GridFunction apply_double(const grp::TransElement& g, const GridFunction& f) {
  if (g.arity != 2) throw std::invalid_argument("apply_double: arity-2 element required");
  const double alpha = g.ext[0], beta = g.ext[1];
  GridFunction out = shift_exact_or_spectral(f, g.p);
  const int n = out.n();
  const double c0 = g.phase[0] + g.phase[1] - 0.5 * alpha * dot(g.q, g.p);
  for (int i = 0; i < n; ++i) {
    const double s1 = out.x(i);
    for (int j = 0; j < n; ++j) {
      const double s2 = out.x(j);
      const double phase =
          c0 - alpha * (g.q.x * s1 + g.q.y * s2) - 0.5 * beta * (g.p.x * s2 - g.p.y * s1);
      out.at(i, j) *= std::polar(1.0, phase);
    }
  }
  return out;
}

GridFunction apply_triple(const grp::TransElement& g, const GridFunction& f) {
  if (g.arity != 3) throw std::invalid_argument("apply_triple: arity-3 element required");
  const double alpha = g.ext[0], beta = g.ext[1], gamma = g.ext[2];
  const double q1 = g.q.x, q2 = g.q.y, p1 = g.p.x, p2 = g.p.y;
  GridFunction out = shift_exact_or_spectral(f, {q1, p2});
  const int n = out.n();
  const double c0 = g.phase[0] + g.phase[1] + g.phase[2] + 0.5 * alpha * q1 * p1 -
                    0.5 * alpha * q2 * p2 - 0.5 * beta * p1 * p2 + 0.5 * gamma * q2 * q1;
  const double cr = alpha * p1 + gamma * q2;   // coefficient of r1
  const double cs = -alpha * q2 - beta * p1;   // coefficient of s2
  for (int i = 0; i < n; ++i) {
    const double r1 = out.x(i);
    for (int j = 0; j < n; ++j) out.at(i, j) *= std::polar(1.0, c0 + cr * r1 + cs * out.x(j));
  }
  return out;
}

}  // namespace ncqm::rep
