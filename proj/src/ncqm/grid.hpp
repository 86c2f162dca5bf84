#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ncqm/vec2.hpp"

namespace ncqm::grid {

using cplx = std::complex<double>;

/// Uniform n x n grid over [-l, l)^2. n must be a power of two >= 8.
/// Conjugate (frequency) lattice has spacing pi/l and Nyquist pi/h.
struct GridSpec {
  int n = 128;
  double l = 10.0;

  GridSpec() = default;
  GridSpec(int n_, double l_);

  double h() const { return 2.0 * l / n; }
  double dk() const { return M_PI / l; }
  /// Node coordinate along one axis, index 0..n-1.
  double x(int i) const { return -l + h() * i; }
  /// Frequency for storage index m (wrapped order: 0..n/2-1, -n/2..-1).
  double k(int m) const { return dk() * (m < n / 2 ? m : m - n); }
  bool operator==(const GridSpec& o) const { return n == o.n && l == o.l; }
};

/// Complex samples on a GridSpec, row-major in (x1, x2). The domain tag keeps
/// track of which lattice (and quadrature weight) the samples live on.
class GridFunction {
 public:
  enum class Domain { position, frequency };

  GridFunction() = default;
  GridFunction(const GridSpec& spec, Domain domain = Domain::position)
      : spec_(spec), domain_(domain), v_(static_cast<size_t>(spec.n) * spec.n) {}

  const GridSpec& spec() const { return spec_; }
  Domain domain() const { return domain_; }
  int n() const { return spec_.n; }
  /// Quadrature weight per node: h^2 on the position lattice, dk^2 on the
  /// frequency lattice, so Parseval holds exactly between the two.
  double weight() const;

  cplx& at(int i, int j) { return v_[static_cast<size_t>(i) * spec_.n + j]; }
  const cplx& at(int i, int j) const { return v_[static_cast<size_t>(i) * spec_.n + j]; }
  std::vector<cplx>& values() { return v_; }
  const std::vector<cplx>& values() const { return v_; }

  /// Axis coordinate of node index along either axis (position domain).
  double x(int i) const { return spec_.x(i); }

 private:
  GridSpec spec_;
  Domain domain_ = Domain::position;
  std::vector<cplx> v_;
};

/// <f|g> = weight * sum conj(f) g  (conjugate-linear in the first slot).
cplx inner(const GridFunction& f, const GridFunction& g);
double norm(const GridFunction& f);

/// Unitary transform pair: fourier(f)(k) approximates
/// (1/2pi) \int f(x) e^{-i k.x} dx; inv_fourier inverts it exactly on the grid.
GridFunction fourier(const GridFunction& f);
GridFunction inv_fourier(const GridFunction& fhat);

/// Applies a diagonal frequency multiplier m(k1,k2) to a position-domain
/// function: f -> invFT[ m . FT f ]. Exact for band-limited samples.
GridFunction apply_k_multiplier(const GridFunction& f,
                                const std::function<cplx(double, double)>& m);

/// f(x + s) for arbitrary real s, via the e^{i k.s} multiplier.
GridFunction shifted(const GridFunction& f, const Vec2& s);

/// Spectral partial derivative along axis 0 or 1 (Nyquist row dropped).
GridFunction derivative(const GridFunction& f, int axis);

/// Exact grid rotation by quarter turns (counterclockwise).
GridFunction rotate90(const GridFunction& f, int quarter_turns);

/// Arbitrary-angle rotation by periodic bicubic resampling. Interpolation
/// limited; excluded from tight-tolerance checks.
GridFunction rotated(const GridFunction& f, double angle);

/// Unit-norm Gaussian probe exp(-|x-c|^2 / (2 w^2)), normalized on the grid.
GridFunction gaussian(const GridSpec& spec, const Vec2& center = {}, double width = 1.0);
/// Gaussian modulated by (x1 - c1), normalized. Odd along axis 1 about the center.
GridFunction hermite_probe(const GridSpec& spec, const Vec2& center = {}, double width = 1.0);

/// Flat binary serialization: int64 n, double l (little-endian), then
/// row-major complex doubles (re, im).
void save(const GridFunction& f, const std::string& path);
GridFunction load(const std::string& path);

}  // namespace ncqm::grid
