#include "ncqm/grid.hpp"

#include <fftw3.h>

#include <bit>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ncqm::grid {

static_assert(std::endian::native == std::endian::little,
              "grid file format assumes a little-endian host");

GridSpec::GridSpec(int n_, double l_) : n(n_), l(l_) {
  if (n < 8 || (n & (n - 1)) != 0) throw std::invalid_argument("GridSpec: n must be a power of two >= 8");
  if (!(l > 0.0)) throw std::invalid_argument("GridSpec: l must be positive");
}

double GridFunction::weight() const {
  const double s = domain_ == Domain::position ? spec_.h() : spec_.dk();
  return s * s;
}

cplx inner(const GridFunction& f, const GridFunction& g) {
  if (!(f.spec() == g.spec()) || f.domain() != g.domain())
    throw std::invalid_argument("inner: mismatched grids");
  cplx acc = 0.0;
  const auto& a = f.values();
  const auto& b = g.values();
  for (size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return f.weight() * acc;
}

double norm(const GridFunction& f) { return std::sqrt(std::abs(inner(f, f))); }

namespace {

// Plan cache keyed by (n, direction). Plans are created FFTW_UNALIGNED so they
// can execute on any buffer; creation is serialized, execution is not.
std::mutex plan_mutex;
std::map<std::pair<int, int>, fftw_plan> plan_cache;

fftw_plan plan_for(int n, int sign) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_pair(n, sign);
  auto it = plan_cache.find(key);
  if (it != plan_cache.end()) return it->second;
  std::vector<cplx> a(static_cast<size_t>(n) * n), b(a.size());
  fftw_plan p = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(a.data()),
                                 reinterpret_cast<fftw_complex*>(b.data()), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_cache.emplace(key, p);
  return p;
}

void run_fft(const std::vector<cplx>& in, std::vector<cplx>& out, int n, int sign) {
  out.resize(in.size());
  fftw_plan p = plan_for(n, sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

inline double parity(int i, int j) { return ((i + j) & 1) ? -1.0 : 1.0; }

}  // namespace

GridFunction fourier(const GridFunction& f) {
  if (f.domain() != GridFunction::Domain::position)
    throw std::invalid_argument("fourier: expected a position-domain function");
  const int n = f.n();
  GridFunction out(f.spec(), GridFunction::Domain::frequency);
  run_fft(f.values(), out.values(), n, FFTW_FORWARD);
  // Node x_i = h (i - n/2): recentering gives the (-1)^{i+j} checkerboard.
  const double scale = f.spec().h() * f.spec().h() / (2.0 * M_PI);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) *= scale * parity(i, j);
  return out;
}

GridFunction inv_fourier(const GridFunction& fhat) {
  if (fhat.domain() != GridFunction::Domain::frequency)
    throw std::invalid_argument("inv_fourier: expected a frequency-domain function");
  const int n = fhat.n();
  GridFunction tmp(fhat.spec(), GridFunction::Domain::frequency);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tmp.at(i, j) = fhat.at(i, j) * parity(i, j);
  GridFunction out(fhat.spec(), GridFunction::Domain::position);
  run_fft(tmp.values(), out.values(), n, FFTW_BACKWARD);
  const double scale = fhat.spec().dk() * fhat.spec().dk() / (2.0 * M_PI);
  for (auto& v : out.values()) v *= scale;
  return out;
}

GridFunction apply_k_multiplier(const GridFunction& f,
                                const std::function<cplx(double, double)>& m) {
  const int n = f.n();
  std::vector<cplx> hat;
  run_fft(f.values(), hat, n, FFTW_FORWARD);
  GridFunction out(f.spec(), f.domain());
  for (int i = 0; i < n; ++i) {
    const double k1 = f.spec().k(i);
    for (int j = 0; j < n; ++j) hat[static_cast<size_t>(i) * n + j] *= m(k1, f.spec().k(j));
  }
  run_fft(hat, out.values(), n, FFTW_BACKWARD);
  const double inv = 1.0 / (static_cast<double>(n) * n);
  for (auto& v : out.values()) v *= inv;
  return out;
}

GridFunction shifted(const GridFunction& f, const Vec2& s) {
  if (s.x == 0.0 && s.y == 0.0) return f;
  return apply_k_multiplier(f, [s](double k1, double k2) {
    return std::polar(1.0, k1 * s.x + k2 * s.y);
  });
}

GridFunction derivative(const GridFunction& f, int axis) {
  const int n = f.n();
  if (f.domain() == GridFunction::Domain::frequency) {
    // d/dk on the conjugate lattice: pull back, multiply by -i x, push forward
    GridFunction pos = inv_fourier(f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        pos.at(i, j) *= cplx(0.0, -(axis == 0 ? pos.x(i) : pos.x(j)));
    return fourier(pos);
  }
  return apply_k_multiplier(f, [axis, n, &f](double k1, double k2) -> cplx {
    const double k = axis == 0 ? k1 : k2;
    // drop the unpaired Nyquist component
    if (std::abs(k) >= f.spec().dk() * (n / 2) - 1e-12) return 0.0;
    return cplx(0.0, k);
  });
}

GridFunction rotate90(const GridFunction& f, int quarter_turns) {
  const int n = f.n();
  int q = ((quarter_turns % 4) + 4) % 4;
  GridFunction out = f;
  // One turn: (R f)(x) = f(R^{-1} x), R^{-1}(x1,x2) = (x2, -x1); index
  // negation is i -> (n - i) mod n on the periodic lattice.
  for (int t = 0; t < q; ++t) {
    GridFunction next(out.spec(), out.domain());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) next.at(i, j) = out.at(j, (n - i) % n);
    out = next;
  }
  return out;
}

GridFunction rotated(const GridFunction& f, double angle) {
  const int n = f.n();
  const double h = f.spec().h();
  const double c = std::cos(angle), s = std::sin(angle);
  auto wrap = [n](int i) { return ((i % n) + n) % n; };
  auto cubic = [](cplx p0, cplx p1, cplx p2, cplx p3, double t) {
    // Catmull-Rom
    return p1 + 0.5 * t * (p2 - p0 + t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                          t * (3.0 * (p1 - p2) + p3 - p0)));
  };
  GridFunction out(f.spec(), f.domain());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = f.spec().x(i), y = f.spec().x(j);
      // sample f at R^{-1} (x, y)
      const double u = c * x + s * y, v = -s * x + c * y;
      const double fi = (u + f.spec().l) / h, fj = (v + f.spec().l) / h;
      const int i0 = static_cast<int>(std::floor(fi)), j0 = static_cast<int>(std::floor(fj));
      const double ti = fi - i0, tj = fj - j0;
      cplx col[4];
      for (int a = -1; a <= 2; ++a) {
        cplx row[4];
        for (int b = -1; b <= 2; ++b) row[b + 1] = f.at(wrap(i0 + a), wrap(j0 + b));
        col[a + 1] = cubic(row[0], row[1], row[2], row[3], tj);
      }
      out.at(i, j) = cubic(col[0], col[1], col[2], col[3], ti);
    }
  }
  return out;
}

GridFunction gaussian(const GridSpec& spec, const Vec2& center, double width) {
  GridFunction f(spec);
  const double w2 = 2.0 * width * width;
  for (int i = 0; i < spec.n; ++i) {
    const double dx = spec.x(i) - center.x;
    for (int j = 0; j < spec.n; ++j) {
      const double dy = spec.x(j) - center.y;
      f.at(i, j) = std::exp(-(dx * dx + dy * dy) / w2);
    }
  }
  const double nf = norm(f);
  for (auto& v : f.values()) v /= nf;
  return f;
}

GridFunction hermite_probe(const GridSpec& spec, const Vec2& center, double width) {
  GridFunction f = gaussian(spec, center, width);
  for (int i = 0; i < spec.n; ++i)
    for (int j = 0; j < spec.n; ++j) f.at(i, j) *= spec.x(i) - center.x;
  const double nf = norm(f);
  for (auto& v : f.values()) v /= nf;
  return f;
}

void save(const GridFunction& f, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("save: cannot open " + path);
  const std::int64_t n = f.n();
  const double l = f.spec().l;
  std::fwrite(&n, sizeof n, 1, fp);
  std::fwrite(&l, sizeof l, 1, fp);
  std::fwrite(f.values().data(), sizeof(cplx), f.values().size(), fp);
  std::fclose(fp);
}

GridFunction load(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw std::runtime_error("load: cannot open " + path);
  std::int64_t n = 0;
  double l = 0.0;
  if (std::fread(&n, sizeof n, 1, fp) != 1 || std::fread(&l, sizeof l, 1, fp) != 1) {
    std::fclose(fp);
    throw std::runtime_error("load: truncated header in " + path);
  }
  GridFunction f(GridSpec(static_cast<int>(n), l));
  const size_t count = std::fread(f.values().data(), sizeof(cplx), f.values().size(), fp);
  std::fclose(fp);
  if (count != f.values().size()) throw std::runtime_error("load: truncated data in " + path);
  return f;
}

}  // namespace ncqm::grid
