#include "ncqm/coherent.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "ncqm/parallel.hpp"

namespace ncqm::cs {

Fiducial Fiducial::unit_gaussian(const GridSpec& spec) {
  Fiducial fid;
  fid.normalization = 1.0 / std::sqrt(M_PI);
  fid.profile = GaussianProfile{fid.normalization, 1.0};
  fid.eta = GridFunction(spec);
  for (int i = 0; i < spec.n; ++i) {
    const double x = spec.x(i);
    for (int j = 0; j < spec.n; ++j) {
      const double y = spec.x(j);
      fid.eta.at(i, j) = fid.normalization * std::exp(-0.5 * (x * x + y * y));
    }
  }
  return fid;
}

double Fiducial::dihedral_asymmetry() const {
  const int n = eta.n();
  auto neg = [n](int i) { return (n - i) % n; };
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cplx v = eta.at(i, j);
      worst = std::max(worst, std::abs(v - eta.at(j, i)));
      worst = std::max(worst, std::abs(v - eta.at(neg(i), j)));
      worst = std::max(worst, std::abs(v - eta.at(i, neg(j))));
    }
  }
  return worst;
}

PhaseGrid::PhaseGrid(int nq_, double lq_, int np_, double lp_)
    : nq(nq_), np(np_), lq(lq_), lp(lp_) {
  if (nq < 2 || np < 2 || !(lq > 0.0) || !(lp > 0.0))
    throw std::invalid_argument("PhaseGrid: need at least 2 nodes per axis and positive extents");
}

grp::GalileiElement section_beta(const Vec2& q, const Vec2& p, double m) {
  grp::GalileiElement g;
  g.v = p * (1.0 / m);
  g.a = q;
  return g;
}

namespace {

// Shift entering the fiducial argument and the constant phase for the coset
// point (q, p): state(x) = e^{i q.p/2} e^{i x.p} eta(x + q + c J p).
struct StateGeometry {
  Vec2 shift;
  cplx constant;
};

StateGeometry state_geometry(const Vec2& q, const Vec2& p, const grp::GalileiParams& params) {
  const double c = 0.5 * params.lambda / (params.m * params.m);
  return {q + c * jmat(p), std::polar(1.0, 0.5 * dot(q, p))};
}

GridFunction dense_state(const Fiducial& fid, const Vec2& q, const Vec2& p,
                         const grp::GalileiParams& params) {
  const auto geo = state_geometry(q, p, params);
  GridFunction st(fid.eta.spec());
  const int n = st.n();
  if (fid.profile) {
    const double w2 = 2.0 * fid.profile->width * fid.profile->width;
    for (int i = 0; i < n; ++i) {
      const double x1 = st.x(i) + geo.shift.x;
      const cplx f1 = std::polar(fid.profile->amp * 1.0, st.x(i) * p.x);
      for (int j = 0; j < n; ++j) {
        const double x2 = st.x(j) + geo.shift.y;
        st.at(i, j) = geo.constant * f1 * std::polar(1.0, st.x(j) * p.y) *
                      std::exp(-(x1 * x1 + x2 * x2) / w2);
      }
    }
  } else {
    st = grid::shifted(fid.eta, geo.shift);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        st.at(i, j) *= geo.constant * std::polar(1.0, st.x(i) * p.x + st.x(j) * p.y);
  }
  return st;
}

}  // namespace

GridFunction coherent_state(const Fiducial& fid, const Vec2& q, const Vec2& p,
                            const grp::GalileiParams& params) {
  return dense_state(fid, q, p, params);
}

GridFunction quantizer_state(const Fiducial& fid, const Vec2& q, const Vec2& p,
                             const grp::GalileiParams& params) {
  return dense_state(fid, -q, p, params);
}

Symbol Symbol::one() {
  return {"1", [](const Vec2&, const Vec2&) { return cplx(1.0); }};
}

Symbol Symbol::coord_q(int axis) {
  return {axis == 0 ? "q1" : "q2",
          [axis](const Vec2& q, const Vec2&) { return cplx(axis == 0 ? q.x : q.y); }};
}

Symbol Symbol::coord_p(int axis) {
  return {axis == 0 ? "p1" : "p2",
          [axis](const Vec2&, const Vec2& p) { return cplx(axis == 0 ? p.x : p.y); }};
}

bool PhaseRect::contains(const Vec2& q, const Vec2& p) const {
  return q.x >= q_lo.x && q.x < q_hi.x && q.y >= q_lo.y && q.y < q_hi.y && p.x >= p_lo.x &&
         p.x < p_hi.x && p.y >= p_lo.y && p.y < p_hi.y;
}

PhaseRect PhaseRect::full(const PhaseGrid& pg) {
  PhaseRect r;
  r.q_lo = {-pg.lq, -pg.lq};
  r.q_hi = {pg.lq, pg.lq};
  r.p_lo = {-pg.lp, -pg.lp};
  r.p_hi = {pg.lp + 1.0, pg.lp + 1.0};
  return r;
}

PhaseRect PhaseRect::empty() { return PhaseRect{}; }

// ---------------------------------------------------------------------------
// quadrature engines

namespace {

// One axis of a separable profile state: a[i] = gauss(x_i + shift) e^{i x_i mom}.
void axis_factor(const GridSpec& spec, const GaussianProfile& prof, double shift, double mom,
                 std::vector<cplx>& a) {
  const int n = spec.n;
  a.resize(n);
  const double w2 = 2.0 * prof.width * prof.width;
  for (int i = 0; i < n; ++i) {
    const double x = spec.x(i);
    const double d = x + shift;
    a[i] = std::polar(std::exp(-d * d / w2), x * mom);
  }
}

}  // namespace

Quantizer::Quantizer(Fiducial fid, PhaseGrid pg, grp::GalileiParams params, bool fast)
    : fid_(std::move(fid)), pg_(pg), params_(params), fast_(fast) {}

std::vector<std::vector<GridFunction>> Quantizer::direct_batch(
    const std::vector<Symbol>& symbols, const std::vector<GridFunction>& inputs,
    const PhaseRect* rect) const {
  const GridSpec& spec = fid_.eta.spec();
  const int n = spec.n;
  const size_t nk = symbols.size(), nj = inputs.size();
  const double w = pg_.weight();
  const double h2 = spec.h() * spec.h();
  const double c = 0.5 * params_.lambda / (params_.m * params_.m);

  if (!fid_.profile) {
    // dense fallback for general fiducials
    std::vector<std::vector<GridFunction>> out(nk,
                                               std::vector<GridFunction>(nj, GridFunction(spec)));
    std::vector<cplx> proj(nj);
    for (int iq1 = 0; iq1 < pg_.nq; ++iq1)
      for (int iq2 = 0; iq2 < pg_.nq; ++iq2)
        for (int ip1 = 0; ip1 < pg_.np; ++ip1)
          for (int ip2 = 0; ip2 < pg_.np; ++ip2) {
            const Vec2 q{pg_.qnode(iq1), pg_.qnode(iq2)};
            const Vec2 p{pg_.pnode(ip1), pg_.pnode(ip2)};
            if (rect && !rect->contains(q, p)) continue;
            const GridFunction st = quantizer_state(fid_, q, p, params_);
            for (size_t j = 0; j < nj; ++j) proj[j] = grid::inner(st, inputs[j]);
            for (size_t k = 0; k < nk; ++k) {
              const cplx sval = symbols[k].eval(q, p);
              if (sval == cplx(0.0)) continue;
              for (size_t j = 0; j < nj; ++j) {
                const cplx coef = w * sval * proj[j];
                auto& dst = out[k][j].values();
                for (size_t ii = 0; ii < dst.size(); ++ii) dst[ii] += coef * st.values()[ii];
              }
            }
          }
    return out;
  }

  // Blocked separable engine: the state factorizes per axis and only the
  // second axis factor depends on q2, so the row contractions of the inputs
  // are shared across the whole q2 line. Blocks run over (q1, p1, p2) in
  // lexicographic order; accumulation within a block is one rank-one update.
  const std::int64_t blocks =
      static_cast<std::int64_t>(pg_.nq) * pg_.np * pg_.np;
  const int nchunks = chunk_count(blocks);
  std::vector<std::vector<GridFunction>> partial(
      static_cast<size_t>(nchunks) * nk, std::vector<GridFunction>(nj, GridFunction(spec)));
  const GaussianProfile prof = *fid_.profile;
  const double qs = -1.0;  // quantizer chart: phase point (q, p) <-> coset point (-q, p)

  parallel_chunks(blocks, [&](int chunk, std::int64_t lo, std::int64_t hi) {
    std::vector<cplx> a1, a2;
    std::vector<std::vector<cplx>> t(nj, std::vector<cplx>(n));
    std::vector<std::vector<cplx>> b(nk * nj, std::vector<cplx>(n));
    std::vector<cplx> proj(nj);
    for (std::int64_t blk = lo; blk < hi; ++blk) {
      const int ip2 = static_cast<int>(blk % pg_.np);
      const int ip1 = static_cast<int>((blk / pg_.np) % pg_.np);
      const int iq1 = static_cast<int>(blk / (static_cast<std::int64_t>(pg_.np) * pg_.np));
      const double q1 = pg_.qnode(iq1);
      const Vec2 p{pg_.pnode(ip1), pg_.pnode(ip2)};
      axis_factor(spec, prof, qs * q1 - c * p.y, p.x, a1);
      for (size_t j = 0; j < nj; ++j) {
        const auto& vals = inputs[j].values();
        auto& tj = t[j];
        std::fill(tj.begin(), tj.end(), cplx(0.0));
        for (int i = 0; i < n; ++i) {
          const cplx a1c = std::conj(a1[i]);
          const cplx* row = vals.data() + static_cast<size_t>(i) * n;
          for (int j2 = 0; j2 < n; ++j2) tj[j2] += a1c * row[j2];
        }
      }
      for (auto& vec : b) std::fill(vec.begin(), vec.end(), cplx(0.0));
      bool any = false;
      for (int iq2 = 0; iq2 < pg_.nq; ++iq2) {
        const double q2 = pg_.qnode(iq2);
        const Vec2 q{q1, q2};
        if (rect && !rect->contains(q, p)) continue;
        axis_factor(spec, prof, qs * q2 + c * p.x, p.y, a2);
        const cplx constant =
            prof.amp * std::polar(1.0, 0.5 * qs * (q1 * p.x + q2 * p.y));
        for (size_t j = 0; j < nj; ++j) {
          cplx acc = 0.0;
          for (int j2 = 0; j2 < n; ++j2) acc += std::conj(a2[j2]) * t[j][j2];
          proj[j] = h2 * std::conj(constant) * acc;
        }
        for (size_t k = 0; k < nk; ++k) {
          const cplx sval = symbols[k].eval(q, p);
          if (sval == cplx(0.0)) continue;
          for (size_t j = 0; j < nj; ++j) {
            const cplx coef = w * sval * proj[j] * constant;
            auto& bkj = b[k * nj + j];
            for (int j2 = 0; j2 < n; ++j2) bkj[j2] += coef * a2[j2];
            any = true;
          }
        }
      }
      if (!any) continue;
      for (size_t k = 0; k < nk; ++k)
        for (size_t j = 0; j < nj; ++j) {
          auto& dst = partial[static_cast<size_t>(chunk) * nk + k][j].values();
          const auto& bkj = b[k * nj + j];
          for (int i = 0; i < n; ++i) {
            const cplx ai = a1[i];
            cplx* row = dst.data() + static_cast<size_t>(i) * n;
            for (int j2 = 0; j2 < n; ++j2) row[j2] += ai * bkj[j2];
          }
        }
    }
  });

  std::vector<std::vector<GridFunction>> out(nk, std::vector<GridFunction>(nj, GridFunction(spec)));
  for (int chunk = 0; chunk < nchunks; ++chunk)
    for (size_t k = 0; k < nk; ++k)
      for (size_t j = 0; j < nj; ++j) {
        auto& dst = out[k][j].values();
        const auto& src = partial[static_cast<size_t>(chunk) * nk + k][j].values();
        for (size_t ii = 0; ii < dst.size(); ++ii) dst[ii] += src[ii];
      }
  return out;
}

namespace {

// raw in-place 2d fft helpers for the correlation path
void raw_fft(std::vector<cplx>& data, int n, int sign) {
  static std::mutex m;
  static std::map<std::pair<int, int>, fftw_plan> cache;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it == cache.end()) {
      std::vector<cplx> tmp(static_cast<size_t>(n) * n);
      plan = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(tmp.data()),
                              reinterpret_cast<fftw_complex*>(tmp.data()), sign,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
      cache.emplace(key, plan);
    } else {
      plan = it->second;
    }
  }
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data.data()),
                   reinterpret_cast<fftw_complex*>(data.data()));
}

// wrapped displacement coordinate for index d on an n-point axis of spacing h
inline double wrap_coord(int d, int n, double h) { return h * (d < n / 2 ? d : d - n); }

}  // namespace

std::vector<std::vector<GridFunction>> Quantizer::fft_batch(const std::vector<Symbol>& symbols,
                                                            const std::vector<GridFunction>& inputs,
                                                            const PhaseRect* rect) const {
  const GridSpec& spec = fid_.eta.spec();
  const int n = spec.n;
  const size_t nk = symbols.size(), nj = inputs.size();
  const double h = spec.h();
  const double h2 = h * h;
  const double wp = pg_.hp() * pg_.hp();
  const double c = 0.5 * params_.lambda / (params_.m * params_.m);

  std::vector<cplx> eta_hat(fid_.eta.values());
  raw_fft(eta_hat, n, FFTW_FORWARD);

  std::vector<std::vector<GridFunction>> out(nk, std::vector<GridFunction>(nj, GridFunction(spec)));
  std::vector<cplx> gt(static_cast<size_t>(n) * n), kbuf(gt.size());
  std::vector<std::vector<cplx>> corrs(nj, std::vector<cplx>(gt.size()));
  const double inv_n2 = 1.0 / (static_cast<double>(n) * n);

  for (int ip1 = 0; ip1 < pg_.np; ++ip1) {
    for (int ip2 = 0; ip2 < pg_.np; ++ip2) {
      const Vec2 p{pg_.pnode(ip1), pg_.pnode(ip2)};
      const Vec2 cjp = c * jmat(p);
      for (size_t j = 0; j < nj; ++j) {
        for (int i = 0; i < n; ++i) {
          const cplx f1 = std::polar(1.0, -spec.x(i) * p.x);
          for (int j2 = 0; j2 < n; ++j2)
            gt[static_cast<size_t>(i) * n + j2] =
                f1 * std::polar(1.0, -spec.x(j2) * p.y) * inputs[j].at(i, j2);
        }
        raw_fft(gt, n, FFTW_FORWARD);
        for (size_t ii = 0; ii < gt.size(); ++ii) gt[ii] *= std::conj(eta_hat[ii]);
        raw_fft(gt, n, FFTW_BACKWARD);
        for (size_t ii = 0; ii < gt.size(); ++ii) corrs[j][ii] = gt[ii] * inv_n2;
      }
      for (size_t k = 0; k < nk; ++k) {
        for (size_t j = 0; j < nj; ++j) {
          // kernel over lattice displacements y within the q window
          bool any = false;
          for (int d1 = 0; d1 < n; ++d1) {
            const double y1 = wrap_coord(d1, n, h);
            for (int d2 = 0; d2 < n; ++d2) {
              const double y2 = wrap_coord(d2, n, h);
              cplx val = 0.0;
              if (std::abs(y1) < pg_.lq && std::abs(y2) < pg_.lq) {
                const Vec2 qlab{y1 + cjp.x, y2 + cjp.y};
                if (!rect || rect->contains(qlab, p)) {
                  val = h2 * h2 * wp * symbols[k].eval(qlab, p) *
                        corrs[j][static_cast<size_t>(d1) * n + d2];
                  any = true;
                }
              }
              kbuf[static_cast<size_t>(d1) * n + d2] = val;
            }
          }
          if (!any) continue;
          raw_fft(kbuf, n, FFTW_FORWARD);
          for (size_t ii = 0; ii < kbuf.size(); ++ii) kbuf[ii] *= eta_hat[ii];
          raw_fft(kbuf, n, FFTW_BACKWARD);
          auto& dst = out[k][j].values();
          for (int i = 0; i < n; ++i) {
            const cplx f1 = std::polar(1.0, spec.x(i) * p.x);
            for (int j2 = 0; j2 < n; ++j2)
              dst[static_cast<size_t>(i) * n + j2] +=
                  f1 * std::polar(1.0, spec.x(j2) * p.y) *
                  kbuf[static_cast<size_t>(i) * n + j2] * inv_n2;
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<GridFunction>> Quantizer::run_batch(const std::vector<Symbol>& symbols,
                                                            const std::vector<GridFunction>& inputs,
                                                            const PhaseRect* rect,
                                                            bool normalized) const {
  auto out = fast_ ? fft_batch(symbols, inputs, rect) : direct_batch(symbols, inputs, rect);
  if (normalized) {
    const double c = identity_scale();
    for (auto& row : out)
      for (auto& g : row)
        for (auto& v : g.values()) v /= c;
  }
  return out;
}

double Quantizer::identity_scale() const {
  if (scale_ != 0.0) return scale_;
  auto raw = fast_ ? fft_batch({Symbol::one()}, {fid_.eta}, nullptr)
                   : direct_batch({Symbol::one()}, {fid_.eta}, nullptr);
  const cplx r = grid::inner(fid_.eta, raw[0][0]) / grid::inner(fid_.eta, fid_.eta);
  scale_ = r.real();
  return scale_;
}

GridFunction Quantizer::apply(const Symbol& sym, const GridFunction& g) const {
  return run_batch({sym}, {g}, nullptr, true)[0][0];
}

std::vector<std::vector<GridFunction>> Quantizer::apply_batch(
    const std::vector<Symbol>& symbols, const std::vector<GridFunction>& inputs) const {
  return run_batch(symbols, inputs, nullptr, true);
}

op::LinearOp Quantizer::as_operator(const Symbol& sym) const {
  return {"O[" + sym.name + "]",
          [this, sym](const GridFunction& g) { return apply(sym, g); }};
}

op::LinearOp Quantizer::pov_operator(const PhaseRect& rect) const {
  return {"pov", [this, rect](const GridFunction& g) {
            return run_batch({Symbol::one()}, {g}, &rect, true)[0][0];
          }};
}

ResolutionResult resolution_check(const Fiducial& fid, const GridFunction& f,
                                  const GridFunction& g, const PhaseGrid& pg,
                                  const grp::GalileiParams& params, bool fast) {
  if (!fast) return resolution_pairs(fid, {f, g}, {{0, 1}}, pg, params)[0];

  ResolutionResult res;
  res.inner_fg = grid::inner(f, g);
  const GridSpec& spec = fid.eta.spec();
  const int n = spec.n;
  const double h2 = spec.h() * spec.h();
  std::vector<cplx> eta_hat(fid.eta.values());
  raw_fft(eta_hat, n, FFTW_FORWARD);
  std::vector<cplx> tf(eta_hat.size()), tg(eta_hat.size());
  const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
  const double wp = pg.hp() * pg.hp();
  cplx lhs = 0.0;
  for (int ip1 = 0; ip1 < pg.np; ++ip1) {
    for (int ip2 = 0; ip2 < pg.np; ++ip2) {
      const Vec2 p{pg.pnode(ip1), pg.pnode(ip2)};
      for (int i = 0; i < n; ++i) {
        const cplx f1 = std::polar(1.0, -spec.x(i) * p.x);
        for (int j2 = 0; j2 < n; ++j2) {
          const cplx ph = f1 * std::polar(1.0, -spec.x(j2) * p.y);
          tf[static_cast<size_t>(i) * n + j2] = ph * f.at(i, j2);
          tg[static_cast<size_t>(i) * n + j2] = ph * g.at(i, j2);
        }
      }
      raw_fft(tf, n, FFTW_FORWARD);
      raw_fft(tg, n, FFTW_FORWARD);
      for (size_t ii = 0; ii < tf.size(); ++ii) {
        const cplx e = std::conj(eta_hat[ii]);
        tf[ii] *= e;
        tg[ii] *= e;
      }
      raw_fft(tf, n, FFTW_BACKWARD);
      raw_fft(tg, n, FFTW_BACKWARD);
      cplx acc = 0.0;
      for (int d1 = 0; d1 < n; ++d1) {
        const double y1 = wrap_coord(d1, n, spec.h());
        if (std::abs(y1) >= pg.lq) continue;
        for (int d2 = 0; d2 < n; ++d2) {
          if (std::abs(wrap_coord(d2, n, spec.h())) >= pg.lq) continue;
          const size_t ii = static_cast<size_t>(d1) * n + d2;
          acc += std::conj(tf[ii]) * tg[ii];
        }
      }
      lhs += wp * acc * inv_n2 * inv_n2;
    }
  }
  res.lhs = lhs * h2 * h2 * h2;  // h^4 from the two projections, h^2 lattice measure
  res.ratio = res.lhs / res.inner_fg;
  return res;
}

std::vector<ResolutionResult> resolution_pairs(const Fiducial& fid,
                                               const std::vector<GridFunction>& funcs,
                                               const std::vector<std::pair<int, int>>& pairs,
                                               const PhaseGrid& pg,
                                               const grp::GalileiParams& params) {
  const GridSpec& spec = fid.eta.spec();
  const int n = spec.n;
  const double h2 = spec.h() * spec.h();
  const double c = 0.5 * params.lambda / (params.m * params.m);
  const size_t nf = funcs.size();

  std::vector<cplx> sums(pairs.size(), 0.0);
  if (fid.profile) {
    // blocked over (q1, p1, p2); see the quantizer engine
    const std::int64_t blocks = static_cast<std::int64_t>(pg.nq) * pg.np * pg.np;
    const int nchunks = chunk_count(blocks);
    std::vector<std::vector<cplx>> partial(nchunks, std::vector<cplx>(pairs.size(), 0.0));
    const GaussianProfile prof = *fid.profile;
    parallel_chunks(blocks, [&](int chunk, std::int64_t lo, std::int64_t hi) {
      std::vector<cplx> a1, a2;
      std::vector<std::vector<cplx>> t(nf, std::vector<cplx>(n));
      std::vector<cplx> proj(nf);
      for (std::int64_t blk = lo; blk < hi; ++blk) {
        const int ip2 = static_cast<int>(blk % pg.np);
        const int ip1 = static_cast<int>((blk / pg.np) % pg.np);
        const int iq1 = static_cast<int>(blk / (static_cast<std::int64_t>(pg.np) * pg.np));
        const double q1 = pg.qnode(iq1);
        const Vec2 p{pg.pnode(ip1), pg.pnode(ip2)};
        axis_factor(spec, prof, q1 - c * p.y, p.x, a1);
        for (size_t j = 0; j < nf; ++j) {
          const auto& vals = funcs[j].values();
          auto& tj = t[j];
          std::fill(tj.begin(), tj.end(), cplx(0.0));
          for (int i = 0; i < n; ++i) {
            const cplx a1c = std::conj(a1[i]);
            const cplx* row = vals.data() + static_cast<size_t>(i) * n;
            for (int j2 = 0; j2 < n; ++j2) tj[j2] += a1c * row[j2];
          }
        }
        for (int iq2 = 0; iq2 < pg.nq; ++iq2) {
          const double q2 = pg.qnode(iq2);
          axis_factor(spec, prof, q2 + c * p.x, p.y, a2);
          // the label phase cancels between the two projections
          for (size_t j = 0; j < nf; ++j) {
            cplx acc = 0.0;
            for (int j2 = 0; j2 < n; ++j2) acc += std::conj(a2[j2]) * t[j][j2];
            proj[j] = h2 * prof.amp * acc;
          }
          for (size_t k = 0; k < pairs.size(); ++k)
            partial[chunk][k] += std::conj(proj[pairs[k].first]) * proj[pairs[k].second];
        }
      }
    });
    for (int chunk = 0; chunk < nchunks; ++chunk)
      for (size_t k = 0; k < pairs.size(); ++k) sums[k] += partial[chunk][k];
  } else {
    std::vector<cplx> proj(nf);
    for (int iq1 = 0; iq1 < pg.nq; ++iq1)
      for (int iq2 = 0; iq2 < pg.nq; ++iq2)
        for (int ip1 = 0; ip1 < pg.np; ++ip1)
          for (int ip2 = 0; ip2 < pg.np; ++ip2) {
            const Vec2 q{pg.qnode(iq1), pg.qnode(iq2)};
            const Vec2 p{pg.pnode(ip1), pg.pnode(ip2)};
            const GridFunction st = coherent_state(fid, q, p, params);
            for (size_t j = 0; j < nf; ++j) proj[j] = grid::inner(st, funcs[j]);
            for (size_t k = 0; k < pairs.size(); ++k)
              sums[k] += std::conj(proj[pairs[k].first]) * proj[pairs[k].second];
          }
  }

  std::vector<ResolutionResult> out(pairs.size());
  for (size_t k = 0; k < pairs.size(); ++k) {
    out[k].lhs = pg.weight() * sums[k];
    out[k].inner_fg = grid::inner(funcs[pairs[k].first], funcs[pairs[k].second]);
    out[k].ratio = out[k].lhs / out[k].inner_fg;
  }
  return out;
}

std::vector<CommutatorEntry> quantized_commutators(const Quantizer& qz,
                                                   const std::vector<GridFunction>& probes) {
  const std::vector<Symbol> syms = {Symbol::coord_q(0), Symbol::coord_q(1), Symbol::coord_p(0),
                                    Symbol::coord_p(1)};
  std::vector<CommutatorEntry> entries;
  for (size_t pid = 0; pid < probes.size(); ++pid) {
    const GridFunction& g = probes[pid];
    auto layer1 = qz.apply_batch(syms, {g});
    std::vector<GridFunction> firsts;
    for (size_t k = 0; k < syms.size(); ++k) firsts.push_back(layer1[k][0]);
    auto layer2 = qz.apply_batch(syms, firsts);  // layer2[a][b] = O_a O_b g
    const cplx gg = grid::inner(g, g);
    for (size_t a = 0; a < syms.size(); ++a) {
      for (size_t b = a + 1; b < syms.size(); ++b) {
        GridFunction comm = layer2[a][b];
        for (size_t ii = 0; ii < comm.values().size(); ++ii)
          comm.values()[ii] -= layer2[b][a].values()[ii];
        CommutatorEntry e;
        e.a = syms[a].name;
        e.b = syms[b].name;
        e.probe_id = static_cast<int>(pid);
        e.coeff = grid::inner(g, comm) / (cplx(0.0, 1.0) * gg);
        GridFunction rem = comm;
        for (size_t ii = 0; ii < rem.values().size(); ++ii)
          rem.values()[ii] -= cplx(0.0, 1.0) * e.coeff * g.values()[ii];
        e.residual = grid::norm(rem) / grid::norm(g);
        entries.push_back(e);
      }
    }
  }
  return entries;
}

}  // namespace ncqm::cs
