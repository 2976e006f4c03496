// Copyright 2026 The fiolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "fiolab/gabor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fiolab/error.hpp"
#include "fiolab/fft.hpp"
#include "fiolab/parallel.hpp"

namespace fiolab {

std::size_t GaborLattice::k_total() const {
  std::size_t c = 1;
  for (int i = 0; i < dim; ++i) c *= static_cast<std::size_t>(k_count());
  return c;
}

std::size_t GaborLattice::n_total() const {
  std::size_t c = 1;
  for (int i = 0; i < dim; ++i) c *= static_cast<std::size_t>(n_count());
  return c;
}

double GaborLattice::redundancy() const { return std::pow(1.0 / (alpha * beta), dim); }

std::size_t GaborLattice::flat(const int* k, const int* n) const {
  std::size_t fk = 0, fn = 0;
  for (int i = 0; i < dim; ++i) {
    fk = fk * k_count() + (k[i] - k_min);
    fn = fn * n_count() + (n[i] - n_min);
  }
  return fk * n_total() + fn;
}

void GaborLattice::unflat(std::size_t f, int* k, int* n) const {
  std::size_t fk = f / n_total(), fn = f % n_total();
  for (int i = dim - 1; i >= 0; --i) {
    k[i] = k_min + static_cast<int>(fk % k_count());
    fk /= k_count();
    n[i] = n_min + static_cast<int>(fn % n_count());
    fn /= n_count();
  }
}

GaborLattice make_lattice(const GridSpec& g, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw ValidationError("lattice: alpha and beta must be positive");
  const double ra = alpha / g.space_step(), rb = beta / g.freq_step();
  GaborLattice lat;
  lat.dim = g.dim;
  lat.N = g.samples_per_axis;
  lat.alpha = alpha;
  lat.beta = beta;
  lat.a = static_cast<int>(std::lround(ra));
  lat.b = static_cast<int>(std::lround(rb));
  if (lat.a < 1 || std::abs(ra - lat.a) > 1e-9 * ra) throw ValidationError("lattice: alpha is not a multiple of dx");
  if (lat.b < 1 || std::abs(rb - lat.b) > 1e-9 * rb) throw ValidationError("lattice: beta is not a multiple of deta");
  if (lat.N % lat.a != 0 || lat.N % lat.b != 0)
    throw ValidationError("lattice: alpha and beta steps must divide the number of samples");
  lat.K = lat.N / lat.a;
  lat.P = lat.N / lat.b;
  lat.k_min = -lat.K / 2;
  lat.k_max = lat.k_min + lat.K - 1;
  lat.n_min = -lat.P / 2;
  lat.n_max = lat.n_min + lat.P - 1;
  return lat;
}

GaborLattice with_radius(const GaborLattice& lat, int rk, int rn) {
  if (2 * rk + 1 > lat.K || 2 * rn + 1 > lat.P) throw ValidationError("lattice: radius exceeds the discrete torus");
  GaborLattice out = lat;
  out.k_min = -rk;
  out.k_max = rk;
  out.n_min = -rn;
  out.n_max = rn;
  return out;
}

namespace {

int wrap(long long i, int N) {
  long long r = i % N;
  return static_cast<int>(r < 0 ? r + N : r);
}

struct Axis {
  int N, a, b, K, P;
  double dx;
  const std::vector<cplx>* win;
};

Axis make_axis(const GaborLattice& lat, const GridSpec& g, const Signal& factor) {
  return Axis{lat.N, lat.a, lat.b, lat.K, lat.P, g.space_step(), &factor.samples};
}

// (-1)^{n b}
double mod_sign(int n, int b) { return ((static_cast<long long>(n) * b) % 2 == 0) ? 1.0 : -1.0; }

// out[(k - kmin) * nc + (n - nmin)] = <f, M_{beta n} T_{alpha k} g>, f strided.
void analysis_1d(const cplx* f, std::size_t stride, const Axis& ax, int kmin, int kmax, int nmin, int nmax,
                 cplx* out) {
  const int N = ax.N, P = ax.P;
  const int nc = nmax - nmin + 1;
  std::vector<cplx> fold(P);
  const std::vector<cplx>& w = *ax.win;
  for (int k = kmin; k <= kmax; ++k) {
    std::fill(fold.begin(), fold.end(), cplx(0.0));
    for (int i = 0; i < N; ++i) {
      const cplx gw = w[wrap(static_cast<long long>(i) - static_cast<long long>(k) * ax.a, N)];
      if (gw == cplx(0.0)) continue;
      fold[i % P] += f[static_cast<std::size_t>(i) * stride] * std::conj(gw);
    }
    fft_1d(fold.data(), P, -1);
    for (int n = nmin; n <= nmax; ++n)
      out[static_cast<std::size_t>(k - kmin) * nc + (n - nmin)] = ax.dx * mod_sign(n, ax.b) * fold[wrap(n, P)];
  }
}

// f (strided, overwritten) = sum c_{k,n} M_{beta n} T_{alpha k} g.
void synthesis_1d(const cplx* c, const Axis& ax, int kmin, int kmax, int nmin, int nmax, cplx* f,
                  std::size_t stride) {
  const int N = ax.N, P = ax.P;
  const int nc = nmax - nmin + 1;
  std::vector<cplx> acc(N, cplx(0.0)), per(P);
  const std::vector<cplx>& w = *ax.win;
  for (int k = kmin; k <= kmax; ++k) {
    std::fill(per.begin(), per.end(), cplx(0.0));
    bool any = false;
    for (int n = nmin; n <= nmax; ++n) {
      const cplx v = c[static_cast<std::size_t>(k - kmin) * nc + (n - nmin)];
      if (v == cplx(0.0)) continue;
      any = true;
      per[wrap(n, P)] += mod_sign(n, ax.b) * v;
    }
    if (!any) continue;
    fft_1d(per.data(), P, +1);
    for (int i = 0; i < N; ++i) {
      const cplx gw = w[wrap(static_cast<long long>(i) - static_cast<long long>(k) * ax.a, N)];
      if (gw == cplx(0.0)) continue;
      acc[i] += per[i % P] * gw;
    }
  }
  for (int i = 0; i < N; ++i) f[static_cast<std::size_t>(i) * stride] = acc[i];
}

void require_separable(const Window& g, const GaborLattice& lat, const GridSpec& grid) {
  if (!(g.signal.grid == grid)) throw ValidationError("gabor: window grid mismatch");
  if (static_cast<int>(g.factors.size()) != grid.dim)
    throw ValidationError("gabor: d > 1 needs a separable window");
  if (lat.dim != grid.dim || lat.N != grid.samples_per_axis) throw ValidationError("gabor: lattice grid mismatch");
  if (grid.dim > 2) throw ValidationError("gabor: only d = 1, 2 are supported");
}

// Walnut representation S f_i = (1/beta) sum_r W_r(i) f_{i + rP}.
struct Walnut {
  int N, P, nb;
  double inv_beta;
  std::vector<cplx> W;  // [r][i]
};

Walnut make_walnut(const Axis& ax, double beta) {
  Walnut wal;
  wal.N = ax.N;
  wal.P = ax.P;
  wal.nb = ax.N / ax.P;
  wal.inv_beta = 1.0 / beta;
  wal.W.assign(static_cast<std::size_t>(wal.nb) * ax.N, cplx(0.0));
  const std::vector<cplx>& w = *ax.win;
  for (int r = 0; r < wal.nb; ++r) {
    for (int i = 0; i < ax.N; ++i) {
      cplx s(0.0);
      for (int k = 0; k < ax.K; ++k) {
        const cplx g1 = w[wrap(static_cast<long long>(i) - static_cast<long long>(k) * ax.a, ax.N)];
        if (g1 == cplx(0.0)) continue;
        const cplx g2 = w[wrap(static_cast<long long>(i) + static_cast<long long>(r) * ax.P -
                                   static_cast<long long>(k) * ax.a,
                               ax.N)];
        s += g1 * std::conj(g2);
      }
      wal.W[static_cast<std::size_t>(r) * ax.N + i] = s;
    }
  }
  return wal;
}

void walnut_apply(const Walnut& wal, const cplx* f, std::size_t stride, cplx* out, std::size_t ostride) {
  std::vector<cplx> res(wal.N, cplx(0.0));
  for (int r = 0; r < wal.nb; ++r) {
    const cplx* Wr = &wal.W[static_cast<std::size_t>(r) * wal.N];
    for (int i = 0; i < wal.N; ++i) {
      if (Wr[i] == cplx(0.0)) continue;
      res[i] += Wr[i] * f[static_cast<std::size_t>((i + r * wal.P) % wal.N) * stride];
    }
  }
  for (int i = 0; i < wal.N; ++i) out[static_cast<std::size_t>(i) * ostride] = wal.inv_beta * res[i];
}

struct BlockSpectrum {
  double A = 0.0, B = 0.0;
};

// Applies S^{power} to v (length N) via the exact block decomposition; also
// returns the extreme eigenvalues.
BlockSpectrum block_apply(const Axis& ax, double beta, const std::vector<cplx>* v, double power,
                          std::vector<cplx>* out) {
  const int N = ax.N, P = ax.P, nb = N / P;
  const std::vector<cplx>& w = *ax.win;
  BlockSpectrum spec;
  spec.A = std::numeric_limits<double>::infinity();
  spec.B = 0.0;
  if (out) out->assign(N, cplx(0.0));
  Eigen::MatrixXcd M(nb, nb);
  for (int c = 0; c < P; ++c) {
    for (int r = 0; r < nb; ++r) {
      for (int s = r; s < nb; ++s) {
        cplx acc(0.0);
        for (int k = 0; k < ax.K; ++k) {
          const cplx g1 = w[wrap(static_cast<long long>(c) + static_cast<long long>(r) * P -
                                     static_cast<long long>(k) * ax.a,
                                 N)];
          if (g1 == cplx(0.0)) continue;
          const cplx g2 = w[wrap(static_cast<long long>(c) + static_cast<long long>(s) * P -
                                     static_cast<long long>(k) * ax.a,
                                 N)];
          acc += g1 * std::conj(g2);
        }
        M(r, s) = acc / beta;
        M(s, r) = std::conj(acc) / beta;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success) throw NumericalError("frame: block eigensolver failed");
    const Eigen::VectorXd& lam = es.eigenvalues();
    spec.A = std::min(spec.A, lam.minCoeff());
    spec.B = std::max(spec.B, lam.maxCoeff());
    if (v && out) {
      Eigen::VectorXcd x(nb);
      for (int r = 0; r < nb; ++r) x(r) = (*v)[c + r * P];
      Eigen::VectorXcd y = es.eigenvectors().adjoint() * x;
      for (int r = 0; r < nb; ++r) {
        if (!(lam(r) > 0.0)) throw NumericalError("frame: singular frame operator");
        y(r) *= std::pow(lam(r), power);
      }
      Eigen::VectorXcd z = es.eigenvectors() * y;
      for (int r = 0; r < nb; ++r) (*out)[c + r * P] = z(r);
    }
  }
  return spec;
}

GridSpec grid_of(const Window& g) { return g.signal.grid; }

}  // namespace

GaborCoeffs gabor_analysis(const Signal& f, const Window& g, const GaborLattice& lat) {
  const GridSpec& G = f.grid;
  require_separable(g, lat, G);
  GaborCoeffs out;
  out.lattice = lat;
  out.values.assign(lat.size(), cplx(0.0));
  const int kc = lat.k_count(), nc = lat.n_count();
  const std::size_t blk = static_cast<std::size_t>(kc) * nc;
  if (G.dim == 1) {
    const Axis ax = make_axis(lat, G, g.factors[0]);
    std::vector<cplx> tmp(blk);
    analysis_1d(f.samples.data(), 1, ax, lat.k_min, lat.k_max, lat.n_min, lat.n_max, tmp.data());
    out.values = std::move(tmp);
    return out;
  }
  const int N = G.samples_per_axis;
  const Axis ax0 = make_axis(lat, G, g.factors[0]);
  const Axis ax1 = make_axis(lat, G, g.factors[1]);
  // T[i0][k1][n1]
  std::vector<cplx> T(static_cast<std::size_t>(N) * blk);
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t i0) {
    analysis_1d(f.samples.data() + i0 * N, 1, ax1, lat.k_min, lat.k_max, lat.n_min, lat.n_max, &T[i0 * blk]);
  });
  parallel_for(blk, [&](std::size_t j1) {
    std::vector<cplx> res(blk);
    analysis_1d(T.data() + j1, blk, ax0, lat.k_min, lat.k_max, lat.n_min, lat.n_max, res.data());
    const int k1 = static_cast<int>(j1 / nc), n1 = static_cast<int>(j1 % nc);
    for (int k0 = 0; k0 < kc; ++k0)
      for (int n0 = 0; n0 < nc; ++n0) {
        const std::size_t fk = static_cast<std::size_t>(k0) * kc + k1;
        const std::size_t fn = static_cast<std::size_t>(n0) * nc + n1;
        out.values[fk * lat.n_total() + fn] = res[static_cast<std::size_t>(k0) * nc + n0];
      }
  });
  return out;
}

Signal gabor_synthesis(const GaborCoeffs& c, const Window& g, const GridSpec& grid) {
  const GaborLattice& lat = c.lattice;
  require_separable(g, lat, grid);
  Signal out(grid);
  const int kc = lat.k_count(), nc = lat.n_count();
  const std::size_t blk = static_cast<std::size_t>(kc) * nc;
  if (grid.dim == 1) {
    const Axis ax = make_axis(lat, grid, g.factors[0]);
    synthesis_1d(c.values.data(), ax, lat.k_min, lat.k_max, lat.n_min, lat.n_max, out.samples.data(), 1);
    return out;
  }
  const int N = grid.samples_per_axis;
  const Axis ax0 = make_axis(lat, grid, g.factors[0]);
  const Axis ax1 = make_axis(lat, grid, g.factors[1]);
  // U[i0][k1][n1] = sum_{k0,n0} c g0_{k0 n0}(i0)
  std::vector<cplx> U(static_cast<std::size_t>(N) * blk);
  parallel_for(blk, [&](std::size_t j1) {
    const int k1 = static_cast<int>(j1 / nc), n1 = static_cast<int>(j1 % nc);
    std::vector<cplx> slice(blk);
    for (int k0 = 0; k0 < kc; ++k0)
      for (int n0 = 0; n0 < nc; ++n0) {
        const std::size_t fk = static_cast<std::size_t>(k0) * kc + k1;
        const std::size_t fn = static_cast<std::size_t>(n0) * nc + n1;
        slice[static_cast<std::size_t>(k0) * nc + n0] = c.values[fk * lat.n_total() + fn];
      }
    synthesis_1d(slice.data(), ax0, lat.k_min, lat.k_max, lat.n_min, lat.n_max, U.data() + j1, blk);
  });
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t i0) {
    synthesis_1d(&U[i0 * blk], ax1, lat.k_min, lat.k_max, lat.n_min, lat.n_max, out.samples.data() + i0 * N, 1);
  });
  return out;
}

Signal gabor_atom(const Window& g, const GaborLattice& lat, const int* k, const int* n) {
  const GridSpec G = grid_of(g);
  require_separable(g, lat, G);
  const int N = G.samples_per_axis;
  std::vector<std::vector<cplx>> axes(G.dim, std::vector<cplx>(N));
  for (int d = 0; d < G.dim; ++d) {
    const std::vector<cplx>& w = g.factors[d].samples;
    for (int i = 0; i < N; ++i) {
      const double x = G.node(i);
      axes[d][i] = w[wrap(static_cast<long long>(i) - static_cast<long long>(k[d]) * lat.a, N)] *
                   std::polar(1.0, kTwoPi * lat.beta * n[d] * x);
    }
  }
  Signal out(G);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int idx[3];
    G.unflatten(i, idx);
    cplx v(1.0);
    for (int d = 0; d < G.dim; ++d) v *= axes[d][idx[d]];
    out.samples[i] = v;
  }
  return out;
}

Signal frame_operator(const Signal& f, const Window& g, const GaborLattice& lat) {
  const GridSpec& G = f.grid;
  require_separable(g, lat, G);
  Signal out(G);
  const int N = G.samples_per_axis;
  if (G.dim == 1) {
    const Walnut wal = make_walnut(make_axis(lat, G, g.factors[0]), lat.beta);
    walnut_apply(wal, f.samples.data(), 1, out.samples.data(), 1);
    return out;
  }
  const Walnut w0 = make_walnut(make_axis(lat, G, g.factors[0]), lat.beta);
  const Walnut w1 = make_walnut(make_axis(lat, G, g.factors[1]), lat.beta);
  std::vector<cplx> tmp(f.size());
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t i0) {
    walnut_apply(w1, f.samples.data() + i0 * N, 1, tmp.data() + i0 * N, 1);
  });
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t i1) {
    walnut_apply(w0, tmp.data() + i1, N, out.samples.data() + i1, N);
  });
  return out;
}

Signal frame_operator_direct(const Signal& f, const Window& g, const GaborLattice& lat) {
  GaborLattice full = make_lattice(f.grid, lat.alpha, lat.beta);
  return gabor_synthesis(gabor_analysis(f, g, full), g, f.grid);
}

FrameBounds frame_bounds(const Window& g, const GaborLattice& lat) {
  const GridSpec G = grid_of(g);
  require_separable(g, lat, G);
  FrameBounds fb;
  fb.A = 1.0;
  fb.B = 1.0;
  for (int d = 0; d < G.dim; ++d) {
    const BlockSpectrum s = block_apply(make_axis(lat, G, g.factors[d]), lat.beta, nullptr, 0.0, nullptr);
    fb.A *= s.A;
    fb.B *= s.B;
  }
  fb.is_frame = fb.A > 0.0 && fb.B / fb.A <= 1e6;
  return fb;
}

Window tight_window(const Window& g, const GaborLattice& lat) {
  const GridSpec G = grid_of(g);
  const FrameBounds fb = frame_bounds(g, lat);
  if (!fb.is_frame) throw NumericalError("tight_window: window and lattice do not form a frame");
  std::vector<Signal> factors;
  for (int d = 0; d < G.dim; ++d) {
    Signal h = g.factors[d];
    std::vector<cplx> res;
    block_apply(make_axis(lat, G, g.factors[d]), lat.beta, &g.factors[d].samples, -0.5, &res);
    h.samples = res;
    factors.push_back(h);
  }
  return Window::separable(factors, "tight(" + g.id + ")");
}

Window dual_window(const Window& g, const GaborLattice& lat, CgReport* report) {
  const GridSpec G = grid_of(g);
  const FrameBounds fb = frame_bounds(g, lat);
  if (!fb.is_frame) throw NumericalError("dual_window: window and lattice do not form a frame");
  const double tol = 1e-10;
  const int max_iter = 500;
  auto dot = [](const Signal& a, const Signal& b) {
    cplx s(0.0);
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a.samples[i]) * b.samples[i];
    return s;
  };
  const Signal& rhs = g.signal;
  Signal x(G), r = rhs, p = rhs;
  const double bnorm = std::sqrt(std::real(dot(rhs, rhs)));
  double rr = bnorm * bnorm;
  int it = 0;
  for (; it < max_iter && std::sqrt(rr) > tol * bnorm; ++it) {
    Signal Ap = frame_operator(p, g, lat);
    const cplx pAp = dot(p, Ap);
    if (!(std::real(pAp) > 0.0)) throw NumericalError("dual_window: operator is not positive definite");
    const cplx alpha = rr / pAp;
    for (std::size_t i = 0; i < x.size(); ++i) {
      x.samples[i] += alpha * p.samples[i];
      r.samples[i] -= alpha * Ap.samples[i];
    }
    const double rr_new = std::real(dot(r, r));
    const double beta = rr_new / rr;
    for (std::size_t i = 0; i < p.size(); ++i) p.samples[i] = r.samples[i] + beta * p.samples[i];
    rr = rr_new;
  }
  if (report) {
    report->iterations = it;
    report->residual = std::sqrt(rr) / bnorm;
  }
  if (std::sqrt(rr) > tol * bnorm) throw NumericalError("dual_window: conjugate gradients did not converge");
  Window w;
  w.signal = x;
  w.id = "dual(" + g.id + ")";
  w.l2_norm = lp_norm(x, 2.0);
  if (G.dim == 1) {
    w.factors = {x};
  } else {
    // S^{-1} is a tensor product, so the dual of a separable window is separable.
    std::vector<Signal> factors;
    for (int d = 0; d < G.dim; ++d) {
      Signal h = g.factors[d];
      std::vector<cplx> res;
      block_apply(make_axis(lat, G, g.factors[d]), lat.beta, &g.factors[d].samples, -1.0, &res);
      h.samples = res;
      factors.push_back(h);
    }
    w.factors = factors;
  }
  return w;
}

}  // namespace fiolab
