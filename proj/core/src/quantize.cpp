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

#include "fiolab/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "fiolab/error.hpp"
#include "fiolab/fft.hpp"
#include "fiolab/parallel.hpp"
#include "fiolab/validate.hpp"

namespace fiolab {

namespace {

// t(j) = t0 + j dt on every axis of an N^d array.
struct UniformAxis {
  double t0;
  double dt;
};

UniformAxis space_axis(const GridSpec& g, double mu = 1.0) { return {-g.half_width * mu, g.space_step() * mu}; }
UniformAxis freq_axis(const GridSpec& g) { return {-0.5 * g.samples_per_axis * g.freq_step(), g.freq_step()}; }

constexpr int kResync = 64;

std::size_t ipow(int N, int d) {
  std::size_t r = 1;
  for (int a = 0; a < d; ++a) r *= static_cast<std::size_t>(N);
  return r;
}

// out[i] = sum_j c_j pair(i, j) exp(i w_i . t_j), j over the uniform N^d grid.
template <class Pair>
void kernel_sum_uniform(std::size_t n_out, int d, int N, UniformAxis ax, const std::vector<double>& w,
                        const std::vector<cplx>& c, Pair pair, std::vector<cplx>& out) {
  const std::size_t rows = ipow(N, d - 1);
  std::vector<int> lo(rows, N), hi(rows, -1);
  for (std::size_t r = 0; r < rows; ++r)
    for (int j = 0; j < N; ++j)
      if (c[r * N + j] != cplx(0.0)) {
        lo[r] = std::min(lo[r], j);
        hi[r] = j;
      }
  out.assign(n_out, cplx(0.0));
  parallel_for(n_out, [&](std::size_t i) {
    const double* wi = &w[i * d];
    const double wl = wi[d - 1];
    const cplx step = std::polar(1.0, wl * ax.dt);
    cplx acc(0.0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (lo[r] > hi[r]) continue;
      double base = 0.0;
      std::size_t rr = r;
      for (int a = d - 2; a >= 0; --a) {
        base += wi[a] * (ax.t0 + static_cast<double>(rr % N) * ax.dt);
        rr /= N;
      }
      const std::size_t off = r * N;
      int j = lo[r];
      while (j <= hi[r]) {
        cplx z = std::polar(1.0, base + wl * (ax.t0 + j * ax.dt));
        const int end = std::min(hi[r], j + kResync - 1);
        for (; j <= end; ++j) {
          acc += c[off + j] * pair(i, off + j) * z;
          z *= step;
        }
      }
    }
    out[i] = acc;
  });
}

// out[j] = sum_i c_i pair(j, i) exp(i w_i . t_j), j over the uniform N^d grid.
template <class Pair>
void kernel_out_uniform(int d, int N, UniformAxis ax, const std::vector<double>& w, const std::vector<cplx>& c,
                        Pair pair, std::vector<cplx>& out) {
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != cplx(0.0)) act.push_back(i);
  const std::size_t total = ipow(N, d);
  const int block = d == 1 ? std::min(N, 256) : N;
  const std::size_t tasks = total / block;
  out.assign(total, cplx(0.0));
  parallel_for(tasks, [&](std::size_t t) {
    const std::size_t first = t * block;
    const std::size_t r = first / N;
    const int j0 = static_cast<int>(first % N);
    std::vector<cplx> acc(block, cplx(0.0));
    for (std::size_t i : act) {
      const double* wi = &w[i * d];
      const double wl = wi[d - 1];
      double base = 0.0;
      std::size_t rr = r;
      for (int a = d - 2; a >= 0; --a) {
        base += wi[a] * (ax.t0 + static_cast<double>(rr % N) * ax.dt);
        rr /= N;
      }
      const cplx step = std::polar(1.0, wl * ax.dt);
      const cplx ci = c[i];
      int j = 0;
      while (j < block) {
        cplx z = std::polar(1.0, base + wl * (ax.t0 + (j0 + j) * ax.dt));
        const int end = std::min(block, j + kResync);
        for (; j < end; ++j) {
          acc[j] += ci * pair(first + j, i) * z;
          z *= step;
        }
      }
    }
    std::copy(acc.begin(), acc.end(), out.begin() + first);
  });
}

struct One {
  cplx operator()(std::size_t, std::size_t) const { return cplx(1.0); }
};

// Coordinates of all grid nodes (space or frequency), scaled by mu.
std::vector<double> coords(const GridSpec& g, bool freq, double mu = 1.0) {
  const int d = g.dim;
  std::vector<double> out(g.size() * d);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (freq)
      g.freq_point(i, &out[i * d]);
    else
      g.point(i, &out[i * d]);
    for (int a = 0; a < d; ++a) out[i * d + a] *= mu;
  }
  return out;
}

std::vector<cplx> eval_factor(const PointFn& f, const std::vector<double>& pts, int d) {
  const std::size_t n = pts.size() / d;
  std::vector<cplx> v(n, cplx(1.0));
  if (f)
    for (std::size_t i = 0; i < n; ++i) v[i] = f(&pts[i * d]);
  return v;
}

std::vector<double> map_rates(const VecMap& m, const std::vector<double>& pts, int d, double scale) {
  std::vector<double> w(pts.size());
  for (std::size_t i = 0; i < pts.size() / d; ++i) {
    m(&pts[i * d], &w[i * d]);
    for (int a = 0; a < d; ++a) w[i * d + a] *= scale;
  }
  return w;
}

void guard(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, bool type2, double mu, const ApplyOptions& opt) {
  if (!opt.alias_guard) return;
  const double m = max_space_frequency(phi, s, f, type2, mu, opt.active_fraction);
  const double limit = (type2 ? 2.0 : 1.0) * opt.alias_fraction * f.grid.nyquist();
  if (m > limit) {
    std::ostringstream os;
    os << "aliasing guard: " << (type2 ? "|d_x Phi| + input band" : "|d_x Phi|") << " reaches " << m << " > "
       << limit << " (" << (type2 ? 2.0 : 1.0) * opt.alias_fraction << " x Nyquist) for phase " << phi.name
       << " on " << f.grid.describe();
    throw NumericalError(os.str());
  }
}

void require_dims(const PhaseSpec* phi, const SymbolSpec& s, const Signal& f) {
  if (s.dim != f.grid.dim || (phi && phi->dim != f.grid.dim))
    throw ValidationError("operator: symbol, phase and signal dimensions differ");
}

Signal fio1_impl(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, double mu, const ApplyOptions& opt,
                 bool dense) {
  require_dims(&phi, s, f);
  if (!dense) guard(phi, s, f, false, mu, opt);
  const GridSpec& G = f.grid;
  const int d = G.dim, N = G.samples_per_axis;
  const std::size_t n = G.size();
  const std::vector<cplx> F = fourier_transform(f).samples;
  const double dh = G.freq_cell_volume();
  const std::vector<double> X = coords(G, false, mu), E = coords(G, true);
  Signal out(G);

  if (!dense && phi.structure != PhaseStructure::General && phi.map) {
    const bool lin_eta = phi.structure == PhaseStructure::LinearInEta;
    std::vector<double> w = lin_eta ? map_rates(phi.map, X, d, kTwoPi) : map_rates(phi.map, E, d, kTwoPi);
    std::vector<cplx> tmp;
    auto run = [&](const std::vector<cplx>& c, auto pair) {
      if (lin_eta)
        kernel_sum_uniform(n, d, N, freq_axis(G), w, c, pair, tmp);
      else
        kernel_out_uniform(d, N, space_axis(G, mu), w, c, pair, tmp);
    };
    if (s.separable()) {
      for (const auto& term : s.terms) {
        const std::vector<cplx> b = eval_factor(term.feta, E, d);
        const std::vector<cplx> a = eval_factor(term.fx, X, d);
        std::vector<cplx> c(n);
        for (std::size_t j = 0; j < n; ++j) c[j] = b[j] * F[j] * dh;
        run(c, One{});
        for (std::size_t i = 0; i < n; ++i) out.samples[i] += a[i] * tmp[i];
      }
    } else {
      std::vector<cplx> c(n);
      for (std::size_t j = 0; j < n; ++j) c[j] = F[j] * dh;
      if (lin_eta)
        run(c, [&](std::size_t i, std::size_t j) { return s.eval(&X[i * d], &E[j * d]); });
      else
        run(c, [&](std::size_t i, std::size_t j) { return s.eval(&X[i * d], &E[j * d]); });
      out.samples = tmp;
    }
    return out;
  }

  parallel_for(n, [&](std::size_t i) {
    cplx acc(0.0);
    const double* x = &X[i * d];
    for (std::size_t j = 0; j < n; ++j) {
      if (F[j] == cplx(0.0)) continue;
      const double* e = &E[j * d];
      acc += std::polar(1.0, kTwoPi * phi.eval(x, e)) * s.eval(x, e) * F[j];
    }
    out.samples[i] = acc * dh;
  });
  return out;
}

Signal fio2_impl(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, const ApplyOptions& opt, bool dense) {
  require_dims(&phi, s, f);
  if (!dense) guard(phi, s, f, true, 1.0, opt);
  const GridSpec& G = f.grid;
  const int d = G.dim, N = G.samples_per_axis;
  const std::size_t n = G.size();
  const double vx = G.cell_volume();
  const std::vector<double> X = coords(G, false), E = coords(G, true);
  std::vector<cplx> spec(n, cplx(0.0));

  if (!dense && phi.structure != PhaseStructure::General && phi.map) {
    const bool lin_eta = phi.structure == PhaseStructure::LinearInEta;
    std::vector<double> w = lin_eta ? map_rates(phi.map, X, d, -kTwoPi) : map_rates(phi.map, E, d, -kTwoPi);
    std::vector<cplx> tmp;
    auto run = [&](const std::vector<cplx>& c, auto pair) {
      if (lin_eta)
        kernel_out_uniform(d, N, freq_axis(G), w, c, pair, tmp);
      else
        kernel_sum_uniform(n, d, N, space_axis(G), w, c, pair, tmp);
    };
    if (s.separable()) {
      for (const auto& term : s.terms) {
        const std::vector<cplx> a = eval_factor(term.fx, X, d);
        const std::vector<cplx> b = eval_factor(term.feta, E, d);
        std::vector<cplx> c(n);
        for (std::size_t m = 0; m < n; ++m) c[m] = std::conj(a[m]) * f.samples[m] * vx;
        run(c, One{});
        for (std::size_t k = 0; k < n; ++k) spec[k] += std::conj(b[k]) * tmp[k];
      }
    } else {
      std::vector<cplx> c(n);
      for (std::size_t m = 0; m < n; ++m) c[m] = f.samples[m] * vx;
      run(c, [&](std::size_t k, std::size_t m) { return std::conj(s.eval(&X[m * d], &E[k * d])); });
      spec = tmp;
    }
  } else {
    parallel_for(n, [&](std::size_t k) {
      cplx acc(0.0);
      const double* e = &E[k * d];
      for (std::size_t m = 0; m < n; ++m) {
        if (f.samples[m] == cplx(0.0)) continue;
        const double* x = &X[m * d];
        acc += std::polar(1.0, -kTwoPi * phi.eval(x, e)) * std::conj(s.eval(x, e)) * f.samples[m];
      }
      spec[k] = acc * vx;
    });
  }
  Signal out = inverse_fourier(Signal(G.dual(), std::move(spec)));
  return out;
}

}  // namespace

double max_space_frequency(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, bool type2, double mu,
                           double active_fraction) {
  const GridSpec& G = f.grid;
  const int d = G.dim;
  const std::size_t n = G.size();
  // Active input samples.
  std::vector<cplx> in = type2 ? f.samples : fourier_transform(f).samples;
  double amax = 0.0;
  for (const cplx& v : in) amax = std::max(amax, std::abs(v));
  if (amax == 0.0) return 0.0;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(in[i]) > active_fraction * amax) active.push_back(i);
  // Thin both sides; keep the extreme active indices.
  auto thin = [](std::vector<std::size_t> v, std::size_t cap) {
    if (v.size() <= cap) return v;
    std::vector<std::size_t> out;
    const std::size_t stride = (v.size() + cap - 1) / cap;
    for (std::size_t i = 0; i < v.size(); i += stride) out.push_back(v[i]);
    if (out.back() != v.back()) out.push_back(v.back());
    return out;
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const std::vector<std::size_t> act = thin(active, 2048);
  const std::vector<std::size_t> other = thin(all, 512);
  // Type I: rows are output x (other), columns active eta. Type II: rows active x, columns all eta.
  const std::vector<std::size_t>& xs = type2 ? act : other;
  const std::vector<std::size_t>& es = type2 ? other : act;
  std::vector<double> best(xs.size(), 0.0);
  parallel_for(xs.size(), [&](std::size_t r) {
    std::vector<double> x(d), e(d), g(d);
    G.point(xs[r], x.data());
    for (int a = 0; a < d; ++a) x[a] *= mu;
    double m = 0.0;
    for (std::size_t c : es) {
      G.freq_point(c, e.data());
      if (s.eval(x.data(), e.data()) == cplx(0.0)) continue;
      phi.grad_x(x.data(), e.data(), g.data());
      for (double v : g) m = std::max(m, std::abs(v));
    }
    best[r] = m;
  });
  double m = 0.0;
  for (double v : best) m = std::max(m, v);
  if (!type2) return m * mu;
  // Type II: the x-sum aliases once d_x Phi plus the input band reaches 2 x Nyquist.
  const std::vector<cplx> spec = fourier_transform(f).samples;
  double smax = 0.0, band = 0.0;
  for (const cplx& v : spec) smax = std::max(smax, std::abs(v));
  std::vector<double> e(d);
  for (std::size_t k = 0; k < n; ++k)
    if (std::abs(spec[k]) > active_fraction * smax) {
      G.freq_point(k, e.data());
      for (double v : e) band = std::max(band, std::abs(v));
    }
  return m + band;
}

Signal apply_pseudo_kn(const SymbolSpec& p, const Signal& f) {
  require_dims(nullptr, p, f);
  if (!p.separable()) return apply_pseudo_kn_dense(p, f);
  const GridSpec& G = f.grid;
  const int d = G.dim;
  const Signal F = fourier_transform(f);
  const std::vector<double> X = coords(G, false), E = coords(G, true);
  Signal out(G);
  for (const auto& term : p.terms) {
    Signal Fb = F;
    if (term.feta) {
      const std::vector<cplx> b = eval_factor(term.feta, E, d);
      for (std::size_t k = 0; k < Fb.size(); ++k) Fb.samples[k] *= b[k];
    }
    const Signal u = inverse_fourier(Fb);
    const std::vector<cplx> a = eval_factor(term.fx, X, d);
    for (std::size_t i = 0; i < out.size(); ++i) out.samples[i] += a[i] * u.samples[i];
  }
  return out;
}

Signal apply_pseudo_kn_dense(const SymbolSpec& p, const Signal& f) {
  return fio1_impl(phase::standard(f.grid.dim), p, f, 1.0, ApplyOptions{}, true);
}

Signal apply_pseudo_kn_adjoint(const SymbolSpec& p, const Signal& f) {
  require_dims(nullptr, p, f);
  if (!p.separable()) {
    ApplyOptions off;
    off.alias_guard = false;
    return fio2_impl(phase::standard(f.grid.dim), p, f, off, false);
  }
  const GridSpec& G = f.grid;
  const int d = G.dim;
  const std::vector<double> X = coords(G, false), E = coords(G, true);
  Signal out(G);
  for (const auto& term : p.terms) {
    Signal u = f;
    u.generator.reset();
    const std::vector<cplx> a = eval_factor(term.fx, X, d);
    for (std::size_t i = 0; i < u.size(); ++i) u.samples[i] *= std::conj(a[i]);
    if (term.feta) {
      Signal U = fourier_transform(u);
      const std::vector<cplx> b = eval_factor(term.feta, E, d);
      for (std::size_t k = 0; k < U.size(); ++k) U.samples[k] *= std::conj(b[k]);
      u = inverse_fourier(U);
    }
    for (std::size_t i = 0; i < out.size(); ++i) out.samples[i] += u.samples[i];
  }
  return out;
}

Signal apply_weyl(const SymbolSpec& p, const Signal& f) {
  require_dims(nullptr, p, f);
  if (!p.separable()) return apply_weyl_dense(p, f);
  const GridSpec& G = f.grid;
  const int d = G.dim, N = G.samples_per_axis;
  const std::size_t n = G.size();
  if (d > 3) throw ValidationError("apply_weyl: d <= 3");
  const std::vector<double> E = coords(G, true);
  const double dh = G.freq_cell_volume(), vx = G.cell_volume();
  // Half-grid midpoints -L + q dx / 2, q = 0 .. 2N - 2 per axis.
  const int M = 2 * N - 1;
  const std::size_t nm = ipow(M, d);
  std::vector<double> H(nm * d);
  for (std::size_t q = 0; q < nm; ++q) {
    std::size_t r = q;
    for (int a = d - 1; a >= 0; --a) {
      H[q * d + a] = -G.half_width + 0.5 * G.space_step() * static_cast<double>(r % M);
      r /= M;
    }
  }
  Signal out(G);
  for (const auto& term : p.terms) {
    std::vector<cplx> beta = eval_factor(term.feta, E, d);
    fft_nd(beta.data(), d, N, +1);
    for (std::size_t k = 0; k < n; ++k) beta[k] *= dh;
    const std::vector<cplx> a = eval_factor(term.fx, H, d);
    std::vector<cplx> res(n);
    parallel_for(n, [&](std::size_t m) {
      int im[3], ij[3];
      G.unflatten(m, im);
      cplx acc(0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (f.samples[j] == cplx(0.0)) continue;
        G.unflatten(j, ij);
        std::size_t qm = 0, bd = 0;
        int parity = 0;
        for (int ax = 0; ax < d; ++ax) {
          const int diff = im[ax] - ij[ax];
          parity += diff;
          qm = qm * M + (im[ax] + ij[ax]);
          bd = bd * N + static_cast<std::size_t>(((diff % N) + N) % N);
        }
        const double sign = (parity % 2 == 0) ? 1.0 : -1.0;
        acc += a[qm] * sign * beta[bd] * f.samples[j];
      }
      res[m] = acc * vx;
    });
    for (std::size_t i = 0; i < n; ++i) out.samples[i] += res[i];
  }
  return out;
}

Signal apply_weyl_dense(const SymbolSpec& p, const Signal& f) {
  require_dims(nullptr, p, f);
  const GridSpec& G = f.grid;
  const int d = G.dim;
  const std::size_t n = G.size();
  const std::vector<double> X = coords(G, false), E = coords(G, true);
  const double dh = G.freq_cell_volume(), vx = G.cell_volume();
  Signal out(G);
  parallel_for(n, [&](std::size_t m) {
    std::vector<double> mid(d);
    cplx acc(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (f.samples[j] == cplx(0.0)) continue;
      for (int a = 0; a < d; ++a) mid[a] = 0.5 * (X[m * d + a] + X[j * d + a]);
      cplx inner(0.0);
      for (std::size_t k = 0; k < n; ++k) {
        double ph = 0.0;
        for (int a = 0; a < d; ++a) ph += (X[m * d + a] - X[j * d + a]) * E[k * d + a];
        inner += std::polar(1.0, kTwoPi * ph) * p.eval(mid.data(), &E[k * d]);
      }
      acc += inner * f.samples[j];
    }
    out.samples[m] = acc * dh * vx;
  });
  return out;
}

Signal apply_fio1(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, const ApplyOptions& opt) {
  return fio1_impl(phi, s, f, 1.0, opt, false);
}

Signal apply_fio1_scaled(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, double mu,
                         const ApplyOptions& opt) {
  if (!(mu > 0.0)) throw ValidationError("apply_fio1_scaled: mu must be positive");
  return fio1_impl(phi, s, f, mu, opt, false);
}

Signal apply_fio1_dense(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f) {
  return fio1_impl(phi, s, f, 1.0, ApplyOptions{}, true);
}

Signal apply_fio2(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, const ApplyOptions& opt) {
  return fio2_impl(phi, s, f, opt, false);
}

Signal apply_fio2_dense(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f) {
  return fio2_impl(phi, s, f, ApplyOptions{}, true);
}

const char* to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::PseudoKN: return "pseudo_kn";
    case OperatorKind::PseudoWeyl: return "pseudo_weyl";
    case OperatorKind::FioType1: return "fio_type1";
    case OperatorKind::FioType2: return "fio_type2";
    default: return "composition";
  }
}

namespace {

void validate_phase_on(const PhaseSpec& phi, const GridSpec& g) {
  const PhaseBox box{g.half_width, g.nyquist()};
  const NondegReport nd = nondeg_validate(phi, box);
  if (!nd.pass) {
    std::ostringstream os;
    os << "phase " << phi.name << " is degenerate: delta_min = " << nd.delta_min;
    throw ValidationError(os.str());
  }
  const GrowthReport gr = growth_validate(phi, box);
  if (!gr.pass) {
    std::ostringstream os;
    os << "phase " << phi.name << " violates the growth condition: ratios " << gr.ratio_x << ", " << gr.ratio_eta;
    throw ValidationError(os.str());
  }
}

}  // namespace

OperatorHandle OperatorHandle::pseudo_kn(const SymbolSpec& p, const GridSpec& g) {
  OperatorHandle h;
  h.kind_ = OperatorKind::PseudoKN;
  h.symbol_ = p;
  h.grid_ = g;
  return h;
}

OperatorHandle OperatorHandle::pseudo_weyl(const SymbolSpec& p, const GridSpec& g) {
  OperatorHandle h = pseudo_kn(p, g);
  h.kind_ = OperatorKind::PseudoWeyl;
  return h;
}

OperatorHandle OperatorHandle::fio_type1(const PhaseSpec& phi, const SymbolSpec& s, const GridSpec& g) {
  validate_phase_on(phi, g);
  OperatorHandle h;
  h.kind_ = OperatorKind::FioType1;
  h.symbol_ = s;
  h.phase_ = phi;
  h.grid_ = g;
  return h;
}

OperatorHandle OperatorHandle::fio_type2(const PhaseSpec& phi, const SymbolSpec& s, const GridSpec& g) {
  OperatorHandle h = fio_type1(phi, s, g);
  h.kind_ = OperatorKind::FioType2;
  return h;
}

OperatorHandle OperatorHandle::composition(const SymbolSpec& p, const OperatorHandle& inner) {
  OperatorHandle h;
  h.kind_ = OperatorKind::Composition;
  h.symbol_ = p;
  h.grid_ = inner.grid_;
  h.inner_ = std::make_shared<const OperatorHandle>(inner);
  h.options = inner.options;
  return h;
}

std::string OperatorHandle::id() const {
  std::string s = std::string(to_string(kind_)) + "[" + symbol_.name;
  if (phase_) s += ";" + phase_->name;
  if (inner_) s += ";" + inner_->id();
  return s + "]";
}

Signal OperatorHandle::apply(const Signal& f) const {
  if (!(f.grid == grid_)) throw ValidationError("operator " + id() + ": signal grid differs from operator grid");
  switch (kind_) {
    case OperatorKind::PseudoKN: return apply_pseudo_kn(symbol_, f);
    case OperatorKind::PseudoWeyl: return apply_weyl(symbol_, f);
    case OperatorKind::FioType1: return apply_fio1(*phase_, symbol_, f, options);
    case OperatorKind::FioType2: return apply_fio2(*phase_, symbol_, f, options);
    default: return apply_pseudo_kn(symbol_, inner_->apply(f));
  }
}

Signal OperatorHandle::apply_adjoint(const Signal& f) const {
  if (!(f.grid == grid_)) throw ValidationError("operator " + id() + ": signal grid differs from operator grid");
  switch (kind_) {
    case OperatorKind::PseudoKN: return apply_pseudo_kn_adjoint(symbol_, f);
    case OperatorKind::PseudoWeyl: return apply_weyl(sym::conjugate(symbol_), f);
    case OperatorKind::FioType1: return apply_fio2(*phase_, symbol_, f, options);
    case OperatorKind::FioType2: return apply_fio1(*phase_, symbol_, f, options);
    default: return inner_->apply_adjoint(apply_pseudo_kn_adjoint(symbol_, f));
  }
}

}  // namespace fiolab
