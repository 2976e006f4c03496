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

#include "fiolab/stft.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fiolab/error.hpp"
#include "fiolab/fft.hpp"
#include "fiolab/parallel.hpp"

namespace fiolab {

namespace {

Signal make_1d(const GridSpec& g, const std::function<double(double)>& fn) {
  GridSpec g1 = GridSpec::make(1, g.half_width, g.samples_per_axis);
  Signal s(g1);
  for (int m = 0; m < g1.samples_per_axis; ++m) s.samples[m] = fn(g1.node(m));
  return s;
}

Signal tensor_signal(const GridSpec& g, const std::vector<Signal>& factors) {
  Signal s(g);
  for (std::size_t i = 0; i < s.size(); ++i) {
    int idx[3];
    g.unflatten(i, idx);
    cplx v(1.0);
    for (int a = 0; a < g.dim; ++a) v *= factors[a].samples[idx[a]];
    s.samples[i] = v;
  }
  return s;
}

}  // namespace

Window Window::gaussian(const GridSpec& g, double a) {
  Signal f1 = make_1d(g, [a](double x) { return std::exp(-kPi * a * x * x); });
  const double n1 = lp_norm(f1, 2.0);
  for (auto& v : f1.samples) v /= n1;
  std::vector<Signal> factors(g.dim, f1);
  std::ostringstream os;
  os << "gaussian(" << a << ")";
  return separable(factors, os.str());
}

Window Window::from_signal(const Signal& s, const std::string& id, bool normalize) {
  Window w;
  w.signal = s;
  w.signal.generator.reset();
  w.id = id;
  double n = lp_norm(s, 2.0);
  if (!(n > 0.0)) throw ValidationError("window: zero window");
  if (normalize) {
    for (auto& v : w.signal.samples) v /= n;
    n = lp_norm(w.signal, 2.0);
  }
  w.l2_norm = n;
  if (s.grid.dim == 1) w.factors = {w.signal};
  return w;
}

Window Window::separable(const std::vector<Signal>& factors, const std::string& id) {
  if (factors.empty()) throw ValidationError("window: no factors");
  const GridSpec& f0 = factors[0].grid;
  GridSpec g = GridSpec::make(static_cast<int>(factors.size()), f0.half_width, f0.samples_per_axis);
  for (const auto& f : factors)
    if (!(f.grid == f0) || f.grid.dim != 1) throw ValidationError("window: factors must share a 1-D grid");
  Window w;
  w.signal = factors.size() == 1 ? factors[0] : tensor_signal(g, factors);
  w.signal.generator.reset();
  w.factors = factors;
  for (auto& f : w.factors) f.generator.reset();
  w.id = id;
  w.l2_norm = lp_norm(w.signal, 2.0);
  return w;
}

PhaseSampling PhaseSampling::isotropic(const GridSpec& g, double h) {
  const double dx = g.space_step(), de = g.freq_step();
  PhaseSampling s;
  s.x_stride = std::max(1, static_cast<int>(std::lround(h / dx)));
  s.eta_stride = std::max(1, static_cast<int>(std::lround(h / de)));
  if (std::abs(s.x_stride * dx - h) > 1e-9 * h || std::abs(s.eta_stride * de - h) > 1e-9 * h) {
    std::ostringstream os;
    os << "phase sampling: spacing " << h << " is not a multiple of dx=" << dx << " and deta=" << de;
    throw ValidationError(os.str());
  }
  return s;
}

int sampled_offset(int N, int s) { return (N / 2) % s; }
int sampled_count(int N, int s) { return (N - 1 - sampled_offset(N, s)) / s + 1; }

std::size_t StftData::x_count() const {
  std::size_t c = 1;
  for (int a = 0; a < grid.dim; ++a) c *= static_cast<std::size_t>(nx);
  return c;
}

std::size_t StftData::eta_count() const {
  std::size_t c = 1;
  for (int a = 0; a < grid.dim; ++a) c *= static_cast<std::size_t>(neta);
  return c;
}

int StftData::x_index(int i) const {
  return sampled_offset(grid.samples_per_axis, sampling.x_stride) + i * sampling.x_stride;
}

int StftData::eta_index(int j) const {
  return sampled_offset(grid.samples_per_axis, sampling.eta_stride) + j * sampling.eta_stride;
}

namespace {

struct RowPlan {
  GridSpec grid;
  int d, N, xs, es, x_off, e_off, nx, ne;
  std::size_t x_total, e_total;
};

RowPlan make_plan(const GridSpec& g, PhaseSampling s) {
  if (s.x_stride < 1 || s.eta_stride < 1) throw ValidationError("stft: strides must be positive");
  RowPlan p;
  p.grid = g;
  p.d = g.dim;
  p.N = g.samples_per_axis;
  p.xs = s.x_stride;
  p.es = s.eta_stride;
  p.x_off = sampled_offset(p.N, p.xs);
  p.e_off = sampled_offset(p.N, p.es);
  p.nx = sampled_count(p.N, p.xs);
  p.ne = sampled_count(p.N, p.es);
  p.x_total = p.e_total = 1;
  for (int a = 0; a < p.d; ++a) {
    p.x_total *= static_cast<std::size_t>(p.nx);
    p.e_total *= static_cast<std::size_t>(p.ne);
  }
  return p;
}

void x_node_indices(const RowPlan& p, std::size_t xi, int* m) {
  for (int a = p.d - 1; a >= 0; --a) {
    m[a] = p.x_off + static_cast<int>(xi % p.nx) * p.xs;
    xi /= p.nx;
  }
}

// Index range [lo, hi] per axis where the window has nonzero samples.
struct WindowSupport {
  int lo = 0, hi = -1;
};

WindowSupport window_support(const Window& g) {
  const GridSpec& G = g.signal.grid;
  WindowSupport s;
  s.lo = G.samples_per_axis;
  s.hi = -1;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (g.signal.samples[i] == cplx(0.0)) continue;
    int idx[3];
    G.unflatten(i, idx);
    for (int a = 0; a < G.dim; ++a) {
      s.lo = std::min(s.lo, idx[a]);
      s.hi = std::max(s.hi, idx[a]);
    }
  }
  return s;
}

// Computes one STFT row into out (e_total values). Rows whose windowed
// product has L2 norm <= skip are returned as zeros.
bool compute_row(const RowPlan& p, const Signal& f, const Window& g, const WindowSupport& ws, double skip,
                 std::size_t xi, std::vector<cplx>& buf, cplx* out) {
  const GridSpec& G = p.grid;
  const int N = p.N, half = N / 2;
  int m[3];
  x_node_indices(p, xi, m);
  const std::size_t total = G.size();
  buf.assign(total, cplx(0.0));
  double mass = 0.0;
  if (p.d == 1) {
    const int lo = std::max(0, m[0] - half + ws.lo), hi = std::min(N - 1, m[0] - half + ws.hi);
    for (int t = lo; t <= hi; ++t) {
      const cplx v = f.samples[t] * std::conj(g.signal.samples[t - m[0] + half]);
      mass += std::norm(v);
      buf[t] = (t % 2 == 0) ? v : -v;
    }
  } else {
    for (std::size_t t = 0; t < total; ++t) {
      int idx[3];
      G.unflatten(t, idx);
      int widx[3];
      bool inside = true;
      int parity = 0;
      for (int a = 0; a < p.d; ++a) {
        widx[a] = idx[a] - m[a] + half;
        if (widx[a] < ws.lo || widx[a] > ws.hi) inside = false;
        parity += idx[a];
      }
      if (!inside) continue;
      const cplx v = f.samples[t] * std::conj(g.signal.samples[G.flatten(widx)]);
      mass += std::norm(v);
      buf[t] = (parity % 2 == 0) ? v : -v;
    }
  }
  if (!(mass > 0.0) || std::sqrt(mass * G.cell_volume()) <= skip) {
    std::fill(out, out + p.e_total, cplx(0.0));
    return false;
  }
  const double scale = G.cell_volume();
  if (p.d == 1 && p.es > 1 && N % p.es == 0) {
    // Only every es-th frequency is needed: fold to length N / es first.
    const int M = N / p.es;
    std::vector<cplx> fold(M, cplx(0.0));
    for (int t = 0; t < N; ++t) {
      if (buf[t] == cplx(0.0)) continue;
      const cplx tw = p.e_off == 0 ? cplx(1.0) : std::polar(1.0, -kTwoPi * static_cast<double>(t) * p.e_off / N);
      fold[t % M] += buf[t] * tw;
    }
    fft_1d(fold.data(), M, -1);
    for (std::size_t j = 0; j < p.e_total; ++j) {
      const int k = p.e_off + static_cast<int>(j) * p.es;
      const cplx v = fold[j] * scale;
      out[j] = ((k - half) % 2 == 0) ? v : -v;
    }
    return true;
  }
  fft_nd(buf.data(), p.d, N, -1);
  if (p.d == 1) {
    for (std::size_t j = 0; j < p.e_total; ++j) {
      const int k = p.e_off + static_cast<int>(j) * p.es;
      const cplx v = buf[k] * scale;
      out[j] = ((k - half) % 2 == 0) ? v : -v;
    }
    return true;
  }
  for (std::size_t j = 0; j < p.e_total; ++j) {
    std::size_t r = j;
    int k[3];
    for (int a = p.d - 1; a >= 0; --a) {
      k[a] = p.e_off + static_cast<int>(r % p.ne) * p.es;
      r /= p.ne;
    }
    int parity = 0;
    for (int a = 0; a < p.d; ++a) parity += k[a] - half;
    const cplx v = buf[G.flatten(k)] * scale;
    out[j] = ((parity % 2 + 2) % 2 == 0) ? v : -v;
  }
  return true;
}

}  // namespace

void stft_rows(const Signal& f, const Window& g, PhaseSampling s,
               const std::function<void(std::size_t, const double*, const cplx*)>& sink, double skip_rel) {
  require_same_grid(f, g.signal, "stft");
  const RowPlan p = make_plan(f.grid, s);
  const WindowSupport ws = window_support(g);
  const double skip = skip_rel > 0.0 ? skip_rel * lp_norm(f, 2.0) * g.l2_norm : -1.0;
  const std::size_t batch = 32;
  std::vector<cplx> rows(batch * p.e_total);
  for (std::size_t start = 0; start < p.x_total; start += batch) {
    const std::size_t cnt = std::min(batch, p.x_total - start);
    parallel_for(cnt, [&](std::size_t r) {
      std::vector<cplx> buf;
      compute_row(p, f, g, ws, skip, start + r, buf, rows.data() + r * p.e_total);
    });
    for (std::size_t r = 0; r < cnt; ++r) {
      int m[3];
      x_node_indices(p, start + r, m);
      double x[3];
      for (int a = 0; a < p.d; ++a) x[a] = f.grid.node(m[a]);
      sink(start + r, x, rows.data() + r * p.e_total);
    }
  }
}

StftData stft(const Signal& f, const Window& g, PhaseSampling s) {
  const RowPlan p = make_plan(f.grid, s);
  StftData out;
  out.grid = f.grid;
  out.sampling = s;
  out.nx = p.nx;
  out.neta = p.ne;
  out.window_id = g.id;
  out.values.assign(p.x_total * p.e_total, cplx(0.0));
  stft_rows(f, g, s, [&](std::size_t xi, const double*, const cplx* row) {
    std::copy(row, row + p.e_total, out.values.begin() + static_cast<std::ptrdiff_t>(xi * p.e_total));
  }, 0.0);
  return out;
}

double window_boundary_mass(const Window& g) {
  const GridSpec& G = g.signal.grid;
  double tot = 0.0, edge = 0.0;
  for (std::size_t i = 0; i < G.size(); ++i) {
    double x[3];
    G.point(i, x);
    bool near = false;
    for (int a = 0; a < G.dim; ++a) near = near || std::abs(x[a]) > G.half_width - 1.0;
    const double w = std::norm(g.signal.samples[i]);
    tot += w;
    if (near) edge += w;
  }
  return tot > 0.0 ? edge / tot : 0.0;
}

Signal istft(const StftData& F, const Window& g, double* boundary_mass) {
  if (F.sampling.eta_stride != 1) throw ValidationError("istft: needs the full frequency axis (eta stride 1)");
  if (!(F.grid == g.signal.grid)) throw ValidationError("istft: window grid mismatch");
  if (std::abs(g.l2_norm - 1.0) > 1e-10) throw ValidationError("istft: window must have unit L2 norm");
  if (boundary_mass) *boundary_mass = window_boundary_mass(g);
  const RowPlan p = make_plan(F.grid, F.sampling);
  const GridSpec& G = F.grid;
  const int N = p.N, half = N / 2;
  const std::size_t total = G.size();
  const double xcell = std::pow(p.xs * G.space_step(), p.d);
  const double escale = G.freq_cell_volume();
  Signal out(G);
  const std::size_t batch = 16;
  std::vector<std::vector<cplx>> parts(batch);
  for (std::size_t start = 0; start < p.x_total; start += batch) {
    const std::size_t cnt = std::min(batch, p.x_total - start);
    parallel_for(cnt, [&](std::size_t r) {
      const std::size_t xi = start + r;
      std::vector<cplx>& buf = parts[r];
      buf.assign(total, cplx(0.0));
      const cplx* row = F.values.data() + xi * p.e_total;
      bool any = false;
      for (std::size_t k = 0; k < total; ++k) {
        int idx[3];
        G.unflatten(k, idx);
        int parity = 0;
        for (int a = 0; a < p.d; ++a) parity += idx[a] - half;
        const cplx v = row[k];
        if (v != cplx(0.0)) any = true;
        buf[k] = ((parity % 2 + 2) % 2 == 0) ? v : -v;
      }
      if (!any) {
        buf.clear();
        return;
      }
      fft_nd(buf.data(), p.d, N, +1);
      int m[3];
      x_node_indices(p, xi, m);
      for (std::size_t t = 0; t < total; ++t) {
        int idx[3];
        G.unflatten(t, idx);
        int parity = 0;
        int widx[3];
        bool inside = true;
        for (int a = 0; a < p.d; ++a) {
          parity += idx[a];
          widx[a] = idx[a] - m[a] + half;
          if (widx[a] < 0 || widx[a] >= N) inside = false;
        }
        if (!inside) {
          buf[t] = 0.0;
          continue;
        }
        const cplx h = (parity % 2 == 0 ? buf[t] : -buf[t]) * escale;
        buf[t] = h * g.signal.samples[G.flatten(widx)] * xcell;
      }
    });
    for (std::size_t r = 0; r < cnt; ++r) {
      if (parts[r].empty()) continue;
      for (std::size_t t = 0; t < total; ++t) out.samples[t] += parts[r][t];
    }
  }
  return out;
}

}  // namespace fiolab
