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

#include "fiolab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fiolab/error.hpp"
#include "fiolab/fft.hpp"
#include "fiolab/parallel.hpp"

namespace fiolab {

double japanese(std::span<const double> z) {
  double s = 1.0;
  for (double v : z) s += v * v;
  return std::sqrt(s);
}

GridSpec GridSpec::make(int d, double L, int N) {
  if (d < 1 || d > 3) throw ValidationError("grid: dimension must be 1, 2 or 3");
  if (!(L > 0.0) || !std::isfinite(L)) throw ValidationError("grid: half width must be positive");
  if (N < 2 || N % 2 != 0) throw ValidationError("grid: samples per axis must be even and >= 2");
  GridSpec g;
  g.dim = d;
  g.half_width = L;
  g.samples_per_axis = N;
  return g;
}

std::size_t GridSpec::size() const {
  std::size_t s = 1;
  for (int i = 0; i < dim; ++i) s *= static_cast<std::size_t>(samples_per_axis);
  return s;
}

double GridSpec::cell_volume() const { return std::pow(space_step(), dim); }
double GridSpec::freq_cell_volume() const { return std::pow(freq_step(), dim); }

void GridSpec::unflatten(std::size_t flat, int* idx) const {
  const auto n = static_cast<std::size_t>(samples_per_axis);
  for (int a = dim - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % n);
    flat /= n;
  }
}

std::size_t GridSpec::flatten(const int* idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim; ++a) flat = flat * samples_per_axis + idx[a];
  return flat;
}

void GridSpec::point(std::size_t flat, double* x) const {
  int idx[3];
  unflatten(flat, idx);
  for (int a = 0; a < dim; ++a) x[a] = node(idx[a]);
}

void GridSpec::freq_point(std::size_t flat, double* eta) const {
  int idx[3];
  unflatten(flat, idx);
  for (int a = 0; a < dim; ++a) eta[a] = freq(idx[a]);
}

GridSpec GridSpec::dual() const {
  return make(dim, samples_per_axis / (4.0 * half_width), samples_per_axis);
}

bool GridSpec::self_dual() const {
  const double n4 = 4.0 * half_width * half_width;
  return std::abs(n4 - samples_per_axis) <= 1e-12 * samples_per_axis;
}

std::string GridSpec::describe() const {
  std::ostringstream os;
  os << "d=" << dim << " L=" << half_width << " N=" << samples_per_axis;
  return os.str();
}

double WeightSpec::operator()(std::span<const double> x, std::span<const double> eta) const {
  double v = 1.0;
  if (s2 != 0.0) v *= std::pow(japanese(x), s2);
  if (s1 != 0.0) v *= std::pow(japanese(eta), s1);
  return v;
}

Signal::Signal(const GridSpec& g, std::vector<cplx> s) : grid(g), samples(std::move(s)) {
  if (samples.size() != grid.size()) throw ValidationError("signal: sample count does not match grid");
}

Signal Signal::from_generator(const GridSpec& g, Generator gen) {
  Signal f(g);
  parallel_for(g.size(), [&](std::size_t i) {
    double x[3];
    g.point(i, x);
    f.samples[i] = gen.eval(x);
  });
  f.generator = std::move(gen);
  return f;
}

void require_same_grid(const Signal& a, const Signal& b, const char* where) {
  if (!(a.grid == b.grid)) throw ValidationError(std::string(where) + ": signals live on different grids");
}

namespace {

// (-1)^{sum of indices} for a flat index.
double checker_sign(const GridSpec& g, std::size_t flat, int offset) {
  int idx[3];
  g.unflatten(flat, idx);
  int s = 0;
  for (int a = 0; a < g.dim; ++a) s += idx[a] + offset;
  return (s % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

Signal fourier_transform(const Signal& f) {
  const GridSpec& g = f.grid;
  const int half = g.samples_per_axis / 2;
  Signal out(g.dual());
  std::vector<cplx>& v = out.samples;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.samples[i] * checker_sign(g, i, 0);
  fft_nd(v.data(), g.dim, g.samples_per_axis, -1);
  const double scale = g.cell_volume();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= scale * checker_sign(g, i, -half);
  return out;
}

Signal inverse_fourier(const Signal& F) {
  const GridSpec& gd = F.grid;
  const int half = gd.samples_per_axis / 2;
  // F lives on the space grid of the dual side; its own freq step is the
  // space step of the target grid's Fourier side.
  const GridSpec target = gd.dual();
  Signal out(target);
  std::vector<cplx>& v = out.samples;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.samples[i] * checker_sign(gd, i, -half);
  fft_nd(v.data(), gd.dim, gd.samples_per_axis, +1);
  const double scale = target.freq_cell_volume();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= scale * checker_sign(target, i, 0);
  return out;
}

namespace {

std::vector<int> grid_shift(const GridSpec& g, std::span<const double> x0) {
  if (static_cast<int>(x0.size()) != g.dim) throw ValidationError("translate: shift dimension mismatch");
  std::vector<int> s(g.dim);
  const double dx = g.space_step();
  for (int a = 0; a < g.dim; ++a) {
    const double r = x0[a] / dx;
    const double ri = std::round(r);
    if (std::abs(r - ri) > 1e-9 * std::max(1.0, std::abs(r)))
      throw ValidationError("translate: shift is not a multiple of the grid step");
    s[a] = static_cast<int>(ri);
  }
  return s;
}

}  // namespace

Signal translate(const Signal& f, std::span<const double> x0) {
  const GridSpec& g = f.grid;
  std::vector<int> s = grid_shift(g, x0);
  if (f.generator) {
    const Generator base = *f.generator;
    std::vector<double> shift(x0.begin(), x0.end());
    Generator gen;
    std::ostringstream os;
    os << "translate(" << base.description;
    for (double v : shift) os << "," << v;
    os << ")";
    gen.description = os.str();
    const int d = g.dim;
    gen.eval = [base, shift, d](const double* x) {
      double y[3];
      for (int a = 0; a < d; ++a) y[a] = x[a] - shift[a];
      return base.eval(y);
    };
    if (base.support && d == 1) gen.support = std::make_pair(base.support->first + shift[0], base.support->second + shift[0]);
    gen.band = base.band;
    return Signal::from_generator(g, std::move(gen));
  }
  Signal out(g);
  const int N = g.samples_per_axis;
  for (std::size_t i = 0; i < out.size(); ++i) {
    int idx[3];
    g.unflatten(i, idx);
    bool inside = true;
    for (int a = 0; a < g.dim; ++a) {
      idx[a] -= s[a];
      if (idx[a] < 0 || idx[a] >= N) inside = false;
    }
    if (inside) out.samples[i] = f.samples[g.flatten(idx)];
  }
  return out;
}

Signal translate(const Signal& f, double x0) {
  std::vector<double> v(f.grid.dim, 0.0);
  v[0] = x0;
  if (f.grid.dim != 1) throw ValidationError("translate: scalar shift requires d=1");
  return translate(f, std::span<const double>(v));
}

Signal modulate(const Signal& f, std::span<const double> eta0) {
  const GridSpec& g = f.grid;
  if (static_cast<int>(eta0.size()) != g.dim) throw ValidationError("modulate: frequency dimension mismatch");
  std::vector<double> w(eta0.begin(), eta0.end());
  Signal out(g);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double x[3];
    g.point(i, x);
    double ph = 0.0;
    for (int a = 0; a < g.dim; ++a) ph += w[a] * x[a];
    out.samples[i] = f.samples[i] * std::polar(1.0, kTwoPi * ph);
  }
  if (f.generator) {
    const Generator base = *f.generator;
    Generator gen;
    std::ostringstream os;
    os << "modulate(" << base.description;
    for (double v : w) os << "," << v;
    os << ")";
    gen.description = os.str();
    const int d = g.dim;
    gen.eval = [base, w, d](const double* x) {
      double ph = 0.0;
      for (int a = 0; a < d; ++a) ph += w[a] * x[a];
      return base.eval(x) * std::polar(1.0, kTwoPi * ph);
    };
    gen.support = base.support;
    out.generator = std::move(gen);
  }
  return out;
}

Signal modulate(const Signal& f, double eta0) {
  if (f.grid.dim != 1) throw ValidationError("modulate: scalar frequency requires d=1");
  return modulate(f, std::span<const double>(&eta0, 1));
}

double dilation_lost_mass(const Signal& f, double lambda) {
  if (lambda >= 1.0) {
    // Compression: f^ mass beyond nyquist / lambda is lost.
    Signal F = fourier_transform(f);
    const double cut = f.grid.nyquist() / lambda;
    double tot = 0.0, out = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) {
      double eta[3];
      F.grid.point(i, eta);
      double m = 0.0;
      for (int a = 0; a < f.grid.dim; ++a) m = std::max(m, std::abs(eta[a]));
      const double w = std::norm(F.samples[i]);
      tot += w;
      if (m > cut) out += w;
    }
    return tot > 0.0 ? out / tot : 0.0;
  }
  const double cut = lambda * f.grid.half_width;
  double tot = 0.0, out = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double x[3];
    f.grid.point(i, x);
    double m = 0.0;
    for (int a = 0; a < f.grid.dim; ++a) m = std::max(m, std::abs(x[a]));
    const double w = std::norm(f.samples[i]);
    tot += w;
    if (m > cut) out += w;
  }
  return tot > 0.0 ? out / tot : 0.0;
}

namespace {

// Band-limited evaluation of f at lambda * x_m along one axis.
void resample_axis(std::vector<cplx>& data, const GridSpec& g, int axis, double lambda) {
  const int N = g.samples_per_axis;
  const double deta = g.freq_step();
  std::vector<cplx> E(static_cast<std::size_t>(N) * N);
  // f(y) = deta * sum_k F_k e^{2 pi i y eta_k}, F_k = dx sum_m f_m e^{-2 pi i x_m eta_k}
  // so f(lambda x_j) = sum_m K(j, m) f_m with K built from both sums.
  std::vector<cplx> F(static_cast<std::size_t>(N) * N);
  const double dx = g.space_step();
  for (int k = 0; k < N; ++k)
    for (int m = 0; m < N; ++m) F[static_cast<std::size_t>(k) * N + m] = dx * std::polar(1.0, -kTwoPi * g.node(m) * g.freq(k));
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t j) {
    const double y = lambda * g.node(static_cast<int>(j));
    std::vector<cplx> row(N, cplx(0.0));
    for (int k = 0; k < N; ++k) {
      const cplx e = deta * std::polar(1.0, kTwoPi * y * g.freq(k));
      const cplx* Fk = &F[static_cast<std::size_t>(k) * N];
      for (int m = 0; m < N; ++m) row[m] += e * Fk[m];
    }
    std::copy(row.begin(), row.end(), E.begin() + static_cast<std::ptrdiff_t>(j * N));
  });
  std::size_t stride = 1;
  for (int a = g.dim - 1; a > axis; --a) stride *= N;
  const std::size_t total = data.size();
  const std::size_t block = stride * N;
  std::vector<cplx> out(total);
  for (std::size_t base = 0; base < total; base += block) {
    for (std::size_t s = 0; s < stride; ++s) {
      for (int j = 0; j < N; ++j) {
        cplx acc(0.0);
        const cplx* Ej = &E[static_cast<std::size_t>(j) * N];
        for (int m = 0; m < N; ++m) acc += Ej[m] * data[base + s + static_cast<std::size_t>(m) * stride];
        out[base + s + static_cast<std::size_t>(j) * stride] = acc;
      }
    }
  }
  data.swap(out);
}

}  // namespace

Signal dilate(const Signal& f, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ValidationError("dilate: lambda must be positive");
  const GridSpec& g = f.grid;
  if (lambda == 1.0) return f;
  const double lost = dilation_lost_mass(f, lambda);
  if (lost > 1e-8) {
    std::ostringstream os;
    os << "dilate: truncation aliasing, lost mass fraction " << lost << " at lambda=" << lambda;
    throw NumericalError(os.str());
  }
  if (f.generator) {
    const Generator base = *f.generator;
    Generator gen;
    std::ostringstream os;
    os << "dilate(" << base.description << "," << lambda << ")";
    gen.description = os.str();
    const int d = g.dim;
    gen.eval = [base, lambda, d](const double* x) {
      double y[3];
      for (int a = 0; a < d; ++a) y[a] = lambda * x[a];
      return base.eval(y);
    };
    if (base.support) gen.support = std::make_pair(base.support->first / lambda, base.support->second / lambda);
    if (base.band) gen.band = *base.band * lambda;
    return Signal::from_generator(g, std::move(gen));
  }
  const double li = std::round(lambda);
  Signal out(g);
  if (std::abs(lambda - li) < 1e-12) {
    const int N = g.samples_per_axis;
    const int L = static_cast<int>(li);
    const int off = (L - 1) * N / 2;
    for (std::size_t i = 0; i < out.size(); ++i) {
      int idx[3];
      g.unflatten(i, idx);
      bool inside = true;
      for (int a = 0; a < g.dim; ++a) {
        idx[a] = L * idx[a] - off;  // node of lambda * x_m
        if (idx[a] < 0 || idx[a] >= N) inside = false;
      }
      if (inside) out.samples[i] = f.samples[g.flatten(idx)];
    }
    return out;
  }
  out.samples = f.samples;
  for (int a = 0; a < g.dim; ++a) resample_axis(out.samples, g, a, lambda);
  return out;
}

double lp_norm(const Signal& f, double p) {
  if (!(p >= 1.0)) throw ValidationError("lp_norm: p must be in [1, inf]");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : f.samples) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  if (p == 2.0) {
    for (const cplx& v : f.samples) s += std::norm(v);
    return std::sqrt(s * f.grid.cell_volume());
  }
  for (const cplx& v : f.samples) s += std::pow(std::abs(v), p);
  return std::pow(s * f.grid.cell_volume(), 1.0 / p);
}

cplx inner_product(const Signal& f, const Signal& g) {
  require_same_grid(f, g, "inner_product");
  cplx s(0.0);
  for (std::size_t i = 0; i < f.size(); ++i) s += f.samples[i] * std::conj(g.samples[i]);
  return s * f.grid.cell_volume();
}

Signal weighted_multiply(const Signal& f, const std::function<cplx(const double*)>& mu) {
  Signal out(f.grid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    double x[3];
    f.grid.point(i, x);
    out.samples[i] = mu(x) * f.samples[i];
  }
  return out;
}

Signal linear_combination(cplx a, const Signal& f, cplx b, const Signal& g) {
  require_same_grid(f, g, "linear_combination");
  Signal out(f.grid);
  for (std::size_t i = 0; i < f.size(); ++i) out.samples[i] = a * f.samples[i] + b * g.samples[i];
  return out;
}

double relative_l2_error(const Signal& a, const Signal& b) {
  require_same_grid(a, b, "relative_l2_error");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a.samples[i] - b.samples[i]);
    den += std::norm(b.samples[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace fiolab
