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

#ifndef FIOLAB_GRID_HPP_
#define FIOLAB_GRID_HPP_

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fiolab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// <z> = (1 + z^2)^{1/2}
inline double japanese(double z) { return std::sqrt(1.0 + z * z); }
double japanese(std::span<const double> z);

// Uniform grid on [-L, L)^d with N samples per axis.
struct GridSpec {
  int dim = 1;
  double half_width = 16.0;
  int samples_per_axis = 1024;

  static GridSpec make(int d, double L, int N);

  double space_step() const { return 2.0 * half_width / samples_per_axis; }
  double freq_step() const { return 1.0 / (2.0 * half_width); }
  std::size_t size() const;
  double cell_volume() const;       // dx^d
  double freq_cell_volume() const;  // deta^d

  // Node x_m = -L + m dx, and frequency of storage index k: (k - N/2) deta.
  double node(int m) const { return -half_width + m * space_step(); }
  double freq(int k) const { return (k - samples_per_axis / 2) * freq_step(); }
  double nyquist() const { return 0.5 / space_step(); }

  void unflatten(std::size_t flat, int* idx) const;
  std::size_t flatten(const int* idx) const;
  void point(std::size_t flat, double* x) const;
  void freq_point(std::size_t flat, double* eta) const;

  // Space grid of the Fourier side: L* = N / (4L).
  GridSpec dual() const;
  bool self_dual() const;

  bool operator==(const GridSpec& o) const {
    return dim == o.dim && half_width == o.half_width &&
           samples_per_axis == o.samples_per_axis;
  }
  std::string describe() const;
};

// Analytic rule behind a signal. Support and band are optional facts used
// by norm-equivalence checks.
struct Generator {
  std::string description;
  std::function<cplx(const double*)> eval;
  std::optional<std::pair<double, double>> support;  // per axis interval
  std::optional<double> band;                        // |eta|_inf bound of f^
};

struct Signal {
  GridSpec grid;
  std::vector<cplx> samples;
  std::optional<Generator> generator;

  Signal() = default;
  explicit Signal(const GridSpec& g) : grid(g), samples(g.size()) {}
  Signal(const GridSpec& g, std::vector<cplx> s);

  static Signal from_generator(const GridSpec& g, Generator gen);

  std::size_t size() const { return samples.size(); }
  cplx& operator[](std::size_t i) { return samples[i]; }
  const cplx& operator[](std::size_t i) const { return samples[i]; }
};

// v_{s1,s2}(x, eta) = <x>^{s2} <eta>^{s1}
struct WeightSpec {
  double s1 = 0.0;
  double s2 = 0.0;
  double operator()(std::span<const double> x, std::span<const double> eta) const;
  bool trivial() const { return s1 == 0.0 && s2 == 0.0; }
};

Signal fourier_transform(const Signal& f);
Signal inverse_fourier(const Signal& F);

// Grid-exact translation with zero fill; generator-backed signals are
// re-evaluated.
Signal translate(const Signal& f, std::span<const double> x0);
Signal translate(const Signal& f, double x0);
Signal modulate(const Signal& f, std::span<const double> eta0);
Signal modulate(const Signal& f, double eta0);

// U_lambda f(x) = f(lambda x).
Signal dilate(const Signal& f, double lambda);
// Fraction of L2 mass that U_lambda cannot represent on the box.
double dilation_lost_mass(const Signal& f, double lambda);

double lp_norm(const Signal& f, double p);
cplx inner_product(const Signal& f, const Signal& g);
Signal weighted_multiply(const Signal& f, const std::function<cplx(const double*)>& mu);

// Small helpers shared by tests and experiments.
Signal linear_combination(cplx a, const Signal& f, cplx b, const Signal& g);
double relative_l2_error(const Signal& a, const Signal& b);
void require_same_grid(const Signal& a, const Signal& b, const char* where);

}  // namespace fiolab

#endif  // FIOLAB_GRID_HPP_
