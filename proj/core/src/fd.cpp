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

#include "fiolab/fd.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "fiolab/error.hpp"

namespace fiolab {

std::vector<double> fornberg_weights(double x0, const std::vector<double>& nodes, int m) {
  const int n = static_cast<int>(nodes.size()) - 1;
  if (m < 0 || n < m) throw ValidationError("fornberg_weights: not enough nodes for the derivative order");
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0, c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = c[i][m];
  return w;
}

int centered_radius(int m) { return m == 0 ? 0 : (m + 1) / 2 + 1; }

const std::vector<double>& centered_stencil(int m) {
  static std::array<std::vector<double>, 9> cache;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int k = 0; k < 9; ++k) {
      const int r = centered_radius(k);
      std::vector<double> nodes;
      for (int i = -r; i <= r; ++i) nodes.push_back(i);
      cache[k] = fornberg_weights(0.0, nodes, k);
    }
  });
  if (m < 0 || m > 8) throw ValidationError("centered_stencil: derivative order must lie in [0, 8]");
  return cache[m];
}

cplx mixed_partial(const std::function<cplx(const double*)>& f, const std::vector<double>& z,
                   const std::vector<int>& order, const std::vector<double>& h) {
  const std::size_t n = z.size();
  if (order.size() != n || h.size() != n) throw ValidationError("mixed_partial: dimension mismatch");
  std::vector<int> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (order[i] > 0) vars.push_back(static_cast<int>(i));
  if (vars.empty()) return f(z.data());
  std::vector<int> off(vars.size());
  std::vector<int> rad(vars.size());
  double scale = 1.0;
  for (std::size_t a = 0; a < vars.size(); ++a) {
    rad[a] = centered_radius(order[vars[a]]);
    off[a] = -rad[a];
    scale /= std::pow(h[vars[a]], order[vars[a]]);
  }
  std::vector<double> pt = z;
  cplx acc(0.0);
  while (true) {
    double w = 1.0;
    for (std::size_t a = 0; a < vars.size(); ++a) {
      const int v = vars[a];
      w *= centered_stencil(order[v])[off[a] + rad[a]];
      pt[v] = z[v] + off[a] * h[v];
    }
    if (w != 0.0) acc += w * f(pt.data());
    std::size_t a = 0;
    for (; a < vars.size(); ++a) {
      if (++off[a] <= rad[a]) break;
      off[a] = -rad[a];
    }
    if (a == vars.size()) break;
  }
  return acc * scale;
}

}  // namespace fiolab
