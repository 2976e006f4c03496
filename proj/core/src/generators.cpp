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

#include "fiolab/generators.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "fiolab/diffeo.hpp"
#include "fiolab/error.hpp"

namespace fiolab::gen {

Generator gaussian(int d, double a, std::vector<double> x0, std::vector<double> eta0) {
  if (x0.empty()) x0.assign(d, 0.0);
  if (eta0.empty()) eta0.assign(d, 0.0);
  if (static_cast<int>(x0.size()) != d || static_cast<int>(eta0.size()) != d)
    throw ValidationError("gaussian: center dimension mismatch");
  if (!(a > 0.0)) throw ValidationError("gaussian: width parameter must be positive");
  Generator g;
  std::ostringstream os;
  os << "gaussian(a=" << a;
  for (double v : x0) os << ",x0=" << v;
  for (double v : eta0) os << ",eta0=" << v;
  os << ")";
  g.description = os.str();
  g.eval = [d, a, x0, eta0](const double* t) {
    double r2 = 0.0, ph = 0.0;
    for (int i = 0; i < d; ++i) {
      const double u = t[i] - x0[i];
      r2 += u * u;
      ph += eta0[i] * t[i];
    }
    return std::exp(-kPi * a * r2) * std::polar(1.0, kTwoPi * ph);
  };
  return g;
}

Generator bump(double lo, double hi) {
  if (!(hi > lo)) throw ValidationError("bump: empty support");
  Generator g;
  std::ostringstream os;
  os << "bump(" << lo << "," << hi << ")";
  g.description = os.str();
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  g.eval = [c, h](const double* t) { return cplx(bump_profile((t[0] - c) / h), 0.0); };
  g.support = std::make_pair(lo, hi);
  return g;
}

Generator modulated_bump(double n, double lo, double hi) {
  Generator b = bump(lo, hi);
  Generator g;
  std::ostringstream os;
  os << "fn(n=" << n << "," << b.description << ")";
  g.description = os.str();
  auto be = b.eval;
  g.eval = [be, n](const double* t) { return be(t) * std::polar(1.0, kTwoPi * n * t[0]); };
  g.support = b.support;
  return g;
}

Generator fejer(double b) {
  if (!(b > 0.0)) throw ValidationError("fejer: band must be positive");
  Generator g;
  std::ostringstream os;
  os << "fejer(" << b << ")";
  g.description = os.str();
  g.eval = [b](const double* t) {
    const double u = kPi * b * t[0];
    if (std::abs(u) < 1e-8) return cplx(1.0 - u * u / 3.0, 0.0);
    const double s = std::sin(u) / u;
    return cplx(s * s, 0.0);
  };
  g.band = b;
  return g;
}

Generator tensor(const std::vector<Generator>& factors) {
  if (factors.empty()) throw ValidationError("tensor: no factors");
  if (factors.size() == 1) return factors[0];
  Generator g;
  std::ostringstream os;
  os << "tensor(";
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i].description;
  os << ")";
  g.description = os.str();
  std::vector<std::function<cplx(const double*)>> ev;
  for (const auto& f : factors) ev.push_back(f.eval);
  g.eval = [ev](const double* t) {
    cplx v(1.0);
    for (std::size_t i = 0; i < ev.size(); ++i) v *= ev[i](t + i);
    return v;
  };
  bool same_support = factors[0].support.has_value();
  for (const auto& f : factors) same_support = same_support && f.support && *f.support == *factors[0].support;
  if (same_support) g.support = factors[0].support;
  bool banded = true;
  double band = 0.0;
  for (const auto& f : factors) {
    banded = banded && f.band.has_value();
    if (f.band) band = std::max(band, *f.band);
  }
  if (banded) g.band = band;
  return g;
}

Generator tensor_power(const Generator& f, int d) {
  return tensor(std::vector<Generator>(static_cast<std::size_t>(d), f));
}

Generator compose(const Generator& f, const std::function<double(double)>& phi, const std::string& what, int d) {
  Generator g;
  g.description = "compose(" + f.description + "," + what + ")";
  auto fe = f.eval;
  g.eval = [fe, phi, d](const double* t) {
    double y[3];
    for (int i = 0; i < d; ++i) y[i] = phi(t[i]);
    return fe(y);
  };
  return g;
}

Generator random_schwartz(int d, std::uint64_t seed, int terms, double spread_x, double spread_eta) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-spread_x, spread_x), ue(-spread_eta, spread_eta), ua(0.5, 2.0),
      uph(0.0, kTwoPi), uc(0.2, 1.0);
  std::vector<Generator> parts;
  std::vector<cplx> coef;
  for (int t = 0; t < terms; ++t) {
    std::vector<double> x0(d), e0(d);
    for (int i = 0; i < d; ++i) {
      x0[i] = ux(rng);
      e0[i] = ue(rng);
    }
    const double a = ua(rng);
    parts.push_back(gaussian(d, a, x0, e0));
    coef.push_back(std::polar(uc(rng), uph(rng)));
  }
  Generator g;
  std::ostringstream os;
  os << "random_schwartz(seed=" << seed << ",terms=" << terms << ")";
  g.description = os.str();
  std::vector<std::function<cplx(const double*)>> ev;
  for (const auto& p : parts) ev.push_back(p.eval);
  g.eval = [ev, coef](const double* t) {
    cplx v(0.0);
    for (std::size_t i = 0; i < ev.size(); ++i) v += coef[i] * ev[i](t);
    return v;
  };
  return g;
}

}  // namespace fiolab::gen
