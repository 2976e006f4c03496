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

#include "fiolab/phases.hpp"

#include <sstream>
#include <vector>

#include "fiolab/error.hpp"
#include "fiolab/symbols.hpp"

namespace fiolab::phase {

namespace {

double dot(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int i = 0; i < d; ++i) s += a[i] * b[i];
  return s;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

PhaseSpec standard(int d) {
  PhaseSpec p;
  p.name = "standard";
  p.dim = d;
  p.eval = [d](const double* x, const double* eta) { return dot(x, eta, d); };
  p.grad_x = [d](const double*, const double* eta, double* out) {
    for (int i = 0; i < d; ++i) out[i] = eta[i];
  };
  p.grad_eta = [d](const double* x, const double*, double* out) {
    for (int i = 0; i < d; ++i) out[i] = x[i];
  };
  p.mixed_hessian = [d](const double*, const double*, double* H) {
    for (int i = 0; i < d * d; ++i) H[i] = 0.0;
    for (int i = 0; i < d; ++i) H[i * d + i] = 1.0;
  };
  p.structure = PhaseStructure::LinearInEta;
  p.map = [d](const double* x, double* out) {
    for (int i = 0; i < d; ++i) out[i] = x[i];
  };
  return p;
}

PhaseSpec xphi(int d, const Diffeo& phi) {
  PhaseSpec p;
  p.name = "phase_xphi(" + fmt(phi.c()) + ")";
  p.dim = d;
  p.eval = [d, phi](const double* x, const double* eta) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += phi.phi(x[i]) * eta[i];
    return s;
  };
  p.grad_x = [d, phi](const double* x, const double* eta, double* out) {
    for (int i = 0; i < d; ++i) out[i] = phi.d1(x[i]) * eta[i];
  };
  p.grad_eta = [d, phi](const double* x, const double*, double* out) {
    for (int i = 0; i < d; ++i) out[i] = phi.phi(x[i]);
  };
  p.mixed_hessian = [d, phi](const double* x, const double*, double* H) {
    for (int i = 0; i < d * d; ++i) H[i] = 0.0;
    for (int i = 0; i < d; ++i) H[i * d + i] = phi.d1(x[i]);
  };
  p.structure = PhaseStructure::LinearInEta;
  p.map = [d, phi](const double* x, double* out) {
    for (int i = 0; i < d; ++i) out[i] = phi.phi(x[i]);
  };
  return p;
}

PhaseSpec phix(int d, const Diffeo& phi) {
  PhaseSpec p = transpose(xphi(d, phi));
  p.name = "phase_phix(" + fmt(phi.c()) + ")";
  return p;
}

PhaseSpec zero(int d) {
  PhaseSpec p;
  p.name = "zero";
  p.dim = d;
  p.eval = [](const double*, const double*) { return 0.0; };
  auto z = [d](const double*, const double*, double* out) {
    for (int i = 0; i < d; ++i) out[i] = 0.0;
  };
  p.grad_x = z;
  p.grad_eta = z;
  p.mixed_hessian = [d](const double*, const double*, double* H) {
    for (int i = 0; i < d * d; ++i) H[i] = 0.0;
  };
  p.structure = PhaseStructure::LinearInEta;
  p.map = [d](const double*, double* out) {
    for (int i = 0; i < d; ++i) out[i] = 0.0;
  };
  return p;
}

PhaseSpec degenerate(int d) {
  PhaseSpec p;
  p.name = "degenerate";
  p.dim = d;
  p.eval = [d](const double* x, const double* eta) {
    const double s = dot(x, eta, d);
    return 0.5 * s * s;
  };
  p.grad_x = [d](const double* x, const double* eta, double* out) {
    const double s = dot(x, eta, d);
    for (int i = 0; i < d; ++i) out[i] = s * eta[i];
  };
  p.grad_eta = [d](const double* x, const double* eta, double* out) {
    const double s = dot(x, eta, d);
    for (int i = 0; i < d; ++i) out[i] = s * x[i];
  };
  p.mixed_hessian = [d](const double* x, const double* eta, double* H) {
    const double s = dot(x, eta, d);
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) H[i * d + l] = eta[i] * x[l] + (i == l ? s : 0.0);
  };
  return p;
}

PhaseSpec transpose(const PhaseSpec& q) {
  PhaseSpec p;
  p.name = "transpose(" + q.name + ")";
  p.dim = q.dim;
  const int d = q.dim;
  p.eval = [e = q.eval](const double* x, const double* eta) { return e(eta, x); };
  p.grad_x = [g = q.grad_eta](const double* x, const double* eta, double* out) { g(eta, x, out); };
  p.grad_eta = [g = q.grad_x](const double* x, const double* eta, double* out) { g(eta, x, out); };
  p.mixed_hessian = [h = q.mixed_hessian, d](const double* x, const double* eta, double* H) {
    std::vector<double> T(static_cast<std::size_t>(d) * d);
    h(eta, x, T.data());
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) H[i * d + l] = T[l * d + i];
  };
  p.map = q.map;
  switch (q.structure) {
    case PhaseStructure::LinearInEta: p.structure = PhaseStructure::LinearInX; break;
    case PhaseStructure::LinearInX: p.structure = PhaseStructure::LinearInEta; break;
    default: p.structure = PhaseStructure::General;
  }
  return p;
}

PhaseSpec negate(const PhaseSpec& q) {
  PhaseSpec p = q;
  p.name = "-" + q.name;
  const int d = q.dim;
  p.eval = [e = q.eval](const double* x, const double* eta) { return -e(x, eta); };
  auto neg = [d](const PhaseVecFn& f) {
    return [f, d](const double* x, const double* eta, double* out) {
      f(x, eta, out);
      for (int i = 0; i < d; ++i) out[i] = -out[i];
    };
  };
  p.grad_x = neg(q.grad_x);
  p.grad_eta = neg(q.grad_eta);
  p.mixed_hessian = [h = q.mixed_hessian, d](const double* x, const double* eta, double* H) {
    h(x, eta, H);
    for (int i = 0; i < d * d; ++i) H[i] = -H[i];
  };
  if (q.map)
    p.map = [m = q.map, d](const double* in, double* out) {
      m(in, out);
      for (int i = 0; i < d; ++i) out[i] = -out[i];
    };
  return p;
}

PhaseSpec conjugated(const PhaseSpec& q, double lambda) {
  if (!(lambda > 0.0)) throw ValidationError("conjugated phase: lambda must be positive");
  PhaseSpec p = q;
  p.name = "conjugated(" + q.name + "," + fmt(lambda) + ")";
  const int d = q.dim;
  auto scaled = [d, lambda](const double* x, const double* eta, std::vector<double>& xs, std::vector<double>& es) {
    xs.resize(d);
    es.resize(d);
    for (int i = 0; i < d; ++i) {
      xs[i] = x[i] / lambda;
      es[i] = eta[i] * lambda;
    }
  };
  p.eval = [e = q.eval, scaled](const double* x, const double* eta) {
    std::vector<double> xs, es;
    scaled(x, eta, xs, es);
    return e(xs.data(), es.data());
  };
  p.grad_x = [g = q.grad_x, scaled, d, lambda](const double* x, const double* eta, double* out) {
    std::vector<double> xs, es;
    scaled(x, eta, xs, es);
    g(xs.data(), es.data(), out);
    for (int i = 0; i < d; ++i) out[i] /= lambda;
  };
  p.grad_eta = [g = q.grad_eta, scaled, d, lambda](const double* x, const double* eta, double* out) {
    std::vector<double> xs, es;
    scaled(x, eta, xs, es);
    g(xs.data(), es.data(), out);
    for (int i = 0; i < d; ++i) out[i] *= lambda;
  };
  p.mixed_hessian = [h = q.mixed_hessian, scaled](const double* x, const double* eta, double* H) {
    std::vector<double> xs, es;
    scaled(x, eta, xs, es);
    h(xs.data(), es.data(), H);
  };
  if (q.structure == PhaseStructure::LinearInEta) {
    p.map = [m = q.map, d, lambda](const double* in, double* out) {
      std::vector<double> s(d);
      for (int i = 0; i < d; ++i) s[i] = in[i] / lambda;
      m(s.data(), out);
      for (int i = 0; i < d; ++i) out[i] *= lambda;
    };
  } else if (q.structure == PhaseStructure::LinearInX) {
    p.map = [m = q.map, d, lambda](const double* in, double* out) {
      std::vector<double> s(d);
      for (int i = 0; i < d; ++i) s[i] = in[i] * lambda;
      m(s.data(), out);
      for (int i = 0; i < d; ++i) out[i] /= lambda;
    };
  }
  return p;
}

}  // namespace fiolab::phase

namespace fiolab {

PhaseSpec phase_from_registry(const std::string& text, int d) {
  const RegistryCall c = parse_registry_call(text);
  auto want = [&](std::size_t n) {
    if (c.args.size() != n)
      throw ValidationError("registry: '" + c.name + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (c.name == "standard") return want(0), phase::standard(d);
  if (c.name == "phase_xphi") return want(1), phase::xphi(d, make_diffeo(c.args[0]));
  if (c.name == "phase_phix") return want(1), phase::phix(d, make_diffeo(c.args[0]));
  if (c.name == "zero") return want(0), phase::zero(d);
  if (c.name == "degenerate") return want(0), phase::degenerate(d);
  throw ValidationError("registry: unknown phase '" + c.name + "'");
}

std::vector<std::string> phase_registry_names() {
  return {"standard", "phase_xphi(c)", "phase_phix(c)", "zero", "degenerate"};
}

}  // namespace fiolab
