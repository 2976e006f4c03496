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

#include "fiolab/symbols.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "fiolab/error.hpp"
#include "fiolab/littlewood_paley.hpp"

namespace fiolab {

bool SymbolSpec::x_independent() const {
  if (terms.empty()) return false;
  for (const auto& t : terms)
    if (t.fx) return false;
  return true;
}

bool SymbolSpec::eta_independent() const {
  if (terms.empty()) return false;
  for (const auto& t : terms)
    if (t.feta) return false;
  return true;
}

SymbolSpec separable_symbol(std::string name, int d, double m1, double m2, std::vector<SeparableTerm> terms) {
  SymbolSpec s;
  s.name = std::move(name);
  s.dim = d;
  s.m1 = m1;
  s.m2 = m2;
  s.terms = std::move(terms);
  const std::vector<SeparableTerm> t = s.terms;
  s.eval = [t](const double* x, const double* eta) {
    cplx acc(0.0);
    for (const auto& term : t) acc += (term.fx ? term.fx(x) : cplx(1.0)) * (term.feta ? term.feta(eta) : cplx(1.0));
    return acc;
  };
  return s;
}

SymbolSpec general_symbol(std::string name, int d, double m1, double m2,
                          std::function<cplx(const double*, const double*)> eval) {
  SymbolSpec s;
  s.name = std::move(name);
  s.dim = d;
  s.m1 = m1;
  s.m2 = m2;
  s.eval = std::move(eval);
  return s;
}

namespace {

double jap(const double* z, int d) {
  double r = 1.0;
  for (int i = 0; i < d; ++i) r += z[i] * z[i];
  return std::sqrt(r);
}

double norm(const double* z, int d) {
  double r = 0.0;
  for (int i = 0; i < d; ++i) r += z[i] * z[i];
  return std::sqrt(r);
}

PointFn japanese_power(int d, double m) {
  return [d, m](const double* z) { return cplx(std::pow(jap(z, d), m)); };
}

PointFn plateau(int d, double scale) {
  return [d, scale](const double* z) { return cplx(psi0(norm(z, d) / scale)); };
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

namespace sym {

SymbolSpec one(int d) {
  SymbolSpec s = separable_symbol("one", d, 0.0, 0.0, {SeparableTerm{}});
  return s;
}

SymbolSpec model_sg(int d, double m1, double m2) {
  return separable_symbol("model_sg(" + fmt(m1) + "," + fmt(m2) + ")", d, m1, m2,
                          {SeparableTerm{japanese_power(d, m2), japanese_power(d, m1)}});
}

SymbolSpec multiplier(int d, double m) {
  return separable_symbol("multiplier(" + fmt(m) + ")", d, m, 0.0, {SeparableTerm{nullptr, japanese_power(d, m)}});
}

SymbolSpec space_weight(int d, double m) {
  return separable_symbol("space_weight(" + fmt(m) + ")", d, 0.0, m, {SeparableTerm{japanese_power(d, m), nullptr}});
}

SymbolSpec first_frequency(int d) {
  return separable_symbol("first_frequency", d, 1.0, 0.0,
                          {SeparableTerm{nullptr, [](const double* eta) { return cplx(eta[0]); }}});
}

SymbolSpec exp_x2(int d) {
  return separable_symbol("exp_x2", d, 0.0, 0.0, {SeparableTerm{[d](const double* x) {
                                                                   const double r = norm(x, d);
                                                                   return cplx(std::exp(r * r));
                                                                 },
                                                                 nullptr}});
}

SymbolSpec fio_m1(int d, double m1) {
  SymbolSpec s = separable_symbol("fio_m1(" + fmt(m1) + ")", d, m1, 0.0,
                                  {SeparableTerm{plateau(d, 1.0), japanese_power(d, m1)}});
  s.m2 = -std::numeric_limits<double>::infinity();
  s.support_hint = PhaseBox{2.0, std::numeric_limits<double>::infinity()};
  return s;
}

SymbolSpec fio_m2(int d, double m2) {
  SymbolSpec s = separable_symbol("fio_m2(" + fmt(m2) + ")", d, 0.0, m2,
                                  {SeparableTerm{japanese_power(d, m2), plateau(d, 1.0)}});
  s.m1 = -std::numeric_limits<double>::infinity();
  s.support_hint = PhaseBox{std::numeric_limits<double>::infinity(), 2.0};
  return s;
}

SymbolSpec lp_cutoff(int d, double m) {
  SymbolSpec s = separable_symbol("lp_cutoff(" + fmt(m) + ")", d, 0.0, m,
                                  {SeparableTerm{japanese_power(d, m), plateau(d, 1.0)}});
  s.m1 = -std::numeric_limits<double>::infinity();
  s.support_hint = PhaseBox{std::numeric_limits<double>::infinity(), 2.0};
  return s;
}

SymbolSpec l2_test(int d) {
  auto cut = plateau(d, 8.0);
  PointFn fx = [](const double* x) { return cplx(0.5 * x[0] / japanese(x[0])); };
  PointFn feta = [cut](const double* eta) { return cut(eta) * (eta[0] / japanese(eta[0])); };
  SymbolSpec s = separable_symbol("l2_test", d, 0.0, 0.0, {SeparableTerm{nullptr, cut}, SeparableTerm{fx, feta}});
  s.support_hint = PhaseBox{std::numeric_limits<double>::infinity(), 16.0};
  return s;
}

SymbolSpec conjugate(const SymbolSpec& s) {
  SymbolSpec out = s;
  out.name = "conj(" + s.name + ")";
  if (s.separable()) {
    for (auto& t : out.terms) {
      if (t.fx) t.fx = [f = t.fx](const double* x) { return std::conj(f(x)); };
      if (t.feta) t.feta = [f = t.feta](const double* e) { return std::conj(f(e)); };
    }
    out = separable_symbol(out.name, s.dim, s.m1, s.m2, out.terms);
    out.support_hint = s.support_hint;
    out.derivative_budget = s.derivative_budget;
    return out;
  }
  out.eval = [e = s.eval](const double* x, const double* eta) { return std::conj(e(x, eta)); };
  return out;
}

SymbolSpec transpose(const SymbolSpec& s) {
  SymbolSpec out = s;
  out.name = "transpose(" + s.name + ")";
  out.m1 = s.m2;
  out.m2 = s.m1;
  if (s.support_hint) out.support_hint = PhaseBox{s.support_hint->eta_max, s.support_hint->x_max};
  if (s.separable()) {
    for (auto& t : out.terms) std::swap(t.fx, t.feta);
    SymbolSpec r = separable_symbol(out.name, s.dim, out.m1, out.m2, out.terms);
    r.support_hint = out.support_hint;
    r.derivative_budget = s.derivative_budget;
    return r;
  }
  out.eval = [e = s.eval](const double* x, const double* eta) { return e(eta, x); };
  return out;
}

}  // namespace sym

RegistryCall parse_registry_call(const std::string& text) {
  RegistryCall call;
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  const auto open = t.find('(');
  if (open == std::string::npos) {
    call.name = t;
  } else {
    if (t.back() != ')') throw ValidationError("registry: missing ')' in '" + text + "'");
    call.name = t.substr(0, open);
    const std::string inner = t.substr(open + 1, t.size() - open - 2);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw ValidationError("registry: empty argument in '" + text + "'");
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw ValidationError("registry: bad number '" + item + "' in '" + text + "'");
      call.args.push_back(v);
    }
  }
  if (call.name.empty()) throw ValidationError("registry: empty name");
  return call;
}

namespace {

void want_args(const RegistryCall& c, std::size_t n) {
  if (c.args.size() != n)
    throw ValidationError("registry: '" + c.name + "' takes " + std::to_string(n) + " argument(s)");
}

}  // namespace

SymbolSpec symbol_from_registry(const std::string& text, int d) {
  const RegistryCall c = parse_registry_call(text);
  if (c.name == "one") return want_args(c, 0), sym::one(d);
  if (c.name == "model_sg") return want_args(c, 2), sym::model_sg(d, c.args[0], c.args[1]);
  if (c.name == "multiplier") return want_args(c, 1), sym::multiplier(d, c.args[0]);
  if (c.name == "space_weight") return want_args(c, 1), sym::space_weight(d, c.args[0]);
  if (c.name == "first_frequency") return want_args(c, 0), sym::first_frequency(d);
  if (c.name == "exp_x2") return want_args(c, 0), sym::exp_x2(d);
  if (c.name == "fio_m1") return want_args(c, 1), sym::fio_m1(d, c.args[0]);
  if (c.name == "fio_m2") return want_args(c, 1), sym::fio_m2(d, c.args[0]);
  if (c.name == "lp_cutoff") return want_args(c, 1), sym::lp_cutoff(d, c.args[0]);
  if (c.name == "l2_test") return want_args(c, 0), sym::l2_test(d);
  throw ValidationError("registry: unknown symbol '" + c.name + "'");
}

std::vector<std::string> symbol_registry_names() {
  return {"one", "model_sg(m1,m2)", "multiplier(m)", "space_weight(m)", "first_frequency", "exp_x2",
          "fio_m1(m1)", "fio_m2(m2)", "lp_cutoff(m)", "l2_test"};
}

}  // namespace fiolab
