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

#include "fiolab/opnorm.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <sstream>

#include "fiolab/error.hpp"

namespace fiolab {

const char* to_string(NormEstimateMethod m) {
  return m == NormEstimateMethod::PowerIterL2 ? "power_iter_l2" : "corpus_max_ratio";
}

namespace {

void axpy(cplx a, const std::vector<cplx>& x, std::vector<cplx>& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

cplx dot(const std::vector<cplx>& x, const std::vector<cplx>& y, double w) {
  cplx s(0.0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s * w;
}

}  // namespace

OpNormReport op_norm_l2(const OperatorHandle& op, const PowerIterOptions& opt) {
  const GridSpec& G = op.grid();
  const std::size_t n = G.size();
  const double w = G.cell_volume();
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> nd;
  std::vector<std::vector<cplx>> V;
  std::vector<cplx> v(n);
  for (auto& z : v) z = cplx(nd(rng), nd(rng));
  double nv = std::sqrt(dot(v, v, w).real());
  for (auto& z : v) z /= nv;
  V.push_back(v);
  std::vector<double> alpha, beta;
  OpNormReport rep;
  rep.method = NormEstimateMethod::PowerIterL2;
  double theta = 0.0;
  const int cap = std::min<int>(opt.max_iterations, static_cast<int>(n));
  for (int it = 1; it <= cap; ++it) {
    Signal s(G, V.back());
    std::vector<cplx> u = op.apply_adjoint(op.apply(s)).samples;
    const double a = dot(u, V.back(), w).real();
    alpha.push_back(a);
    // Full reorthogonalization, twice.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : V) axpy(-dot(u, q, w), q, u);
    const double b = std::sqrt(dot(u, u, w).real());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(it, it);
    for (int i = 0; i < it; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < it) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    theta = es.eigenvalues()(it - 1);
    const double last = es.eigenvectors()(it - 1, it - 1);
    const double res = b * std::abs(last) / std::max(theta, 1e-300);
    rep.iterations = it;
    rep.residual = res;
    // |theta - lambda| <= res * theta; the norm error is half of that.
    if (res < opt.tolerance || b < 1e-14 * std::max(theta, 1e-300)) {
      rep.estimate = std::sqrt(std::max(theta, 0.0));
      rep.lower = rep.estimate;
      rep.upper = std::sqrt(theta * (1.0 + res));
      return rep;
    }
    beta.push_back(b);
    for (auto& z : u) z /= b;
    V.push_back(std::move(u));
  }
  std::ostringstream os;
  os << "op_norm_l2: no convergence after " << rep.iterations << " iterations (residual " << rep.residual << ") for "
     << op.id();
  throw NumericalError(os.str());
}

OpNormReport op_norm_corpus(const OperatorHandle& op, double p, const std::vector<Signal>& corpus, const Window& g,
                            const ModNormOptions& mopt) {
  if (corpus.empty()) throw ValidationError("op_norm_corpus: empty corpus");
  OpNormReport rep;
  rep.method = NormEstimateMethod::CorpusMaxRatio;
  rep.p = p;
  for (const Signal& f : corpus) {
    const double in = mod_norm(f, p, p, {}, g, mopt).value;
    const double out = mod_norm(op.apply(f), p, p, {}, g, mopt).value;
    rep.ratios.push_back(out / in);
    rep.lower = std::max(rep.lower, out / in);
  }
  rep.estimate = rep.lower;
  return rep;
}

OpNormReport op_norm_estimate(const OperatorHandle& op, double p, NormEstimateMethod method,
                              const std::vector<Signal>& corpus, const Window* g, const PowerIterOptions& opt) {
  if (method == NormEstimateMethod::PowerIterL2) {
    if (p != 2.0) throw ValidationError("op_norm_estimate: power iteration certifies only p = 2");
    return op_norm_l2(op, opt);
  }
  if (!g) throw ValidationError("op_norm_estimate: corpus_max_ratio needs a window");
  return op_norm_corpus(op, p, corpus, *g);
}

}  // namespace fiolab
