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

#include "fiolab/gabor_matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <random>

#include "fiolab/csv.hpp"
#include "fiolab/error.hpp"
#include "fiolab/parallel.hpp"

namespace fiolab {

namespace {

double jap_vec(const double* z, int d) {
  double r = 1.0;
  for (int a = 0; a < d; ++a) r += z[a] * z[a];
  return std::sqrt(r);
}

struct Coords {
  int d;
  std::vector<int> k, n;  // absolute multi-indices per flat index
};

Coords lattice_coords(const GaborLattice& lat) {
  Coords c{lat.dim, std::vector<int>(lat.size() * lat.dim), std::vector<int>(lat.size() * lat.dim)};
  for (std::size_t f = 0; f < lat.size(); ++f) lat.unflat(f, &c.k[f * lat.dim], &c.n[f * lat.dim]);
  return c;
}

// Flat index of the k (or n) multi-index inside the box.
std::int32_t part_flat(const int* v, int d, int lo, int count) {
  std::int32_t r = 0;
  for (int a = 0; a < d; ++a) r = r * count + (v[a] - lo);
  return r;
}

template <class T>
void put_le(std::ostream& out, T v) {
  unsigned char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
bool get_le(std::istream& in, T& v) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) return false;
  if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
  std::memcpy(&v, buf, sizeof(T));
  return true;
}

}  // namespace

cplx GaborMatrix::at(std::size_t row, std::size_t col) const {
  const auto first = row_index.begin() + static_cast<std::ptrdiff_t>(col_start[col]);
  const auto last = row_index.begin() + static_cast<std::ptrdiff_t>(col_start[col + 1]);
  const auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(row));
  if (it == last || *it != row) return cplx(0.0);
  return values[static_cast<std::size_t>(it - row_index.begin())];
}

std::vector<cplx> GaborMatrix::dense() const {
  const std::size_t n = dim();
  std::vector<cplx> out(n * n, cplx(0.0));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t e = col_start[c]; e < col_start[c + 1]; ++e) out[row_index[e] * n + c] = values[e];
  return out;
}

GaborMatrix gabor_matrix(const OperatorHandle& op, const Window& g, const GaborLattice& lat, double zero_threshold) {
  if (!(g.signal.grid == op.grid())) throw ValidationError("gabor_matrix: window and operator grids differ");
  const std::size_t n = lat.size();
  if (n > std::numeric_limits<std::uint32_t>::max()) throw ValidationError("gabor_matrix: lattice too large");
  const Coords c = lattice_coords(lat);
  std::vector<std::vector<std::pair<std::uint32_t, cplx>>> cols(n);
  parallel_for(n, [&](std::size_t col) {
    const Signal atom = gabor_atom(g, lat, &c.k[col * lat.dim], &c.n[col * lat.dim]);
    const GaborCoeffs a = gabor_analysis(op.apply(atom), g, lat);
    auto& dst = cols[col];
    for (std::size_t r = 0; r < n; ++r)
      if (std::abs(a.values[r]) >= zero_threshold) dst.emplace_back(static_cast<std::uint32_t>(r), a.values[r]);
  });
  GaborMatrix M;
  M.lattice = lat;
  M.window_id = g.id;
  M.operator_id = op.id();
  M.col_start.assign(n + 1, 0);
  for (std::size_t col = 0; col < n; ++col) M.col_start[col + 1] = M.col_start[col] + cols[col].size();
  M.row_index.reserve(M.col_start[n]);
  M.values.reserve(M.col_start[n]);
  for (auto& v : cols)
    for (auto& [r, val] : v) {
      M.row_index.push_back(r);
      M.values.push_back(val);
    }
  return M;
}

SpotCheck gabor_matrix_spot_check(const GaborMatrix& M, const OperatorHandle& op, const Window& g, int count,
                                  std::uint64_t seed) {
  const GaborLattice& lat = M.lattice;
  const Coords c = lattice_coords(lat);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, M.dim() - 1);
  SpotCheck s;
  for (int t = 0; t < count; ++t) {
    std::size_t col = pick(rng), row = pick(rng);
    // Half of the probes sit on the diagonal band where entries are large.
    if (t % 2 == 0) row = col;
    const Signal a = gabor_atom(g, lat, &c.k[col * lat.dim], &c.n[col * lat.dim]);
    const Signal b = gabor_atom(g, lat, &c.k[row * lat.dim], &c.n[row * lat.dim]);
    const cplx direct = inner_product(op.apply(a), b);
    s.max_error = std::max(s.max_error, std::abs(direct - M.at(row, col)));
    ++s.checked;
  }
  return s;
}

void write_gabor_matrix_csv(std::ostream& out, const GaborMatrix& M) {
  const GaborLattice& lat = M.lattice;
  const Coords c = lattice_coords(lat);
  const int d = lat.dim;
  CsvWriter w(out, {"k_row", "n_row", "k", "n", "abs", "phase"});
  for (std::size_t col = 0; col < M.dim(); ++col)
    for (std::size_t e = M.col_start[col]; e < M.col_start[col + 1]; ++e) {
      const std::size_t row = M.row_index[e];
      w.cell(static_cast<long long>(part_flat(&c.k[row * d], d, lat.k_min, lat.k_count()) + (d == 1 ? lat.k_min : 0)))
          .cell(static_cast<long long>(part_flat(&c.n[row * d], d, lat.n_min, lat.n_count()) + (d == 1 ? lat.n_min : 0)))
          .cell(static_cast<long long>(part_flat(&c.k[col * d], d, lat.k_min, lat.k_count()) + (d == 1 ? lat.k_min : 0)))
          .cell(static_cast<long long>(part_flat(&c.n[col * d], d, lat.n_min, lat.n_count()) + (d == 1 ? lat.n_min : 0)))
          .cell(std::abs(M.values[e]))
          .cell(std::arg(M.values[e]));
      w.end_row();
    }
}

void write_gabor_matrix_binary(std::ostream& out, const GaborMatrix& M) {
  const GaborLattice& lat = M.lattice;
  const Coords c = lattice_coords(lat);
  const int d = lat.dim;
  auto kidx = [&](std::size_t f) {
    return part_flat(&c.k[f * d], d, lat.k_min, lat.k_count()) + (d == 1 ? lat.k_min : 0);
  };
  auto nidx = [&](std::size_t f) {
    return part_flat(&c.n[f * d], d, lat.n_min, lat.n_count()) + (d == 1 ? lat.n_min : 0);
  };
  for (std::size_t col = 0; col < M.dim(); ++col)
    for (std::size_t e = M.col_start[col]; e < M.col_start[col + 1]; ++e) {
      const std::size_t row = M.row_index[e];
      put_le<std::int32_t>(out, kidx(row));
      put_le<std::int32_t>(out, nidx(row));
      put_le<std::int32_t>(out, kidx(col));
      put_le<std::int32_t>(out, nidx(col));
      put_le<double>(out, M.values[e].real());
      put_le<double>(out, M.values[e].imag());
    }
}

std::vector<Triplet> read_gabor_matrix_binary(std::istream& in) {
  std::vector<Triplet> out;
  for (;;) {
    Triplet t{};
    if (!get_le(in, t.kp)) break;
    double re = 0.0, im = 0.0;
    if (!get_le(in, t.np) || !get_le(in, t.k) || !get_le(in, t.n) || !get_le(in, re) || !get_le(in, im))
      throw ValidationError("gabor matrix binary: truncated record");
    t.value = cplx(re, im);
    out.push_back(t);
  }
  return out;
}

DecayCertificate diag_decay_certify(const GaborMatrix& M, double m1, double m2, int N1, int N2, bool weyl) {
  const GaborLattice& lat = M.lattice;
  const Coords c = lattice_coords(lat);
  const int d = lat.dim;
  DecayCertificate cert;
  std::vector<double> a(d), b(d), dk(d), dn(d);
  for (std::size_t col = 0; col < M.dim(); ++col)
    for (std::size_t e = M.col_start[col]; e < M.col_start[col + 1]; ++e) {
      const std::size_t row = M.row_index[e];
      for (int i = 0; i < d; ++i) {
        const double k = lat.alpha * c.k[col * d + i], kp = lat.alpha * c.k[row * d + i];
        const double n = lat.beta * c.n[col * d + i], np = lat.beta * c.n[row * d + i];
        a[i] = weyl ? n + np : n;
        b[i] = weyl ? k + kp : kp;
        dn[i] = n - np;
        dk[i] = k - kp;
      }
      const double bound = std::pow(jap_vec(a.data(), d), m1) * std::pow(jap_vec(b.data(), d), m2) /
                           (std::pow(jap_vec(dn.data(), d), 2.0 * N1) * std::pow(jap_vec(dk.data(), d), 2.0 * N2));
      const double ratio = std::abs(M.values[e]) / bound;
      if (ratio > cert.C) {
        cert.C = ratio;
        cert.worst_row = row;
        cert.worst_col = col;
      }
    }
  return cert;
}

ConcentrationReport fio_kernel_concentration(const GaborMatrix& M, const PhaseSpec& phi, int margin) {
  const GaborLattice& lat = M.lattice;
  const int d = lat.dim;
  if (phi.dim != d) throw ValidationError("fio_kernel_concentration: dimension mismatch");
  const Coords c = lattice_coords(lat);
  double global = 0.0;
  for (const cplx& v : M.values) global = std::max(global, std::abs(v));
  ConcentrationReport rep;
  double sum = 0.0;
  std::vector<double> y(d), om(d), yp(d), r(d), H(d * d), omp(d);
  for (std::size_t col = 0; col < M.dim(); ++col) {
    // Peak of the column.
    double best = 0.0;
    std::size_t arg = 0;
    for (std::size_t e = M.col_start[col]; e < M.col_start[col + 1]; ++e)
      if (std::abs(M.values[e]) > best) {
        best = std::abs(M.values[e]);
        arg = M.row_index[e];
      }
    if (best < 1e-8 * global) {
      ++rep.skipped;
      continue;
    }
    for (int i = 0; i < d; ++i) {
      y[i] = lat.alpha * c.k[col * d + i];
      om[i] = lat.beta * c.n[col * d + i];
      yp[i] = y[i];
    }
    // Newton on grad_eta Phi(y', omega) = y.
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      phi.grad_eta(yp.data(), om.data(), r.data());
      double err = 0.0;
      for (int i = 0; i < d; ++i) {
        r[i] -= y[i];
        err = std::max(err, std::abs(r[i]));
      }
      if (err < 1e-12 * (1.0 + jap_vec(y.data(), d))) {
        ok = true;
        break;
      }
      phi.mixed_hessian(yp.data(), om.data(), H.data());
      Eigen::MatrixXd J(d, d);
      for (int l = 0; l < d; ++l)
        for (int i = 0; i < d; ++i) J(l, i) = H[i * d + l];
      Eigen::VectorXd rv(d);
      for (int i = 0; i < d; ++i) rv(i) = r[i];
      const Eigen::VectorXd step = J.fullPivLu().solve(rv);
      for (int i = 0; i < d; ++i) yp[i] -= step(i);
    }
    if (!ok) {
      ++rep.skipped;
      continue;
    }
    phi.grad_x(yp.data(), om.data(), omp.data());
    std::vector<int> kp(d), np(d);
    lat.unflat(arg, kp.data(), np.data());
    bool inside = true;
    double dist = 0.0;
    for (int i = 0; i < d; ++i) {
      const double ck = yp[i] / lat.alpha, cn = omp[i] / lat.beta;
      if (ck < lat.k_min + margin || ck > lat.k_max - margin || cn < lat.n_min + margin || cn > lat.n_max - margin)
        inside = false;
      dist = std::max({dist, std::abs(ck - kp[i]), std::abs(cn - np[i])});
    }
    if (!inside) {
      ++rep.skipped;
      continue;
    }
    rep.max_distance = std::max(rep.max_distance, dist);
    sum += dist;
    ++rep.evaluated;
  }
  if (rep.evaluated) rep.mean_distance = sum / static_cast<double>(rep.evaluated);
  return rep;
}

std::array<double, 4> schur_sums(const GaborMatrix& M, const SchurWeights& w) {
  const GaborLattice& lat = M.lattice;
  const int d = lat.dim;
  const Coords c = lattice_coords(lat);
  const std::size_t nn = lat.n_total(), n = M.dim();
  auto kpart = [&](std::size_t f) { return static_cast<std::size_t>(part_flat(&c.k[f * d], d, lat.k_min, lat.k_count())); };
  auto npart = [&](std::size_t f) { return static_cast<std::size_t>(part_flat(&c.n[f * d], d, lat.n_min, lat.n_count())); };
  std::vector<double> wrow(n, 1.0);
  if (w.m1 != 0.0 || w.m2 != 0.0) {
    std::vector<double> kx(d), nx(d);
    for (std::size_t f = 0; f < n; ++f) {
      for (int i = 0; i < d; ++i) {
        kx[i] = lat.alpha * c.k[f * d + i];
        nx[i] = lat.beta * c.n[f * d + i];
      }
      wrow[f] = 1.0 / (std::pow(jap_vec(kx.data(), d), w.m2) * std::pow(jap_vec(nx.data(), d), w.m1));
    }
  }
  // A[(n, n', k')] += |K| summed over k;  B[(n', n, k)] += |K| summed over k'.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, double> A, B;
  std::vector<double> row_sum(n, 0.0), col_sum(n, 0.0);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t e = M.col_start[col]; e < M.col_start[col + 1]; ++e) {
      const std::size_t row = M.row_index[e];
      const double v = std::abs(M.values[e]) * wrow[row];
      A[{npart(col), npart(row), kpart(row)}] += v;
      B[{npart(row), npart(col), kpart(col)}] += v;
      row_sum[row] += v;
      col_sum[col] += v;
    }
  auto mixed = [&](const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, double>& T) {
    // sup over first, sum over second, sup over third.
    std::vector<std::vector<double>> sup(nn, std::vector<double>(nn, 0.0));
    for (const auto& [key, v] : T) {
      auto& s = sup[std::get<0>(key)][std::get<1>(key)];
      s = std::max(s, v);
    }
    double out = 0.0;
    for (std::size_t a = 0; a < nn; ++a) {
      double tot = 0.0;
      for (std::size_t b = 0; b < nn; ++b) tot += sup[a][b];
      out = std::max(out, tot);
    }
    return out;
  };
  std::array<double, 4> s{};
  s[0] = mixed(A);
  s[1] = mixed(B);
  s[2] = *std::max_element(row_sum.begin(), row_sum.end());
  s[3] = *std::max_element(col_sum.begin(), col_sum.end());
  return s;
}

SchurCertificate schur_certify(const std::vector<GaborMatrix>& by_radius, const SchurWeights& w) {
  if (by_radius.size() < 2) throw ValidationError("schur_certify: need at least two lattice radii");
  SchurCertificate cert;
  cert.finite = true;
  for (const GaborMatrix& M : by_radius) {
    cert.radii.push_back(M.lattice.k_max);
    cert.sums.push_back(schur_sums(M, w));
    for (double v : cert.sums.back()) cert.finite = cert.finite && std::isfinite(v);
  }
  cert.stable = cert.finite;
  cert.divergent = true;
  for (std::size_t i = 1; i < cert.sums.size(); ++i) {
    double top_prev = 0.0, top = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double rel = std::abs(cert.sums[i][j] - cert.sums[i - 1][j]) / cert.sums[i - 1][j];
      cert.max_relative_change = std::max(cert.max_relative_change, rel);
      if (rel >= 0.1) cert.stable = false;
      top_prev = std::max(top_prev, cert.sums[i - 1][j]);
      top = std::max(top, cert.sums[i][j]);
    }
    if (!(top > 1.1 * top_prev)) cert.divergent = false;
  }
  return cert;
}

}  // namespace fiolab
