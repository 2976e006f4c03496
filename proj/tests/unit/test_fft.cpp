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

#include <gtest/gtest.h>

#include <random>

#include "fiolab/fft.hpp"
#include "oracles.hpp"

using namespace fiolab;

namespace {

std::vector<cplx> noise(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> z;
  std::vector<cplx> v(n);
  for (auto& x : v) x = cplx(z(rng), z(rng));
  return v;
}

}  // namespace

class Fft1d : public ::testing::TestWithParam<int> {};

TEST_P(Fft1d, MatchesNaiveDft) {
  const int n = GetParam();
  for (int sign : {-1, 1}) {
    std::vector<cplx> x = noise(n, 11 + n);
    const std::vector<cplx> ref = oracle::dft(x, sign);
    fft_1d(x.data(), n, sign);
    EXPECT_LT(oracle::max_abs_diff(x, ref), 1e-10 * n);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, Fft1d, ::testing::Values(2, 8, 12, 64, 100, 256));

TEST(FftNd, TwoDimensionalIsRowThenColumn) {
  const int n = 16;
  std::vector<cplx> x = noise(n * n, 5);
  std::vector<cplx> ref = x;
  for (int r = 0; r < n; ++r) {
    std::vector<cplx> row(ref.begin() + r * n, ref.begin() + (r + 1) * n);
    row = oracle::dft(row, -1);
    std::copy(row.begin(), row.end(), ref.begin() + r * n);
  }
  for (int c = 0; c < n; ++c) {
    std::vector<cplx> col(n);
    for (int r = 0; r < n; ++r) col[r] = ref[r * n + c];
    col = oracle::dft(col, -1);
    for (int r = 0; r < n; ++r) ref[r * n + c] = col[r];
  }
  fft_nd(x.data(), 2, n, -1);
  EXPECT_LT(oracle::max_abs_diff(x, ref), 1e-10);
}
