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

#include <benchmark/benchmark.h>

#include <vector>

#include "fiolab/fft.hpp"
#include "fiolab/gabor.hpp"
#include "fiolab/gabor_matrix.hpp"
#include "fiolab/generators.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/quantize.hpp"
#include "fiolab/stft.hpp"
#include "fiolab/symbols.hpp"

using namespace fiolab;

static void BM_Fft1d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<cplx> data(n, cplx(1.0, 0.5));
  for (auto _ : state) {
    fft_1d(data.data(), n, -1);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Fft1d)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

static void BM_Stft(benchmark::State& state) {
  const GridSpec g = GridSpec::make(1, 16.0, static_cast<int>(state.range(0)));
  const Window w = Window::gaussian(g);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(1, 7));
  for (auto _ : state) benchmark::DoNotOptimize(stft(f, w).values.data());
}
BENCHMARK(BM_Stft)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_ApplyFio1(benchmark::State& state) {
  const GridSpec g = GridSpec::make(1, 8.0, static_cast<int>(state.range(0)));
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  const SymbolSpec s = sym::l2_test(1);
  const Signal f = Signal::from_generator(g, gen::gaussian(1));
  for (auto _ : state) benchmark::DoNotOptimize(apply_fio1(phi, s, f).samples.data());
}
BENCHMARK(BM_ApplyFio1)->Arg(512)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_GaborMatrix(benchmark::State& state) {
  const GridSpec g = GridSpec::make(1, 16.0, 1024);
  const Window w = Window::gaussian(g);
  const int r = static_cast<int>(state.range(0));
  const GaborLattice lat = with_radius(make_lattice(g, 0.5, 0.5), r, r);
  const OperatorHandle op = OperatorHandle::pseudo_kn(sym::model_sg(1, -0.5, -0.5), g);
  for (auto _ : state) benchmark::DoNotOptimize(gabor_matrix(op, w, lat).nonzeros());
}
BENCHMARK(BM_GaborMatrix)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
