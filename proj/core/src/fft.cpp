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

#include "fiolab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "fiolab/error.hpp"

namespace fiolab {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan get_plan(int d, int n, int sign) {
  static std::map<std::tuple<int, int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(planner_mutex());
  auto key = std::make_tuple(d, n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::size_t total = 1;
  std::vector<int> dims(d, n);
  for (int a = 0; a < d; ++a) total *= static_cast<std::size_t>(n);
  fftw_complex* buf = fftw_alloc_complex(total);
  fftw_plan p = fftw_plan_dft(d, dims.data(), buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  if (p == nullptr) throw NumericalError("fft: planner failed");
  cache.emplace(key, p);
  return p;
}

}  // namespace

void fft_1d(cplx* data, int n, int sign) { fft_nd(data, 1, n, sign); }

void fft_nd(cplx* data, int d, int n, int sign) {
  fftw_plan p = get_plan(d, n, sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(p, ptr, ptr);
}

}  // namespace fiolab
