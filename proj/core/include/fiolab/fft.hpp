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

#ifndef FIOLAB_FFT_HPP_
#define FIOLAB_FFT_HPP_

#include "fiolab/grid.hpp"

namespace fiolab {

// In-place unnormalized DFT; sign = -1 forward, +1 backward.
void fft_1d(cplx* data, int n, int sign);
// In-place d-dimensional DFT on an n^d row-major array.
void fft_nd(cplx* data, int d, int n, int sign);

}  // namespace fiolab

#endif  // FIOLAB_FFT_HPP_
