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

#ifndef FIOLAB_PARALLEL_HPP_
#define FIOLAB_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace fiolab {

// Worker count: set_jobs() wins, then FIOLAB_JOBS, then hardware threads.
int jobs();
void set_jobs(int k);

// Runs fn(i) for i in [0, n). Each index writes its own slot, so results do
// not depend on the worker count. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace fiolab

#endif  // FIOLAB_PARALLEL_HPP_
