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

#ifndef FIOLAB_CSV_HPP_
#define FIOLAB_CSV_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "fiolab/grid.hpp"

namespace fiolab {

// Shortest round-trip decimal form.
std::string format_double(double v);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& columns);
  CsvWriter& cell(double v);
  CsvWriter& cell(long long v);
  CsvWriter& cell(int v) { return cell(static_cast<long long>(v)); }
  CsvWriter& cell(const std::string& v);
  void end_row();

 private:
  std::ostream& out_;
  std::size_t ncols_;
  std::size_t col_ = 0;
};

void write_signal_csv(std::ostream& out, const Signal& f);
Signal read_signal_csv(std::istream& in, const GridSpec& grid);

}  // namespace fiolab

#endif  // FIOLAB_CSV_HPP_
