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

#include "fiolab/csv.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "fiolab/error.hpp"

namespace fiolab {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& columns)
    : out_(out), ncols_(columns.size()) {
  out_ << "# schema=1\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << "\n";
}

CsvWriter& CsvWriter::cell(double v) { return cell(format_double(v)); }

CsvWriter& CsvWriter::cell(long long v) { return cell(std::to_string(v)); }

CsvWriter& CsvWriter::cell(const std::string& v) {
  if (col_ >= ncols_) throw ValidationError("csv: too many cells in row");
  out_ << (col_ ? "," : "") << v;
  ++col_;
  return *this;
}

void CsvWriter::end_row() {
  if (col_ != ncols_) throw ValidationError("csv: row is incomplete");
  out_ << "\n";
  col_ = 0;
}

void write_signal_csv(std::ostream& out, const Signal& f) {
  std::vector<std::string> cols;
  for (int a = 0; a < f.grid.dim; ++a) cols.push_back("i" + std::to_string(a));
  cols.push_back("real");
  cols.push_back("imag");
  CsvWriter w(out, cols);
  for (std::size_t i = 0; i < f.size(); ++i) {
    int idx[3];
    f.grid.unflatten(i, idx);
    for (int a = 0; a < f.grid.dim; ++a) w.cell(idx[a]);
    w.cell(f.samples[i].real()).cell(f.samples[i].imag());
    w.end_row();
  }
}

Signal read_signal_csv(std::istream& in, const GridSpec& grid) {
  Signal f(grid);
  std::string line;
  bool header = false;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    std::vector<double> vals;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      double v = 0.0;
      auto r = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (r.ec != std::errc()) throw ValidationError("csv: bad number '" + cell + "'");
      vals.push_back(v);
    }
    if (static_cast<int>(vals.size()) != grid.dim + 2) throw ValidationError("csv: wrong column count");
    int idx[3];
    for (int a = 0; a < grid.dim; ++a) {
      idx[a] = static_cast<int>(vals[a]);
      if (idx[a] < 0 || idx[a] >= grid.samples_per_axis) throw ValidationError("csv: index out of range");
    }
    f.samples[grid.flatten(idx)] = cplx(vals[grid.dim], vals[grid.dim + 1]);
    ++count;
  }
  if (count != grid.size()) throw ValidationError("csv: sample count does not match grid");
  return f;
}

}  // namespace fiolab
