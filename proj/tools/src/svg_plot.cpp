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

#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fiolab::cli {

namespace {

constexpr double kW = 640, kH = 440, kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

std::string tick_label(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::pow(10.0, e));
  return buf;
}

}  // namespace

void write_loglog_svg(std::ostream& out, const std::string& title, const std::string& xlabel,
                      const std::string& ylabel, const std::vector<Series>& series) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!(s.x[i] > 0.0 && s.y[i] > 0.0)) continue;
      x0 = std::min(x0, std::log10(s.x[i]));
      x1 = std::max(x1, std::log10(s.x[i]));
      y0 = std::min(y0, std::log10(s.y[i]));
      y1 = std::max(y1, std::log10(s.y[i]));
    }
  if (!(x1 >= x0)) x0 = 0, x1 = 1;
  if (!(y1 >= y0)) y0 = 0, y1 = 1;
  x0 = std::floor(x0 * 4) / 4, x1 = std::ceil(x1 * 4) / 4;
  y0 = std::floor(y0 * 4) / 4, y1 = std::ceil(y1 * 4) / 4;
  if (x1 - x0 < 0.25) x1 = x0 + 0.25;
  if (y1 - y0 < 0.25) y0 -= 0.125, y1 += 0.125;
  const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
  auto px = [&](double lx) { return kLeft + (lx - x0) / (x1 - x0) * pw; };
  auto py = [&](double ly) { return kTop + (y1 - ly) / (y1 - y0) * ph; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
      << "</text>\n";
  out << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(pw) << "\" height=\"" << fmt(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  // Ticks at quarter decades, labels at whole and half decades.
  for (double e = x0; e <= x1 + 1e-9; e += 0.25) {
    out << "<line x1=\"" << fmt(px(e)) << "\" y1=\"" << fmt(kTop + ph) << "\" x2=\"" << fmt(px(e)) << "\" y2=\""
        << fmt(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
    if (std::abs(e * 2 - std::round(e * 2)) < 1e-9)
      out << "<text x=\"" << fmt(px(e)) << "\" y=\"" << fmt(kTop + ph + 18) << "\" text-anchor=\"middle\">"
          << tick_label(e) << "</text>\n";
  }
  for (double e = y0; e <= y1 + 1e-9; e += 0.25) {
    out << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py(e)) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
        << fmt(py(e)) << "\" stroke=\"black\"/>\n";
    if (std::abs(e * 2 - std::round(e * 2)) < 1e-9)
      out << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(e) + 4) << "\" text-anchor=\"end\">" << tick_label(e)
          << "</text>\n";
  }
  out << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kH - 16) << "\" text-anchor=\"middle\">"
      << escape(xlabel) << "</text>\n";
  out << "<text transform=\"translate(18," << fmt(kTop + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(ylabel) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kColors[k % (sizeof kColors / sizeof *kColors)];
    std::string pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!(s.x[i] > 0.0 && s.y[i] > 0.0)) continue;
      const double X = px(std::log10(s.x[i])), Y = py(std::log10(s.y[i]));
      pts += (pts.empty() ? "" : " ") + fmt(X) + "," + fmt(Y);
      out << "<circle cx=\"" << fmt(X) << "\" cy=\"" << fmt(Y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    out << "<polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
    const double ly = kTop + 12 + 18 * static_cast<double>(k);
    out << "<line x1=\"" << fmt(kW - kRight + 12) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(kW - kRight + 32)
        << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << fmt(kW - kRight + 38) << "\" y=\"" << fmt(ly + 4) << "\">" << escape(s.label) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace fiolab::cli
