// Copyright 2026 The qfi-decoherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "qfi/sweep.h"

namespace qfi {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 180.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

std::string_view color_for(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::depolarizing:
      return "green";
    case ChannelKind::amplitude_damping:
      return "blue";
    case ChannelKind::phase_damping:
      return "red";
    case ChannelKind::custom:
      break;
  }
  return "gray";
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (const char ch : text) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string fmt(const char* pattern, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

struct Frame {
  double y_max;
  double x_px(double p) const { return kLeft + p * (kWidth - kLeft - kRight); }
  double y_px(double v) const {
    const double clamped = std::clamp(v, 0.0, y_max);
    return kHeight - kBottom - clamped / y_max * (kHeight - kTop - kBottom);
  }
};

}  // namespace

std::string render_svg(std::span<const PlotSeries> series, const PlotOptions& options) {
  if (series.empty()) throw std::invalid_argument("render_svg: no series to plot");

  double top = options.pure_marker.value_or(0.0);
  for (const auto& s : series) {
    for (const double v : s.mean_f) {
      if (std::isfinite(v)) top = std::max(top, v);
    }
  }
  const Frame frame{std::max(2.5, std::ceil(top * 2.0 - 1e-9) / 2.0)};

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
         "viewBox=\"0 0 720 480\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"720\" height=\"480\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt("%.1f", (kLeft + kWidth - kRight) / 2.0) +
         "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">" + xml_escape(options.title) +
         "</text>\n";

  // Axes.
  const std::string x0 = fmt("%.2f", frame.x_px(0.0));
  const std::string x1 = fmt("%.2f", frame.x_px(1.0));
  const std::string y0 = fmt("%.2f", frame.y_px(0.0));
  const std::string y1 = fmt("%.2f", frame.y_px(frame.y_max));
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 + "\"/>\n";
  svg += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 + "\"/>\n";
  svg += "</g>\n";

  svg += "<g>\n";
  for (int k = 0; k <= 5; ++k) {
    const double p = k / 5.0;
    const std::string x = fmt("%.2f", frame.x_px(p));
    svg += "<line x1=\"" + x + "\" y1=\"" + y0 + "\" x2=\"" + x + "\" y2=\"" +
           fmt("%.2f", frame.y_px(0.0) + 5.0) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + x + "\" y=\"" + fmt("%.2f", frame.y_px(0.0) + 20.0) +
           "\" text-anchor=\"middle\">" + fmt("%.1f", p) + "</text>\n";
  }
  for (double v = 0.0; v <= frame.y_max + 1e-9; v += 0.5) {
    const std::string y = fmt("%.2f", frame.y_px(v));
    svg += "<line x1=\"" + fmt("%.2f", frame.x_px(0.0) - 5.0) + "\" y1=\"" + y + "\" x2=\"" + x0 +
           "\" y2=\"" + y + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", frame.x_px(0.0) - 9.0) + "\" y=\"" +
           fmt("%.2f", frame.y_px(v) + 4.0) + "\" text-anchor=\"end\">" + fmt("%.1f", v) +
           "</text>\n";
  }
  svg += "</g>\n";
  svg += "<text x=\"" + fmt("%.1f", (kLeft + kWidth - kRight) / 2.0) + "\" y=\"" +
         fmt("%.1f", kHeight - 15.0) + "\" text-anchor=\"middle\">decoherence strength p</text>\n";
  svg += "<text x=\"20\" y=\"" + fmt("%.1f", (kTop + kHeight - kBottom) / 2.0) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         fmt("%.1f", (kTop + kHeight - kBottom) / 2.0) + ")\">mean QFI</text>\n";

  for (const auto& s : series) {
    std::string points;
    for (std::size_t i = 0; i < s.p.size(); ++i) {
      if (!points.empty()) points += ' ';
      points += fmt("%.2f", frame.x_px(s.p[i])) + "," + fmt("%.2f", frame.y_px(s.mean_f[i]));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color_for(s.channel)) +
           "\" stroke-width=\"2\"";
    if (s.mode == SummationMode::full_spectrum) svg += " stroke-dasharray=\"6,4\"";
    svg += " points=\"" + points + "\"/>\n";
  }

  if (options.pure_marker) {
    svg += "<circle cx=\"" + fmt("%.2f", frame.x_px(0.0)) + "\" cy=\"" +
           fmt("%.2f", frame.y_px(*options.pure_marker)) + "\" r=\"5\" fill=\"black\"/>\n";
  }

  // Legend.
  const double lx = kWidth - kRight + 20.0;
  double ly = kTop + 10.0;
  svg += "<g>\n";
  for (const auto& s : series) {
    const std::string y = fmt("%.2f", ly);
    svg += "<line x1=\"" + fmt("%.2f", lx) + "\" y1=\"" + y + "\" x2=\"" + fmt("%.2f", lx + 30.0) +
           "\" y2=\"" + y + "\" stroke=\"" + std::string(color_for(s.channel)) +
           "\" stroke-width=\"2\"";
    if (s.mode == SummationMode::full_spectrum) svg += " stroke-dasharray=\"6,4\"";
    svg += "/>\n";
    svg += "<text x=\"" + fmt("%.2f", lx + 38.0) + "\" y=\"" + fmt("%.2f", ly + 4.0) + "\">" +
           xml_escape(std::string(to_string(s.channel)) + " (" + std::string(to_string(s.mode)) +
                      ")") +
           "</text>\n";
    ly += 20.0;
  }
  if (options.pure_marker) {
    svg += "<circle cx=\"" + fmt("%.2f", lx + 15.0) + "\" cy=\"" + fmt("%.2f", ly) +
           "\" r=\"5\" fill=\"black\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", lx + 38.0) + "\" y=\"" + fmt("%.2f", ly + 4.0) +
           "\">pure state</text>\n";
  }
  svg += "</g>\n";
  svg += "</svg>\n";
  return svg;
}

void emit_svg(std::span<const PlotSeries> series, const std::filesystem::path& path,
              const PlotOptions& options) {
  const std::string text = render_svg(series, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace qfi
