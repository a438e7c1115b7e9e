// Copyright 2026 The Triality Authors
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

#include "triality/cli/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "triality/measures.hpp"

namespace triality::cli {

namespace {

std::string format_fixed(double x, int decimals) {
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::fixed, decimals);
  return std::string(buf.data(), res.ptr);
}

std::string optional_cell(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

nlohmann::json optional_json(const std::optional<double>& x) {
  return x ? nlohmann::json(clamp_roundoff(*x)) : nlohmann::json(nullptr);
}

// Swept coordinate of each record.
std::vector<double> x_values(const std::vector<SweepRecord>& records) {
  const bool single = std::all_of(records.begin(), records.end(),
                                  [](const SweepRecord& r) { return r.gamma.has_value(); });
  bool gamma1_varies = false;
  for (const SweepRecord& r : records) {
    gamma1_varies = gamma1_varies || (r.gamma1 && *r.gamma1 != records.front().gamma1.value_or(0.0));
  }
  std::vector<double> xs;
  for (const SweepRecord& r : records) {
    if (single) {
      xs.push_back(*r.gamma);
    } else {
      xs.push_back(gamma1_varies ? r.gamma1.value_or(0.0) : r.gamma2.value_or(0.0));
    }
  }
  return xs;
}

}  // namespace

std::string format_number(double x) {
  x = clamp_roundoff(x);
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 15);
  return std::string(buf.data(), res.ptr);
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const SweepRecord& r : records) {
    out += optional_cell(r.gamma) + ',' + optional_cell(r.gamma1) + ',' + optional_cell(r.gamma2) +
           ',' + format_number(r.v2) + ',' + format_number(r.p2) + ',' + format_number(r.e2) + ',' +
           format_number(r.sum) + ',' + optional_cell(r.v2_cf) + ',' + optional_cell(r.p2_cf) +
           ',' + optional_cell(r.e2_cf) + '\n';
  }
  return out;
}

std::string to_json(const std::vector<SweepRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRecord& r : records) {
    nlohmann::json o = nlohmann::json::object();
    o["gamma"] = optional_json(r.gamma);
    o["gamma1"] = optional_json(r.gamma1);
    o["gamma2"] = optional_json(r.gamma2);
    o["v2"] = clamp_roundoff(r.v2);
    o["p2"] = clamp_roundoff(r.p2);
    o["e2"] = clamp_roundoff(r.e2);
    o["sum"] = r.sum;
    o["v2_cf"] = optional_json(r.v2_cf);
    o["p2_cf"] = optional_json(r.p2_cf);
    o["e2_cf"] = optional_json(r.e2_cf);
    if (r.v2_unverified_claim) o["v2_unverified_claim"] = *r.v2_unverified_claim;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string to_svg(const std::vector<SweepRecord>& records, const std::string& title) {
  constexpr double kWidth = 640.0;
  constexpr double kHeight = 420.0;
  constexpr double kLeft = 70.0;
  constexpr double kRight = 150.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 60.0;
  constexpr double kYMax = 1.05;

  const std::vector<double> xs = x_values(records);
  double x_lo = xs.empty() ? 0.0 : *std::min_element(xs.begin(), xs.end());
  double x_hi = xs.empty() ? 1.0 : *std::max_element(xs.begin(), xs.end());
  if (x_hi - x_lo < 1e-12) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (1.0 - std::clamp(y, 0.0, kYMax) / kYMax) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\" font-family=\"sans-serif\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << title << "</text>\n";

  // Axes, ticks and grid.
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\"/>\n";
  svg << "</g>\n";
  svg << "<g font-size=\"11\" fill=\"black\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / 5.0;
    const double yv = 0.2 * i;
    svg << "<line x1=\"" << format_fixed(px(xv), 2) << "\" y1=\"" << kTop << "\" x2=\""
        << format_fixed(px(xv), 2) << "\" y2=\"" << kTop + plot_h
        << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << format_fixed(px(xv), 2) << "\" y=\"" << kTop + plot_h + 16
        << "\" text-anchor=\"middle\">" << format_fixed(xv, 2) << "</text>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << format_fixed(py(yv), 2) << "\" x2=\""
        << kLeft + plot_w << "\" y2=\"" << format_fixed(py(yv), 2) << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << format_fixed(py(yv) + 4, 2)
        << "\" text-anchor=\"end\">" << format_fixed(yv, 1) << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 18
      << "\" text-anchor=\"middle\" font-size=\"13\">γ</text>\n";
  svg << "<text x=\"18\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" font-size=\"13\" "
      << "transform=\"rotate(-90 18 " << kTop + plot_h / 2 << ")\">squared measure</text>\n";
  svg << "</g>\n";

  struct Curve {
    const char* name;
    const char* color;
    const char* dash;
    std::vector<std::optional<double>> ys;
  };
  std::vector<Curve> curves{{"V²", "#1f77b4", "", {}},
                            {"P²", "#d62728", "", {}},
                            {"ε²", "#2ca02c", "", {}},
                            {"sum", "#555555", "6 4", {}},
                            {"(1-γ)² claim", "#9467bd", "2 3", {}}};
  for (const SweepRecord& r : records) {
    curves[0].ys.push_back(r.v2);
    curves[1].ys.push_back(r.p2);
    curves[2].ys.push_back(r.e2);
    curves[3].ys.push_back(r.sum);
    curves[4].ys.push_back(r.v2_unverified_claim);
  }

  int legend_row = 0;
  for (const Curve& c : curves) {
    std::ostringstream pts;
    bool any = false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!c.ys[i]) continue;
      pts << (any ? " " : "") << format_fixed(px(xs[i]), 2) << "," << format_fixed(py(*c.ys[i]), 2);
      any = true;
    }
    if (!any) continue;
    svg << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"2\"";
    if (*c.dash) svg << " stroke-dasharray=\"" << c.dash << "\"";
    svg << " points=\"" << pts.str() << "\"/>\n";
    const double ly = kTop + 10 + 20 * legend_row++;
    const double lx = kLeft + plot_w + 15;
    svg << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 24 << "\" y2=\"" << ly
        << "\" stroke=\"" << c.color << "\" stroke-width=\"2\"";
    if (*c.dash) svg << " stroke-dasharray=\"" << c.dash << "\"";
    svg << "/>\n";
    svg << "<text x=\"" << lx + 30 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">" << c.name
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out << content;
  out.close();
  if (!out) throw IoError(path, "write failed");
}

std::vector<std::filesystem::path> emit_outputs(const std::vector<SweepRecord>& records,
                                                const std::vector<OutputFormat>& outputs,
                                                const std::filesystem::path& out_dir,
                                                const std::string& stem) {
  if (records.empty()) throw Error("emit_outputs: no records to write");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir, "cannot create output directory (" + ec.message() + ")");

  std::vector<std::filesystem::path> written;
  for (OutputFormat fmt : outputs) {
    std::filesystem::path path = out_dir;
    switch (fmt) {
      case OutputFormat::kCsv:
        path /= stem + ".csv";
        write_file(path, to_csv(records));
        break;
      case OutputFormat::kJson:
        path /= stem + ".json";
        write_file(path, to_json(records));
        break;
      case OutputFormat::kSvg:
        path /= stem + ".svg";
        write_file(path, to_svg(records, stem));
        break;
    }
    written.push_back(path);
  }
  return written;
}

}  // namespace triality::cli
