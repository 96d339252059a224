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


#include "qfi/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace qfi {

namespace {

int parse_int(std::string_view text, const char* what) {
  std::string buf(text);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(buf, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != buf.size()) {
    throw std::invalid_argument(std::string(what) + ": bad integer \"" + buf + "\"");
  }
  return value;
}

double parse_double(std::string_view text, const char* what) {
  std::string buf(text);
  if (buf == "inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(buf, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != buf.size()) {
    throw std::invalid_argument(std::string(what) + ": bad number \"" + buf + "\"");
  }
  return value;
}

// Rounding noise around zero is printed as 0.
double snap(double x) { return std::abs(x) < 1e-13 ? 0.0 : x; }

void append_number(std::string& out, double x) {
  if (std::isinf(x)) {
    out += x > 0 ? "inf" : "-inf";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  out += buf;
}

SummationMode parse_summation_mode(std::string_view text) {
  if (text == "paper") return SummationMode::paper_support;
  if (text == "full") return SummationMode::full_spectrum;
  throw std::invalid_argument("unknown summation mode \"" + std::string(text) + "\"");
}

Classification parse_classification(std::string_view text) {
  for (const auto c : {Classification::below_shot_noise, Classification::shot_noise,
                       Classification::useful_entangled, Classification::heisenberg}) {
    if (to_string(c) == text) return c;
  }
  throw std::invalid_argument("unknown classification \"" + std::string(text) + "\"");
}

std::vector<SweepRow> evaluate_point(const DensityMatrix& initial, const ChannelFamily& family,
                                     const SweepConfig& cfg, double p) {
  const DensityMatrix evolved = apply_uniform(initial, family.at(p));
  const auto spectrum = hermitian_eig(evolved.matrix());
  std::vector<SweepRow> rows;
  for (const auto mode : modes_for(cfg.mode)) {
    const auto c = c_matrix(spectrum, evolved.n_qubits(), mode, cfg.epsilon);
    rows.push_back(make_row(p, summarize(c, evolved.n_qubits(), mode, cfg.epsilon), cfg.n_m));
  }
  return rows;
}

Jump largest_jump(const std::vector<DiscrepancyEntry>& entries, bool paper) {
  Jump best;
  for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
    const double from = paper ? entries[k].mean_paper : entries[k].mean_full;
    const double to = paper ? entries[k + 1].mean_paper : entries[k + 1].mean_full;
    if (k == 0 || std::abs(to - from) > std::abs(best.size)) {
      best = {entries[k].p, entries[k + 1].p, to - from};
    }
  }
  return best;
}

}  // namespace

StateSpec parse_state_spec(std::string_view text) {
  if (text == "w") return {StateKind::w, 1};
  if (text == "ghz") return {StateKind::ghz, 0};
  if (text == "zero") return {StateKind::zero, 0};
  constexpr std::string_view kDicke = "dicke:";
  if (text.substr(0, kDicke.size()) == kDicke) {
    return {StateKind::dicke, parse_int(text.substr(kDicke.size()), "state dicke:k")};
  }
  throw std::invalid_argument("unknown state \"" + std::string(text) +
                              "\" (expected w, ghz, dicke:k or zero)");
}

std::string to_string(const StateSpec& spec) {
  switch (spec.kind) {
    case StateKind::w:
      return "w";
    case StateKind::ghz:
      return "ghz";
    case StateKind::zero:
      return "zero";
    case StateKind::dicke:
      break;
  }
  return "dicke:" + std::to_string(spec.excitations);
}

PureState make_state(const StateSpec& spec, int n_qubits) {
  switch (spec.kind) {
    case StateKind::w:
      return w_state(n_qubits);
    case StateKind::ghz:
      return ghz_state(n_qubits);
    case StateKind::zero:
      return product_state_all_zero(n_qubits);
    case StateKind::dicke:
      break;
  }
  return dicke_state(n_qubits, spec.excitations);
}

ChannelSpec parse_channel_spec(std::string_view text) {
  if (text == "dpc") return {ChannelKind::depolarizing, {}};
  if (text == "adc") return {ChannelKind::amplitude_damping, {}};
  if (text == "pdc") return {ChannelKind::phase_damping, {}};
  constexpr std::string_view kCustom = "custom:";
  if (text.substr(0, kCustom.size()) == kCustom && text.size() > kCustom.size()) {
    return {ChannelKind::custom, std::filesystem::path(text.substr(kCustom.size()))};
  }
  throw std::invalid_argument("unknown channel \"" + std::string(text) +
                              "\" (expected dpc, adc, pdc or custom:<path>)");
}

std::string to_string(const ChannelSpec& spec) {
  if (spec.kind == ChannelKind::custom) return "custom:" + spec.custom_path.string();
  return std::string(to_string(spec.kind));
}

ChannelFamily::ChannelFamily(const ChannelSpec& spec) : kind_(spec.kind) {
  if (spec.kind != ChannelKind::custom) return;
  custom_ = custom_channel(load_kraus_file(spec.custom_path));
  const auto report = validate(*custom_);
  if (!report.ok) {
    throw ChannelValidationError(spec.custom_path.string() + ": " + report.message,
                                 report.max_deviation);
  }
}

KrausChannel ChannelFamily::at(double p) const {
  switch (kind_) {
    case ChannelKind::depolarizing:
      return depolarizing(p);
    case ChannelKind::amplitude_damping:
      return amplitude_damping(p);
    case ChannelKind::phase_damping:
      return phase_damping(p);
    case ChannelKind::custom:
      break;
  }
  return blend_with_identity(*custom_, p);
}

ModeSelection parse_mode_selection(std::string_view text) {
  if (text == "paper") return ModeSelection::paper;
  if (text == "full") return ModeSelection::full;
  if (text == "both") return ModeSelection::both;
  throw std::invalid_argument("unknown mode \"" + std::string(text) +
                              "\" (expected paper, full or both)");
}

std::string_view to_string(ModeSelection selection) {
  switch (selection) {
    case ModeSelection::paper:
      return "paper";
    case ModeSelection::full:
      return "full";
    case ModeSelection::both:
      break;
  }
  return "both";
}

std::vector<SummationMode> modes_for(ModeSelection selection) {
  switch (selection) {
    case ModeSelection::paper:
      return {SummationMode::paper_support};
    case ModeSelection::full:
      return {SummationMode::full_spectrum};
    case ModeSelection::both:
      break;
  }
  return {SummationMode::paper_support, SummationMode::full_spectrum};
}

void SweepConfig::validate() const {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("n must lie in [1, " + std::to_string(kMaxQubits) + "]");
  }
  if (!(p_start >= 0.0 && p_start <= 1.0) || !(p_end >= 0.0 && p_end <= 1.0)) {
    throw std::invalid_argument("p-start and p-end must lie in [0, 1]");
  }
  if (p_start > p_end) throw std::invalid_argument("p-start must not exceed p-end");
  if (steps < 2) throw std::invalid_argument("steps must be at least 2");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (n_m < 1) throw std::invalid_argument("n-m must be at least 1");
  if (threads < 0) throw std::invalid_argument("threads must be nonnegative");
  if ((state.kind == StateKind::w || state.kind == StateKind::ghz) && n_qubits < 2) {
    throw std::invalid_argument("w and ghz states need n >= 2");
  }
  if (state.kind == StateKind::dicke && (state.excitations < 0 || state.excitations > n_qubits)) {
    throw std::invalid_argument("dicke:k needs 0 <= k <= n");
  }
}

std::vector<double> SweepConfig::grid() const {
  std::vector<double> points(static_cast<std::size_t>(steps));
  const double span = p_end - p_start;
  for (int k = 0; k < steps; ++k) {
    points[static_cast<std::size_t>(k)] = p_start + span * k / (steps - 1);
  }
  points.back() = p_end;
  return points;
}

SweepRow make_row(double p, const QfiResult& result, int n_m) {
  SweepRow row;
  row.p = p;
  row.mode = result.mode;
  row.c_xx = result.c_matrix(Axis::x, Axis::x);
  row.c_yy = result.c_matrix(Axis::y, Axis::y);
  row.c_zz = result.c_matrix(Axis::z, Axis::z);
  row.c_max = result.c_max;
  row.f_max = result.f_max;
  row.mean_f = result.mean_f;
  row.qcrb = result.f_max > 1e-12 ? qcrb(result.f_max, n_m)
                                  : std::numeric_limits<double>::infinity();
  row.classification = result.classification;
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const ChannelFamily family(cfg.channel);
  const DensityMatrix initial = density_from_pure(make_state(cfg.state, cfg.n_qubits));
  const auto grid = cfg.grid();

  std::vector<std::vector<SweepRow>> per_point(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        per_point[i] = evaluate_point(initial, family, cfg, grid[i]);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  std::size_t workers = cfg.threads == 0 ? std::thread::hardware_concurrency()
                                         : static_cast<std::size_t>(cfg.threads);
  workers = std::clamp<std::size_t>(workers, 1, grid.size());
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRow> rows;
  for (auto& point : per_point) rows.insert(rows.end(), point.begin(), point.end());
  if (rows.empty()) throw EmptyResultError("sweep produced no rows");
  return rows;
}

std::string csv_text(std::span<const SweepRow> rows) {
  if (rows.empty()) throw EmptyResultError("refusing to write an empty CSV");
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : rows) {
    append_number(out, row.p);
    out += ',';
    out += to_string(row.mode);
    for (const double x : {row.c_xx, row.c_yy, row.c_zz, row.c_max, row.f_max, row.mean_f}) {
      out += ',';
      append_number(out, snap(x));
    }
    out += ',';
    append_number(out, row.qcrb);
    out += ',';
    out += to_string(row.classification);
    out += '\n';
  }
  return out;
}

void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path& path) {
  const std::string text = csv_text(rows);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("parse_csv: missing or unexpected header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    if (fields.size() != 10) {
      throw std::invalid_argument("parse_csv: expected 10 fields in \"" + line + "\"");
    }
    SweepRow row;
    row.p = parse_double(fields[0], "p");
    row.mode = parse_summation_mode(fields[1]);
    row.c_xx = parse_double(fields[2], "c_xx");
    row.c_yy = parse_double(fields[3], "c_yy");
    row.c_zz = parse_double(fields[4], "c_zz");
    row.c_max = parse_double(fields[5], "c_max");
    row.f_max = parse_double(fields[6], "f_max");
    row.mean_f = parse_double(fields[7], "mean_f");
    row.qcrb = parse_double(fields[8], "qcrb");
    row.classification = parse_classification(fields[9]);
    rows.push_back(row);
  }
  return rows;
}

std::vector<PlotSeries> series_from_rows(ChannelKind channel, std::span<const SweepRow> rows) {
  std::vector<PlotSeries> series;
  for (const auto mode : {SummationMode::paper_support, SummationMode::full_spectrum}) {
    PlotSeries s{channel, mode, {}, {}};
    for (const auto& row : rows) {
      if (row.mode != mode) continue;
      s.p.push_back(row.p);
      s.mean_f.push_back(row.mean_f);
    }
    if (!s.p.empty()) series.push_back(std::move(s));
  }
  return series;
}

DiscrepancyReport discrepancy_report(std::span<const SweepRow> rows) {
  DiscrepancyReport report;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].mode != SummationMode::paper_support) continue;
    if (i + 1 >= rows.size() || rows[i + 1].mode != SummationMode::full_spectrum ||
        rows[i + 1].p != rows[i].p) {
      throw std::invalid_argument("discrepancy_report: rows must pair paper and full modes");
    }
    const double paper = rows[i].mean_f;
    const double full = rows[i + 1].mean_f;
    report.entries.push_back({rows[i].p, paper, full, std::abs(full - paper)});
  }
  if (report.entries.empty()) {
    throw EmptyResultError("discrepancy_report: no paired rows");
  }
  report.paper_jump = largest_jump(report.entries, true);
  report.full_jump = largest_jump(report.entries, false);
  return report;
}

DiscrepancyReport discrepancy_report(const SweepConfig& cfg) {
  if (cfg.mode != ModeSelection::both) {
    throw std::invalid_argument("discrepancy_report: mode must be both");
  }
  const auto rows = run_sweep(cfg);
  return discrepancy_report(rows);
}

std::string format_report(const DiscrepancyReport& report, std::string_view heading) {
  std::string out;
  char buf[160];
  out += heading;
  out += '\n';
  std::snprintf(buf, sizeof buf, "%-10s %-14s %-14s %-14s\n", "p", "mean_paper", "mean_full",
                "|full-paper|");
  out += buf;
  for (const auto& e : report.entries) {
    std::snprintf(buf, sizeof buf, "%-10.6g %-14.8g %-14.8g %-14.8g\n", e.p, snap(e.mean_paper),
                  snap(e.mean_full), snap(e.gap));
    out += buf;
  }
  const auto jump_line = [&](const char* name, const Jump& j) {
    std::snprintf(buf, sizeof buf, "largest %s-mode jump: %.8g between p=%.6g and p=%.6g\n", name,
                  snap(j.size), j.p_from, j.p_to);
    out += buf;
  };
  jump_line("paper", report.paper_jump);
  jump_line("full", report.full_jump);
  return out;
}

}  // namespace qfi
