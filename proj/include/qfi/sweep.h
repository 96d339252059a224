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


#ifndef QFI_SWEEP_H_
#define QFI_SWEEP_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfi/channels.h"
#include "qfi/errors.h"
#include "qfi/qfi_engine.h"
#include "qfi/states.h"

namespace qfi {

enum class StateKind { w, ghz, dicke, zero };

/// "w", "ghz", "dicke:k" or "zero".
struct StateSpec {
  StateKind kind = StateKind::w;
  int excitations = 0;
};

StateSpec parse_state_spec(std::string_view text);
std::string to_string(const StateSpec& spec);
PureState make_state(const StateSpec& spec, int n_qubits);

/// "dpc", "adc", "pdc" or "custom:<path>". A custom channel file holds the
/// Kraus set of the fully decohering map; strength p blends it with the
/// identity channel.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::depolarizing;
  std::filesystem::path custom_path;
};

ChannelSpec parse_channel_spec(std::string_view text);
std::string to_string(const ChannelSpec& spec);

/// A channel family resolved once (custom files loaded and validated) and
/// instantiated per strength.
class ChannelFamily {
 public:
  /// Throws IoError, ChannelParseError or ChannelValidationError.
  explicit ChannelFamily(const ChannelSpec& spec);
  KrausChannel at(double p) const;
  ChannelKind kind() const { return kind_; }

 private:
  ChannelKind kind_;
  std::optional<KrausChannel> custom_;
};

enum class ModeSelection { paper, full, both };

ModeSelection parse_mode_selection(std::string_view text);
std::string_view to_string(ModeSelection selection);
/// Modes in emission order: paper before full.
std::vector<SummationMode> modes_for(ModeSelection selection);

struct SweepConfig {
  StateSpec state;
  int n_qubits = 3;
  ChannelSpec channel;
  double p_start = 0.0;
  double p_end = 1.0;
  int steps = 101;
  ModeSelection mode = ModeSelection::paper;
  double epsilon = kDefaultEpsilon;
  /// Number of repetitions entering the Cramer-Rao bound column.
  int n_m = 1;
  /// Worker threads; 0 picks the hardware concurrency, 1 runs serially.
  int threads = 0;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  /// p_start + k (p_end - p_start) / (steps - 1), k = 0 .. steps - 1.
  std::vector<double> grid() const;
};

struct SweepRow {
  double p = 0.0;
  SummationMode mode = SummationMode::paper_support;
  double c_xx = 0.0;
  double c_yy = 0.0;
  double c_zz = 0.0;
  double c_max = 0.0;
  double f_max = 0.0;
  double mean_f = 0.0;
  /// +inf when f_max carries no phase information.
  double qcrb = 0.0;
  Classification classification = Classification::below_shot_noise;
};

class EmptyResultError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rows ordered by p ascending, paper before full at each p.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

SweepRow make_row(double p, const QfiResult& result, int n_m);

inline constexpr std::string_view kCsvHeader =
    "p,mode,c_xx,c_yy,c_zz,c_max,f_max,mean_f,qcrb,classification";

/// Throws EmptyResultError for an empty row set.
std::string csv_text(std::span<const SweepRow> rows);
/// Throws EmptyResultError or IoError.
void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path& path);
/// Parses text produced by csv_text.
std::vector<SweepRow> parse_csv(std::string_view text);

/// One curve of the decoherence figure.
struct PlotSeries {
  ChannelKind channel = ChannelKind::depolarizing;
  SummationMode mode = SummationMode::paper_support;
  std::vector<double> p;
  std::vector<double> mean_f;
};

/// One series per mode present in `rows`.
std::vector<PlotSeries> series_from_rows(ChannelKind channel, std::span<const SweepRow> rows);

struct PlotOptions {
  std::string title = "Mean QFI vs decoherence strength";
  /// Black marker at (0, value); the pure-state mean QFI.
  std::optional<double> pure_marker = 7.0 / 3.0;
};

/// Self-contained SVG. Green, blue and red polylines for depolarizing,
/// amplitude damping and phase damping; full_spectrum curves are dashed.
/// Throws std::invalid_argument for an empty series list.
std::string render_svg(std::span<const PlotSeries> series, const PlotOptions& options = {});
void emit_svg(std::span<const PlotSeries> series, const std::filesystem::path& path,
              const PlotOptions& options = {});

struct Jump {
  double p_from = 0.0;
  double p_to = 0.0;
  /// Signed change mean_f(p_to) - mean_f(p_from).
  double size = 0.0;
};

struct DiscrepancyEntry {
  double p = 0.0;
  double mean_paper = 0.0;
  double mean_full = 0.0;
  double gap = 0.0;
};

struct DiscrepancyReport {
  std::vector<DiscrepancyEntry> entries;
  /// Largest adjacent-step change of each curve.
  Jump paper_jump;
  Jump full_jump;
};

/// Requires rows holding both modes at every grid point.
DiscrepancyReport discrepancy_report(std::span<const SweepRow> rows);
/// Runs the sweep with both modes; cfg.mode must be ModeSelection::both.
DiscrepancyReport discrepancy_report(const SweepConfig& cfg);
std::string format_report(const DiscrepancyReport& report, std::string_view heading);

}  // namespace qfi

#endif  // QFI_SWEEP_H_
