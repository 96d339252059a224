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


// Command-line front end: parameter sweeps, single evaluations, channel
// validation and the summation-convention discrepancy report.
//
// Exit codes: 0 success, 1 invalid arguments, 2 I/O, 3 empty result,
// 4 channel validation failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfi/channels.h"
#include "qfi/closed_forms.h"
#include "qfi/qfi_engine.h"
#include "qfi/sweep.h"

namespace {

enum ExitCode { kOk = 0, kInvalidArgs = 1, kIoFailure = 2, kEmptyResult = 3, kBadChannel = 4 };

struct CommonFlags {
  std::string state = "w";
  int n = 3;
  std::string channel = "dpc";
  std::string mode = "paper";
  double epsilon = qfi::kDefaultEpsilon;
  int n_m = 1;
};

struct SweepFlags {
  double p_start = 0.0;
  double p_end = 1.0;
  int steps = 101;
  std::string csv;
  std::string svg;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_mode) {
  cmd->add_option("--state", flags.state, "w | ghz | dicke:k | zero")->capture_default_str();
  cmd->add_option("--n", flags.n, "number of qubits")->capture_default_str();
  cmd->add_option("--channel", flags.channel, "dpc | adc | pdc | custom:<path> | all")
      ->capture_default_str();
  if (with_mode) {
    cmd->add_option("--mode", flags.mode, "paper | full | both")->capture_default_str();
  }
  cmd->add_option("--epsilon", flags.epsilon, "support tolerance")
      ->envname("QFI_EPSILON")
      ->capture_default_str();
  cmd->add_option("--n-m", flags.n_m, "repetitions for the Cramer-Rao bound")
      ->capture_default_str();
}

void add_sweep(CLI::App* cmd, SweepFlags& flags) {
  cmd->add_option("--p-start", flags.p_start)->capture_default_str();
  cmd->add_option("--p-end", flags.p_end)->capture_default_str();
  cmd->add_option("--steps", flags.steps)->capture_default_str();
  cmd->add_option("--csv", flags.csv, "CSV output path");
  cmd->add_option("--svg", flags.svg, "SVG output path");
  cmd->add_option("--threads", flags.threads, "worker threads, 0 = auto")->capture_default_str();
  // Read before parsing; see expand_config().
  cmd->add_option("--config", "key=value file using the long option names");
}

std::vector<qfi::ChannelSpec> channel_list(const std::string& text) {
  if (text == "all") {
    return {qfi::parse_channel_spec("dpc"), qfi::parse_channel_spec("adc"),
            qfi::parse_channel_spec("pdc")};
  }
  return {qfi::parse_channel_spec(text)};
}

qfi::SweepConfig make_config(const CommonFlags& common, const SweepFlags& sweep,
                             const qfi::ChannelSpec& channel) {
  qfi::SweepConfig cfg;
  cfg.state = qfi::parse_state_spec(common.state);
  cfg.n_qubits = common.n;
  cfg.channel = channel;
  cfg.p_start = sweep.p_start;
  cfg.p_end = sweep.p_end;
  cfg.steps = sweep.steps;
  cfg.mode = qfi::parse_mode_selection(common.mode);
  cfg.epsilon = common.epsilon;
  cfg.n_m = common.n_m;
  cfg.threads = sweep.threads;
  cfg.validate();
  return cfg;
}

// out.csv -> out_adc.csv
std::filesystem::path suffixed(const std::filesystem::path& path, std::string_view tag) {
  auto stem = path.stem().string() + "_" + std::string(tag);
  return path.parent_path() / (stem + path.extension().string());
}

std::optional<double> pure_marker(const CommonFlags& common) {
  const auto psi = qfi::make_state(qfi::parse_state_spec(common.state), common.n);
  const auto result =
      qfi::max_mean_qfi(qfi::density_from_pure(psi), qfi::SummationMode::full_spectrum);
  return result.mean_f;
}

int run_sweep_command(const CommonFlags& common, const SweepFlags& sweep) {
  const auto channels = channel_list(common.channel);
  std::vector<qfi::PlotSeries> series;
  for (const auto& channel : channels) {
    const auto cfg = make_config(common, sweep, channel);
    const auto rows = qfi::run_sweep(cfg);
    if (!sweep.csv.empty()) {
      const std::filesystem::path path =
          channels.size() > 1 ? suffixed(sweep.csv, qfi::to_string(channel.kind))
                              : std::filesystem::path(sweep.csv);
      qfi::emit_csv(rows, path);
    } else if (sweep.svg.empty()) {
      std::cout << qfi::csv_text(rows);
    }
    for (auto& s : qfi::series_from_rows(channel.kind, rows)) series.push_back(std::move(s));
  }
  if (!sweep.svg.empty()) {
    qfi::PlotOptions options;
    options.pure_marker = pure_marker(common);
    qfi::emit_svg(series, sweep.svg, options);
  }
  return kOk;
}

int run_report_command(CommonFlags common, const SweepFlags& sweep) {
  common.mode = "both";
  for (const auto& channel : channel_list(common.channel)) {
    const auto cfg = make_config(common, sweep, channel);
    const auto report = qfi::discrepancy_report(cfg);
    std::cout << qfi::format_report(report, "state=" + qfi::to_string(cfg.state) +
                                                " n=" + std::to_string(cfg.n_qubits) +
                                                " channel=" + qfi::to_string(channel))
              << '\n';
  }
  return kOk;
}

qfi::Direction parse_direction(const std::string& text) {
  if (text == "x") return qfi::Direction::along(qfi::Axis::x);
  if (text == "y") return qfi::Direction::along(qfi::Axis::y);
  if (text == "z") return qfi::Direction::along(qfi::Axis::z);
  double v[3];
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &v[0], &v[1], &v[2], &tail) != 3) {
    throw std::invalid_argument("direction must be x, y, z or \"nx,ny,nz\"");
  }
  return qfi::Direction::normalized(v[0], v[1], v[2]);
}

int run_qfi_command(const CommonFlags& common, double p, const std::string& direction) {
  const auto psi = qfi::make_state(qfi::parse_state_spec(common.state), common.n);
  qfi::DensityMatrix rho = qfi::density_from_pure(psi);
  if (common.channel != "none") {
    const auto spec = qfi::parse_channel_spec(common.channel);
    rho = qfi::apply_uniform(rho, qfi::ChannelFamily(spec).at(p));
  }
  const auto selection = qfi::parse_mode_selection(common.mode);
  for (const auto mode : qfi::modes_for(selection)) {
    const auto result = qfi::max_mean_qfi(rho, mode, common.epsilon);
    const auto& c = result.c_matrix;
    std::printf("mode: %s\n", std::string(qfi::to_string(mode)).c_str());
    for (std::size_t k = 0; k < 3; ++k) {
      std::printf("  C[%zu]: % .12g % .12g % .12g\n", k, c(k, 0), c(k, 1), c(k, 2));
    }
    std::printf("  c_max: %.12g\n  mean_f: %.12g\n  classification: %s\n", result.c_max,
                result.mean_f, std::string(qfi::to_string(result.classification)).c_str());
    if (result.f_max > 1e-12) {
      std::printf("  qcrb: %.12g\n", qfi::qcrb(result.f_max, common.n_m));
    } else {
      std::printf("  qcrb: inf\n");
    }
    if (!direction.empty()) {
      std::printf("  qfi_along(%s): %.12g\n", direction.c_str(),
                  c.along(parse_direction(direction)));
    }
  }
  return kOk;
}

int run_validate_command(const std::string& channel, double p) {
  const auto spec = qfi::parse_channel_spec(channel);
  qfi::KrausChannel ch;
  if (spec.kind == qfi::ChannelKind::custom) {
    ch = qfi::custom_channel(qfi::load_kraus_file(spec.custom_path));
  } else {
    ch = qfi::ChannelFamily(spec).at(p);
  }
  const auto report = qfi::validate(ch);
  std::printf("channel: %s\noperators: %zu\nmax_deviation: %.3g\nstatus: %s\n",
              qfi::to_string(spec).c_str(), ch.operators.size(), report.max_deviation,
              report.ok ? "ok" : "violation");
  if (!report.ok) std::fprintf(stderr, "%s\n", report.message.c_str());
  return report.ok ? kOk : kBadChannel;
}

// Splices `--config FILE` entries in front of the command-line flags so
// explicit flags override them, and both override QFI_EPSILON.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  for (std::size_t i = 2; i < args.size(); ++i) {
    std::string path;
    std::size_t consumed = 0;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      consumed = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      consumed = 1;
    } else {
      continue;
    }
    if (!std::filesystem::exists(path)) throw qfi::IoError("cannot read config file " + path);
    std::vector<std::string> injected;
    for (const auto& item : CLI::ConfigINI().from_file(path)) {
      if (item.name == "++" || item.name == "--") continue;
      injected.push_back("--" + item.name);
      injected.insert(injected.end(), item.inputs.begin(), item.inputs.end());
    }
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
               args.begin() + static_cast<std::ptrdiff_t>(i + consumed));
    args.insert(args.begin() + 2, injected.begin(), injected.end());
    break;
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Fisher information of multiqubit states under decoherence"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  CommonFlags sweep_common;
  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "sweep decoherence strength, emit CSV and SVG");
  add_common(sweep, sweep_common, true);
  add_sweep(sweep, sweep_flags);

  CommonFlags report_common;
  SweepFlags report_flags;
  auto* report = app.add_subcommand("report", "paper vs full summation discrepancy table");
  add_common(report, report_common, false);
  add_sweep(report, report_flags);

  CommonFlags qfi_common;
  qfi_common.channel = "none";
  double qfi_p = 0.0;
  std::string qfi_direction;
  auto* single = app.add_subcommand("qfi", "evaluate one state at one strength");
  add_common(single, qfi_common, true);
  single->add_option("--p", qfi_p, "decoherence strength")->capture_default_str();
  single->add_option("--direction", qfi_direction, "x | y | z | nx,ny,nz");

  std::string validate_channel;
  double validate_p = 0.5;
  auto* validate = app.add_subcommand("validate-channel", "check Kraus completeness");
  validate->add_option("--channel", validate_channel, "dpc | adc | pdc | custom:<path>")
      ->required();
  validate->add_option("--p", validate_p)->capture_default_str();

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoFailure;
  }
  std::vector<char*> expanded;
  for (auto& a : args) expanded.push_back(a.data());

  try {
    app.parse(static_cast<int>(expanded.size()), expanded.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidArgs;
  }

  try {
    if (*sweep) return run_sweep_command(sweep_common, sweep_flags);
    if (*report) return run_report_command(report_common, report_flags);
    if (*single) return run_qfi_command(qfi_common, qfi_p, qfi_direction);
    if (*validate) return run_validate_command(validate_channel, validate_p);
  } catch (const qfi::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const qfi::EmptyResultError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEmptyResult;
  } catch (const qfi::ChannelValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadChannel;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidArgs;
  }
  return kInvalidArgs;
}
