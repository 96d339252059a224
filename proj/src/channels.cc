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


#include "qfi/channels.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qfi/collective.h"

namespace qfi {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": strength " + std::to_string(p) +
                                " outside [0, 1]");
  }
}

ComplexMatrix projector(int level) {
  ComplexMatrix m(2, 2);
  m(level, level) = 1.0;
  return m;
}

Complex parse_complex_token(std::string_view token, std::size_t line_no) {
  const auto comma = token.find(',');
  if (comma == std::string_view::npos) {
    throw ChannelParseError("line " + std::to_string(line_no) + ": expected \"re,im\", got \"" +
                            std::string(token) + "\"");
  }
  const auto parse_part = [&](std::string_view part) {
    std::string buf(part);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(buf, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != buf.size()) {
      throw ChannelParseError("line " + std::to_string(line_no) + ": bad number \"" + buf + "\"");
    }
    return value;
  };
  return {parse_part(token.substr(0, comma)), parse_part(token.substr(comma + 1))};
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::depolarizing:
      return "dpc";
    case ChannelKind::amplitude_damping:
      return "adc";
    case ChannelKind::phase_damping:
      return "pdc";
    case ChannelKind::custom:
      return "custom";
  }
  return "custom";
}

KrausChannel depolarizing(double p) {
  require_probability(p, "depolarizing");
  const double id_weight = std::sqrt(1.0 - 0.75 * p);
  const double pauli_weight = std::sqrt(p / 4.0);
  return {ChannelKind::depolarizing,
          p,
          {ComplexMatrix::identity(2) * id_weight, pauli(Axis::x) * pauli_weight,
           pauli(Axis::y) * pauli_weight, pauli(Axis::z) * pauli_weight}};
}

KrausChannel amplitude_damping(double p) {
  require_probability(p, "amplitude_damping");
  ComplexMatrix keep{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}};
  ComplexMatrix decay{{0.0, std::sqrt(p)}, {0.0, 0.0}};
  return {ChannelKind::amplitude_damping, p, {std::move(keep), std::move(decay)}};
}

KrausChannel phase_damping(double p) {
  require_probability(p, "phase_damping");
  return {ChannelKind::phase_damping,
          p,
          {ComplexMatrix::identity(2) * std::sqrt(1.0 - p), projector(0) * std::sqrt(p),
           projector(1) * std::sqrt(p)}};
}

KrausChannel custom_channel(std::vector<ComplexMatrix> operators) {
  for (const auto& op : operators) {
    if (op.rows() != 2 || op.cols() != 2) {
      throw DimensionError("custom_channel: Kraus operators must be 2x2");
    }
  }
  return {ChannelKind::custom, 1.0, std::move(operators)};
}

KrausChannel blend_with_identity(const KrausChannel& base, double p) {
  require_probability(p, "blend_with_identity");
  KrausChannel out{base.kind, p, {ComplexMatrix::identity(2) * std::sqrt(1.0 - p)}};
  for (const auto& op : base.operators) out.operators.push_back(op * std::sqrt(p));
  return out;
}

double damping_rate_to_p(double gamma, double t) {
  if (!(gamma >= 0.0) || !(t >= 0.0)) {
    throw std::invalid_argument("damping_rate_to_p: gamma and t must be nonnegative");
  }
  return -std::expm1(-gamma * t / 2.0);
}

ComplexMatrix completeness_sum(const KrausChannel& channel) {
  ComplexMatrix sum(2, 2);
  for (const auto& op : channel.operators) sum += matmul(adjoint(op), op);
  return sum;
}

ChannelReport validate(const KrausChannel& channel, double tol) {
  ChannelReport report;
  if (channel.operators.empty()) {
    report.max_deviation = 1.0;
    report.message = "channel has no Kraus operators";
    return report;
  }
  for (const auto& op : channel.operators) {
    if (op.rows() != 2 || op.cols() != 2) {
      report.max_deviation = 1.0;
      report.message = "Kraus operators must be 2x2";
      return report;
    }
  }
  if (!(channel.strength >= 0.0 && channel.strength <= 1.0)) {
    report.max_deviation = 1.0;
    report.message = "strength outside [0, 1]";
    return report;
  }
  report.max_deviation = max_abs_diff(completeness_sum(channel), ComplexMatrix::identity(2));
  report.ok = report.max_deviation <= tol;
  report.message = report.ok ? "completeness holds"
                             : "sum of E^dagger E deviates from identity by " +
                                   std::to_string(report.max_deviation);
  return report;
}

ComplexMatrix apply_to_qubit(const ComplexMatrix& rho, const KrausChannel& channel, int qubit) {
  const int n = qubits_for_dimension(rho.rows());
  if (!rho.is_square() || qubit < 0 || qubit >= n) {
    throw DimensionError("apply_to_qubit: qubit index out of range");
  }
  const std::size_t dim = rho.rows();
  const std::size_t mask = std::size_t{1} << (n - 1 - qubit);

  ComplexMatrix out(dim, dim);
  ComplexMatrix left(dim, dim);
  for (const auto& e : channel.operators) {
    // left = E_q rho
    for (std::size_t r0 = 0; r0 < dim; ++r0) {
      if (r0 & mask) continue;
      const std::size_t r1 = r0 | mask;
      for (std::size_t c = 0; c < dim; ++c) {
        const Complex x0 = rho(r0, c);
        const Complex x1 = rho(r1, c);
        left(r0, c) = e(0, 0) * x0 + e(0, 1) * x1;
        left(r1, c) = e(1, 0) * x0 + e(1, 1) * x1;
      }
    }
    // out += left E_q^dagger
    const Complex d00 = std::conj(e(0, 0));
    const Complex d01 = std::conj(e(0, 1));
    const Complex d10 = std::conj(e(1, 0));
    const Complex d11 = std::conj(e(1, 1));
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c0 = 0; c0 < dim; ++c0) {
        if (c0 & mask) continue;
        const std::size_t c1 = c0 | mask;
        const Complex y0 = left(r, c0);
        const Complex y1 = left(r, c1);
        out(r, c0) += y0 * d00 + y1 * d01;
        out(r, c1) += y0 * d10 + y1 * d11;
      }
    }
  }
  return out;
}

DensityMatrix apply_uniform(const DensityMatrix& rho, const KrausChannel& channel) {
  const auto report = validate(channel);
  if (!report.ok) {
    throw ChannelValidationError("cannot apply channel: " + report.message, report.max_deviation);
  }
  ComplexMatrix current = rho.matrix();
  for (int q = 0; q < rho.n_qubits(); ++q) current = apply_to_qubit(current, channel, q);
  return DensityMatrix::trusted(std::move(current));
}

std::vector<ComplexMatrix> parse_kraus_text(std::string_view text) {
  std::vector<ComplexMatrix> operators;
  std::vector<std::vector<Complex>> rows;

  const auto flush = [&](std::size_t line_no) {
    if (rows.empty()) return;
    if (rows.size() != 2) {
      throw ChannelParseError("block ending at line " + std::to_string(line_no) + " has " +
                              std::to_string(rows.size()) + " rows, expected 2");
    }
    operators.push_back(ComplexMatrix{{rows[0][0], rows[0][1]}, {rows[1][0], rows[1][1]}});
    rows.clear();
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      flush(line_no);
      continue;
    }
    if (line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<Complex> row;
    std::string token;
    while (tokens >> token) row.push_back(parse_complex_token(token, line_no));
    if (row.size() != 2) {
      throw ChannelParseError("line " + std::to_string(line_no) + ": expected 2 entries, got " +
                              std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  flush(line_no);
  if (operators.empty()) throw ChannelParseError("no Kraus operators found");
  return operators;
}

std::vector<ComplexMatrix> load_kraus_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read channel file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kraus_text(buf.str());
}

}  // namespace qfi
