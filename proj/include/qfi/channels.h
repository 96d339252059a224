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


#ifndef QFI_CHANNELS_H_
#define QFI_CHANNELS_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfi/errors.h"
#include "qfi/matcore.h"
#include "qfi/states.h"

namespace qfi {

enum class ChannelKind { depolarizing, amplitude_damping, phase_damping, custom };

std::string_view to_string(ChannelKind kind);

/// Single-qubit channel in Kraus form, eps(rho) = sum_mu E_mu rho E_mu^dagger.
/// Operators that vanish at a given strength are kept.
struct KrausChannel {
  ChannelKind kind = ChannelKind::custom;
  double strength = 0.0;
  std::vector<ComplexMatrix> operators;
};

/// Raised when a channel fails the completeness check and cannot be applied.
class ChannelValidationError : public std::runtime_error {
 public:
  ChannelValidationError(const std::string& message, double deviation)
      : std::runtime_error(message), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/// Malformed Kraus operator text.
class ChannelParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kCompletenessTol = 1e-12;

struct ChannelReport {
  bool ok = false;
  /// max |(sum_mu E_mu^dagger E_mu - I)_ij|.
  double max_deviation = 0.0;
  std::string message;
};

KrausChannel depolarizing(double p);
KrausChannel amplitude_damping(double p);
KrausChannel phase_damping(double p);
/// Wraps arbitrary 2x2 operators; completeness is checked by validate().
KrausChannel custom_channel(std::vector<ComplexMatrix> operators);
/// (1 - p) id + p * base, i.e. Kraus set {sqrt(1-p) I, sqrt(p) E_mu}.
KrausChannel blend_with_identity(const KrausChannel& base, double p);

/// p = 1 - exp(-gamma t / 2).
double damping_rate_to_p(double gamma, double t);

ChannelReport validate(const KrausChannel& channel, double tol = kCompletenessTol);
/// sum_mu E_mu^dagger E_mu.
ComplexMatrix completeness_sum(const KrausChannel& channel);

/// Applies the channel to one qubit of an n-qubit operator.
ComplexMatrix apply_to_qubit(const ComplexMatrix& rho, const KrausChannel& channel, int qubit);

/// Applies the channel independently to every qubit. Throws
/// ChannelValidationError for channels that fail validate().
DensityMatrix apply_uniform(const DensityMatrix& rho, const KrausChannel& channel);

/// Parses blank-line separated 2x2 blocks, each row written "re,im re,im".
/// Lines starting with '#' are ignored.
std::vector<ComplexMatrix> parse_kraus_text(std::string_view text);
std::vector<ComplexMatrix> load_kraus_file(const std::filesystem::path& path);

}  // namespace qfi

#endif  // QFI_CHANNELS_H_
