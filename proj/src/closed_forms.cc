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


#include "qfi/closed_forms.h"

#include <stdexcept>
#include <string>

namespace qfi::closed_forms {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": p outside [0, 1]");
  }
}

}  // namespace

W3Spectrum w3_dpc_eigenvalues(double p) {
  require_probability(p, "w3_dpc_eigenvalues");
  const double p2 = p * p;
  const double p3 = p2 * p;
  const double l1 = (-2.0 + p) * (-2.0 + p) * p / 8.0;
  const double l2 = -(-2.0 + p) * p2 / 8.0;
  const double l34 = p * (8.0 - 6.0 * p + p2) / 24.0;
  const double l5 = p * (16.0 - 24.0 * p + 11.0 * p2) / 24.0;
  const double l6 = (24.0 - 52.0 * p + 42.0 * p2 - 11.0 * p3) / 24.0;
  const double l78 = (4.0 * p - p3) / 24.0;
  return {l1, l2, l34, l34, l5, l6, l78, l78};
}

W3Spectrum w3_adc_eigenvalues(double p) {
  require_probability(p, "w3_adc_eigenvalues");
  return {1.0 - p, p, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
}

W3Spectrum w3_pdc_eigenvalues(double p) {
  require_probability(p, "w3_pdc_eigenvalues");
  const double small = (2.0 * p - p * p) / 3.0;
  return {small, small, (3.0 - 4.0 * p + 2.0 * p * p) / 3.0, 0.0, 0.0, 0.0, 0.0, 0.0};
}

W3Spectrum w3_eigenvalues(ChannelKind kind, double p) {
  switch (kind) {
    case ChannelKind::depolarizing:
      return w3_dpc_eigenvalues(p);
    case ChannelKind::amplitude_damping:
      return w3_adc_eigenvalues(p);
    case ChannelKind::phase_damping:
      return w3_pdc_eigenvalues(p);
    case ChannelKind::custom:
      break;
  }
  throw std::invalid_argument("w3_eigenvalues: no closed form for custom channels");
}

double adc_mean_qfi_paper(double p) {
  require_probability(p, "adc_mean_qfi_paper");
  if (p == 0.0) return 7.0 / 3.0;
  const double r = 1.0 - 2.0 * p;
  return r * r;
}

double pdc_mean_qfi_paper(double p) {
  require_probability(p, "pdc_mean_qfi_paper");
  return p == 0.0 ? 7.0 / 3.0 : 0.0;
}

double pure_w_mean_qfi(int n) {
  if (n < 2) throw std::invalid_argument("pure_w_mean_qfi: n must be >= 2");
  return 3.0 - 2.0 / n;
}

}  // namespace qfi::closed_forms
