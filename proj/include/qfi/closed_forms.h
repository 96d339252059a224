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


#ifndef QFI_CLOSED_FORMS_H_
#define QFI_CLOSED_FORMS_H_

#include <array>

#include "qfi/channels.h"

namespace qfi::closed_forms {

/// Spectrum of the three-qubit W state after uniform decoherence of strength
/// p, with multiplicity and zeros included.
using W3Spectrum = std::array<double, 8>;

W3Spectrum w3_dpc_eigenvalues(double p);
W3Spectrum w3_adc_eigenvalues(double p);
W3Spectrum w3_pdc_eigenvalues(double p);
/// Dispatches on channel kind; custom channels have no closed form.
W3Spectrum w3_eigenvalues(ChannelKind kind, double p);

/// Piecewise maximal mean QFI of W3 under amplitude damping:
/// 7/3 at p = 0, (1 - 2p)^2 otherwise.
double adc_mean_qfi_paper(double p);
/// 7/3 at p = 0, 0 otherwise.
double pdc_mean_qfi_paper(double p);
/// Mean QFI of the pure N-qubit W state, 3 - 2/N.
double pure_w_mean_qfi(int n);

}  // namespace qfi::closed_forms

#endif  // QFI_CLOSED_FORMS_H_
