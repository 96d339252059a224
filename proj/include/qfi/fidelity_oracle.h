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


#ifndef QFI_FIDELITY_ORACLE_H_
#define QFI_FIDELITY_ORACLE_H_

#include <stdexcept>

#include "qfi/collective.h"
#include "qfi/matcore.h"
#include "qfi/states.h"

namespace qfi {

/// The fidelity computation produced a square root of a clearly negative
/// number.
class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FidelityOracleOptions {
  /// Mixing weight toward I/2^N that makes the state full rank.
  double eta = 1e-5;
  /// Total rotation angle separating the two compared states.
  double dphi = 1e-3;
  /// Most negative eigenvalue of sqrt(rho) sigma sqrt(rho) tolerated.
  double negative_tol = 1e-12;
};

/// tr sqrt(sqrt(rho) sigma sqrt(rho)).
double root_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                     double negative_tol = 1e-12);

/// (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double uhlmann_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// exp(-i angle J_n).
ComplexMatrix rotation(int n_qubits, const Direction& d, double angle);

/// Estimates the QFI along `d` from the Bures distance between
/// e^{-i J dphi/2} rho' e^{i J dphi/2} and e^{i J dphi/2} rho' e^{-i J dphi/2}:
/// F ~ 8 (1 - sqrt(F_U)) / dphi^2, where rho' is rho mixed with weight eta
/// toward the maximally mixed state. Independent of the spectral C-matrix
/// sum; agrees with the full_spectrum convention.
double fidelity_qfi_oracle(const DensityMatrix& rho, const Direction& d,
                           const FidelityOracleOptions& options = {});

}  // namespace qfi

#endif  // QFI_FIDELITY_ORACLE_H_
