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


#ifndef QFI_STATES_H_
#define QFI_STATES_H_

#include <vector>

#include "qfi/matcore.h"

namespace qfi {

/// Largest register the dense kernel supports (dimension 2^12).
inline constexpr int kMaxQubits = 12;

/// Normalized state vector over n qubits. Qubit 0 is the most significant
/// bit of the basis index and |0> is the sigma_z = +1 eigenstate.
struct PureState {
  int n_qubits = 0;
  std::vector<Complex> amplitudes;

  std::size_t dimension() const { return amplitudes.size(); }
};

struct DensityTolerances {
  double trace = 1e-10;
  double hermitian = 1e-10;
  double psd = 1e-9;
};

/// Trace-one, Hermitian, positive-semidefinite matrix over n qubits.
class DensityMatrix {
 public:
  /// Validates every invariant; throws ValidationError on failure.
  explicit DensityMatrix(ComplexMatrix matrix, const DensityTolerances& tol = {});

  /// Skips the spectral PSD check. Only for matrices produced by maps that
  /// preserve the invariants (pure projectors, CPTP channels); dimension and
  /// trace are still checked.
  static DensityMatrix trusted(ComplexMatrix matrix);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  struct TrustedTag {};
  DensityMatrix(ComplexMatrix matrix, TrustedTag);

  int n_qubits_ = 0;
  ComplexMatrix matrix_;
};

/// Number of qubits for a 2^n dimension; throws DimensionError otherwise.
int qubits_for_dimension(std::size_t dim);

PureState w_state(int n);
PureState ghz_state(int n);
PureState product_state_all_zero(int n);
/// Equal superposition of all basis states with exactly k qubits in |1>.
PureState dicke_state(int n, int k);

DensityMatrix density_from_pure(const PureState& psi);
DensityMatrix maximally_mixed(int n);
double purity(const DensityMatrix& rho);

/// Relabels qubits: qubit q of the input becomes qubit perm[q] of the output.
ComplexMatrix permute_qubits(const ComplexMatrix& op, std::span<const int> perm);

}  // namespace qfi

#endif  // QFI_STATES_H_
