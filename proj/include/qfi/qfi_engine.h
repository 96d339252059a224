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


#ifndef QFI_QFI_ENGINE_H_
#define QFI_QFI_ENGINE_H_

#include <array>
#include <stdexcept>
#include <string_view>

#include "qfi/collective.h"
#include "qfi/matcore.h"
#include "qfi/states.h"

namespace qfi {

/// How the pair sum over eigenvalues treats a rank-deficient state.
///
/// full_spectrum: every ordered pair i != j with lambda_i + lambda_j > eps.
///   Support-kernel pairs contribute weight lambda_i, so the result is
///   continuous in the decoherence strength.
/// paper_support: only pairs with both lambda_i > eps and lambda_j > eps,
///   except for rank-one (pure) states, which fall back to full_spectrum.
///   This gives the piecewise curves with a jump at p = 0 for amplitude and
///   phase damping of W states.
enum class SummationMode { full_spectrum, paper_support };

std::string_view to_string(SummationMode mode);

inline constexpr double kDefaultEpsilon = 1e-10;
inline constexpr double kClassificationTol = 1e-6;

/// 3x3 real symmetric matrix of directional phase sensitivities, indexed by
/// axis (x, y, z).
struct CMatrix {
  std::array<std::array<double, 3>, 3> entries{};

  double operator()(Axis k, Axis l) const {
    return entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
  }
  double operator()(std::size_t k, std::size_t l) const { return entries[k][l]; }

  double max_off_diagonal() const;
  /// Eigenvalues, descending.
  std::array<double, 3> eigenvalues() const;
  /// n^T C n.
  double along(const Direction& d) const;
};

enum class Classification { below_shot_noise, shot_noise, useful_entangled, heisenberg };

std::string_view to_string(Classification c);

/// Heisenberg (|mean - N| <= tol) is tested first, then shot noise.
Classification classify(double mean_f, int n_qubits, double tol = kClassificationTol);

struct QfiResult {
  CMatrix c_matrix;
  double c_max = 0.0;
  /// Maximal QFI over rotation axes; equals c_max.
  double f_max = 0.0;
  /// f_max / N.
  double mean_f = 0.0;
  int n_qubits = 0;
  SummationMode mode = SummationMode::full_spectrum;
  double epsilon = kDefaultEpsilon;
  Classification classification = Classification::below_shot_noise;
};

/// C_kl = sum_{i != j} (l_i - l_j)^2 / (l_i + l_j)
///        * [<i|J_k|j><j|J_l|i> + <i|J_l|j><j|J_k|i>]
/// over the eigenpairs admitted by `mode`. Eigenvalues below epsilon are
/// clamped to zero first.
CMatrix c_matrix(const DensityMatrix& rho, SummationMode mode, double epsilon = kDefaultEpsilon);

/// Same sum evaluated on a caller-supplied eigendecomposition (any
/// orthonormal basis inside degenerate eigenspaces).
CMatrix c_matrix(const HermitianEigenDecomposition& spectrum, int n_qubits, SummationMode mode,
                 double epsilon = kDefaultEpsilon);

QfiResult max_mean_qfi(const DensityMatrix& rho, SummationMode mode,
                       double epsilon = kDefaultEpsilon);
QfiResult summarize(const CMatrix& c, int n_qubits, SummationMode mode, double epsilon);

double qfi_along(const DensityMatrix& rho, const Direction& d, SummationMode mode,
                 double epsilon = kDefaultEpsilon);

/// 4 (<J_n^2> - <J_n>^2).
double pure_state_qfi(const PureState& psi, const Direction& d);

/// Raised by qcrb when the Fisher information carries no phase information.
class UndefinedBoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// 1 / sqrt(n_m f).
double qcrb(double f, int n_m);

}  // namespace qfi

#endif  // QFI_QFI_ENGINE_H_
