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


#ifndef QFI_COLLECTIVE_H_
#define QFI_COLLECTIVE_H_

#include <array>
#include <string_view>

#include "qfi/matcore.h"

namespace qfi {

enum class Axis { x, y, z };

inline constexpr std::array<Axis, 3> kAxes = {Axis::x, Axis::y, Axis::z};

std::string_view to_string(Axis axis);

/// Unit vector selecting a rotation axis.
class Direction {
 public:
  /// Throws std::invalid_argument unless nx^2 + ny^2 + nz^2 = 1 within 1e-12.
  Direction(double nx, double ny, double nz);

  static Direction along(Axis axis);
  /// Normalizes a nonzero vector.
  static Direction normalized(double nx, double ny, double nz);

  double x() const { return n_[0]; }
  double y() const { return n_[1]; }
  double z() const { return n_[2]; }
  const std::array<double, 3>& components() const { return n_; }

 private:
  std::array<double, 3> n_;
};

/// Pauli matrix; sigma_z = diag(1, -1).
ComplexMatrix pauli(Axis axis);

/// I (x) ... (x) op (x) ... (x) I with `op` on the given qubit (qubit 0 leftmost).
ComplexMatrix lift_single_qubit(const ComplexMatrix& op, int n_qubits, int qubit);

/// J_axis = (1/2) sum_q sigma_axis^(q).
ComplexMatrix collective_axis(int n_qubits, Axis axis);

/// J_n = n_x J_x + n_y J_y + n_z J_z.
ComplexMatrix collective_operator(int n_qubits, const Direction& d);

}  // namespace qfi

#endif  // QFI_COLLECTIVE_H_
