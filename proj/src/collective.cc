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


#include "qfi/collective.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qfi/states.h"

namespace qfi {

std::string_view to_string(Axis axis) {
  switch (axis) {
    case Axis::x:
      return "x";
    case Axis::y:
      return "y";
    case Axis::z:
      return "z";
  }
  return "?";
}

Direction::Direction(double nx, double ny, double nz) : n_{nx, ny, nz} {
  const double norm2 = nx * nx + ny * ny + nz * nz;
  if (!(std::abs(norm2 - 1.0) <= 1e-12)) {
    throw std::invalid_argument("Direction: vector is not unit length (|n|^2 = " +
                                std::to_string(norm2) + ")");
  }
}

Direction Direction::along(Axis axis) {
  switch (axis) {
    case Axis::x:
      return {1.0, 0.0, 0.0};
    case Axis::y:
      return {0.0, 1.0, 0.0};
    case Axis::z:
      break;
  }
  return {0.0, 0.0, 1.0};
}

Direction Direction::normalized(double nx, double ny, double nz) {
  const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("Direction: cannot normalize a zero vector");
  }
  return {nx / norm, ny / norm, nz / norm};
}

ComplexMatrix pauli(Axis axis) {
  const Complex i{0.0, 1.0};
  switch (axis) {
    case Axis::x:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case Axis::y:
      return {{0.0, -i}, {i, 0.0}};
    case Axis::z:
      break;
  }
  return {{1.0, 0.0}, {0.0, -1.0}};
}

ComplexMatrix lift_single_qubit(const ComplexMatrix& op, int n_qubits, int qubit) {
  if (op.rows() != 2 || op.cols() != 2) throw DimensionError("lift_single_qubit: op must be 2x2");
  if (n_qubits < 1 || n_qubits > kMaxQubits || qubit < 0 || qubit >= n_qubits) {
    throw std::invalid_argument("lift_single_qubit: qubit index out of range");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  const int shift = n_qubits - 1 - qubit;
  ComplexMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t rbit = (r >> shift) & 1U;
    const std::size_t rest = r & ~(std::size_t{1} << shift);
    for (std::size_t cbit = 0; cbit < 2; ++cbit) {
      out(r, rest | (cbit << shift)) = op(rbit, cbit);
    }
  }
  return out;
}

ComplexMatrix collective_axis(int n_qubits, Axis axis) {
  return collective_operator(n_qubits, Direction::along(axis));
}

ComplexMatrix collective_operator(int n_qubits, const Direction& d) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("collective_operator: qubit count out of range");
  }
  ComplexMatrix local(2, 2);
  for (const Axis axis : kAxes) {
    const double weight = d.components()[static_cast<std::size_t>(axis)];
    if (weight != 0.0) local += pauli(axis) * (0.5 * weight);
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix j(dim, dim);
  for (int q = 0; q < n_qubits; ++q) j += lift_single_qubit(local, n_qubits, q);
  return j;
}

}  // namespace qfi
