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


#include "qfi/qfi_engine.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfi {

std::string_view to_string(SummationMode mode) {
  return mode == SummationMode::paper_support ? "paper" : "full";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::below_shot_noise:
      return "below_shot_noise";
    case Classification::shot_noise:
      return "shot_noise";
    case Classification::useful_entangled:
      return "useful_entangled";
    case Classification::heisenberg:
      return "heisenberg";
  }
  return "?";
}

double CMatrix::max_off_diagonal() const {
  return std::max({std::abs(entries[0][1]), std::abs(entries[0][2]), std::abs(entries[1][2])});
}

std::array<double, 3> CMatrix::eigenvalues() const {
  ComplexMatrix m(3, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = 0; l < 3; ++l) m(k, l) = entries[k][l];
  }
  const auto values = hermitian_eigenvalues(m);
  return {values[0], values[1], values[2]};
}

double CMatrix::along(const Direction& d) const {
  const auto& n = d.components();
  double sum = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = 0; l < 3; ++l) sum += n[k] * entries[k][l] * n[l];
  }
  return sum;
}

Classification classify(double mean_f, int n_qubits, double tol) {
  if (std::abs(mean_f - n_qubits) <= tol) return Classification::heisenberg;
  if (std::abs(mean_f - 1.0) <= tol) return Classification::shot_noise;
  if (mean_f < 1.0) return Classification::below_shot_noise;
  return Classification::useful_entangled;
}

CMatrix c_matrix(const HermitianEigenDecomposition& spectrum, int n_qubits, SummationMode mode,
                 double epsilon) {
  const std::size_t dim = spectrum.eigenvalues.size();
  if (dim != (std::size_t{1} << n_qubits) || spectrum.eigenvectors.rows() != dim) {
    throw DimensionError("c_matrix: spectrum does not match qubit count");
  }

  std::vector<double> lambda(dim);
  std::size_t support = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    lambda[i] = spectrum.eigenvalues[i] < epsilon ? 0.0 : spectrum.eigenvalues[i];
    if (lambda[i] > epsilon) ++support;
  }
  const bool support_only = mode == SummationMode::paper_support && support != 1;

  // Generators in the eigenbasis: M_k(i, j) = <i|J_k|j>.
  const ComplexMatrix v_dag = adjoint(spectrum.eigenvectors);
  std::array<ComplexMatrix, 3> m;
  for (const Axis axis : kAxes) {
    m[static_cast<std::size_t>(axis)] =
        matmul(v_dag, matmul(collective_axis(n_qubits, axis), spectrum.eigenvectors));
  }

  CMatrix c;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      const double denom = lambda[i] + lambda[j];
      if (denom <= epsilon) continue;
      if (support_only && (lambda[i] <= epsilon || lambda[j] <= epsilon)) continue;
      const double diff = lambda[i] - lambda[j];
      const double weight = diff * diff / denom;
      if (weight == 0.0) continue;
      for (std::size_t k = 0; k < 3; ++k) {
        const Complex mk = m[k](i, j);
        for (std::size_t l = k; l < 3; ++l) {
          // <i|J_k|j><j|J_l|i> + <i|J_l|j><j|J_k|i> = 2 Re(M_k(i,j) conj(M_l(i,j))).
          c.entries[k][l] += weight * 2.0 * (mk * std::conj(m[l](i, j))).real();
        }
      }
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = 0; l < k; ++l) c.entries[k][l] = c.entries[l][k];
  }
  return c;
}

CMatrix c_matrix(const DensityMatrix& rho, SummationMode mode, double epsilon) {
  return c_matrix(hermitian_eig(rho.matrix()), rho.n_qubits(), mode, epsilon);
}

QfiResult summarize(const CMatrix& c, int n_qubits, SummationMode mode, double epsilon) {
  QfiResult result;
  result.c_matrix = c;
  result.c_max = c.eigenvalues()[0];
  result.f_max = result.c_max;
  result.mean_f = result.f_max / n_qubits;
  result.n_qubits = n_qubits;
  result.mode = mode;
  result.epsilon = epsilon;
  result.classification = classify(result.mean_f, n_qubits);
  return result;
}

QfiResult max_mean_qfi(const DensityMatrix& rho, SummationMode mode, double epsilon) {
  return summarize(c_matrix(rho, mode, epsilon), rho.n_qubits(), mode, epsilon);
}

double qfi_along(const DensityMatrix& rho, const Direction& d, SummationMode mode,
                 double epsilon) {
  return c_matrix(rho, mode, epsilon).along(d);
}

double pure_state_qfi(const PureState& psi, const Direction& d) {
  const auto j = collective_operator(psi.n_qubits, d);
  const auto j_psi = matvec(j, psi.amplitudes);
  const double second = inner(j_psi, j_psi).real();
  const double first = inner(psi.amplitudes, j_psi).real();
  return 4.0 * (second - first * first);
}

double qcrb(double f, int n_m) {
  if (n_m < 1) throw std::invalid_argument("qcrb: number of experiments must be >= 1");
  if (!(f > 0.0)) {
    throw UndefinedBoundError("qcrb: Fisher information " + std::to_string(f) +
                              " carries no phase information");
  }
  return 1.0 / std::sqrt(static_cast<double>(n_m) * f);
}

}  // namespace qfi
