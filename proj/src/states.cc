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


#include "qfi/states.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qfi {

namespace {

void require_qubits(int n, int min_qubits, const char* what) {
  if (n < min_qubits || n > kMaxQubits) {
    throw std::invalid_argument(std::string(what) + ": qubit count " + std::to_string(n) +
                                " outside [" + std::to_string(min_qubits) + ", " +
                                std::to_string(kMaxQubits) + "]");
  }
}

PureState basis_superposition(int n, const std::vector<std::size_t>& indices) {
  PureState psi{n, std::vector<Complex>(std::size_t{1} << n)};
  const double amp = 1.0 / std::sqrt(static_cast<double>(indices.size()));
  for (const auto idx : indices) psi.amplitudes[idx] = amp;
  return psi;
}

}  // namespace

int qubits_for_dimension(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(dim);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, TrustedTag)
    : n_qubits_(0), matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw DimensionError("density matrix must be square");
  n_qubits_ = qubits_for_dimension(matrix_.rows());
  if (std::abs(trace(matrix_) - 1.0) > 1e-10) {
    throw ValidationError("density matrix trace is not 1");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, const DensityTolerances& tol)
    : n_qubits_(0), matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw DimensionError("density matrix must be square");
  n_qubits_ = qubits_for_dimension(matrix_.rows());
  const double trace_err = std::abs(trace(matrix_) - 1.0);
  if (trace_err > tol.trace) {
    throw ValidationError("density matrix trace deviates from 1 by " + std::to_string(trace_err));
  }
  if (hermiticity_error(matrix_) > tol.hermitian) {
    throw ValidationError("density matrix is not Hermitian");
  }
  if (!is_psd(matrix_, tol.psd)) {
    throw ValidationError("density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix matrix) {
  return DensityMatrix(std::move(matrix), TrustedTag{});
}

PureState w_state(int n) {
  require_qubits(n, 2, "w_state");
  return dicke_state(n, 1);
}

PureState ghz_state(int n) {
  require_qubits(n, 2, "ghz_state");
  return basis_superposition(n, {0, (std::size_t{1} << n) - 1});
}

PureState product_state_all_zero(int n) {
  require_qubits(n, 1, "product_state_all_zero");
  return basis_superposition(n, {0});
}

PureState dicke_state(int n, int k) {
  require_qubits(n, 1, "dicke_state");
  if (k < 0 || k > n) {
    throw std::invalid_argument("dicke_state: excitation count " + std::to_string(k) +
                                " outside [0, " + std::to_string(n) + "]");
  }
  std::vector<std::size_t> indices;
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if (std::popcount(idx) == k) indices.push_back(idx);
  }
  return basis_superposition(n, indices);
}

DensityMatrix density_from_pure(const PureState& psi) {
  return DensityMatrix::trusted(ComplexMatrix::outer(psi.amplitudes, psi.amplitudes));
}

DensityMatrix maximally_mixed(int n) {
  require_qubits(n, 1, "maximally_mixed");
  const std::size_t dim = std::size_t{1} << n;
  return DensityMatrix::trusted(ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim)));
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double sum = 0.0;
  for (const auto& x : rho.matrix().entries()) sum += std::norm(x);
  return sum;
}

ComplexMatrix permute_qubits(const ComplexMatrix& op, std::span<const int> perm) {
  const int n = qubits_for_dimension(op.rows());
  if (static_cast<int>(perm.size()) != n) throw DimensionError("permute_qubits: bad permutation");
  const auto map_index = [&](std::size_t idx) {
    std::size_t out = 0;
    for (int q = 0; q < n; ++q) {
      const std::size_t bit = (idx >> (n - 1 - q)) & 1U;
      out |= bit << (n - 1 - perm[q]);
    }
    return out;
  };
  ComplexMatrix out(op.rows(), op.cols());
  for (std::size_t r = 0; r < op.rows(); ++r) {
    for (std::size_t c = 0; c < op.cols(); ++c) out(map_index(r), map_index(c)) = op(r, c);
  }
  return out;
}

}  // namespace qfi
