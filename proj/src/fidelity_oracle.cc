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


#include "qfi/fidelity_oracle.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfi {

double root_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma, double negative_tol) {
  const auto rho_sqrt =
      hermitian_eig(rho).reconstruct([](double lambda) { return std::sqrt(std::max(lambda, 0.0)); });
  const auto inner_product = matmul(rho_sqrt, matmul(sigma, rho_sqrt));
  double sum = 0.0;
  for (const double mu : hermitian_eigenvalues(inner_product)) {
    if (mu < -negative_tol) {
      throw OracleFailure("root_fidelity: eigenvalue " + std::to_string(mu) +
                          " of sqrt(rho) sigma sqrt(rho) is negative");
    }
    sum += std::sqrt(std::max(mu, 0.0));
  }
  return sum;
}

double uhlmann_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  const double root = root_fidelity(rho, sigma);
  return root * root;
}

ComplexMatrix rotation(int n_qubits, const Direction& d, double angle) {
  const auto generator = hermitian_eig(collective_operator(n_qubits, d));
  return generator.reconstruct(
      [angle](double lambda) { return std::exp(Complex{0.0, -angle * lambda}); });
}

double fidelity_qfi_oracle(const DensityMatrix& rho, const Direction& d,
                           const FidelityOracleOptions& options) {
  if (!(options.dphi > 0.0) || !(options.eta >= 0.0 && options.eta < 1.0)) {
    throw std::invalid_argument("fidelity_qfi_oracle: need dphi > 0 and eta in [0, 1)");
  }
  const std::size_t dim = rho.dimension();
  const ComplexMatrix regularized =
      rho.matrix() * (1.0 - options.eta) +
      ComplexMatrix::identity(dim) * (options.eta / static_cast<double>(dim));

  const double half = 0.5 * options.dphi;
  const auto forward = rotation(rho.n_qubits(), d, half);
  const auto backward = adjoint(forward);
  const auto plus = matmul(forward, matmul(regularized, backward));
  const auto minus = matmul(backward, matmul(regularized, forward));

  const double root = root_fidelity(plus, minus, options.negative_tol);
  return 8.0 * (1.0 - root) / (options.dphi * options.dphi);
}

}  // namespace qfi
