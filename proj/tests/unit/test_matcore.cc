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


#include <cmath>

#include "doctest.h"
#include "oracles.h"
#include "qfi/collective.h"
#include "qfi/matcore.h"
#include "qfi/states.h"

using namespace qfi;

namespace {

std::vector<Complex> basis(std::size_t dim, std::size_t idx) {
  std::vector<Complex> v(dim);
  v[idx] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("kron of identities and Paulis") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));

  const std::vector<double> expected{1, 1, -1, -1};
  CHECK(max_abs_diff(kron(pauli(Axis::z), ComplexMatrix::identity(2)),
                     ComplexMatrix::diagonal(expected)) == 0.0);

  const auto flipped = matvec(kron(pauli(Axis::x), pauli(Axis::x)), basis(4, 0));
  CHECK(flipped == basis(4, 3));
}

TEST_CASE("kron is associative") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = testing::random_hermitian(2, rng);
    const auto b = testing::random_hermitian(3, rng);
    const auto c = testing::random_hermitian(2, rng);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
  }
}

TEST_CASE("basic algebra") {
  CHECK(trace(ComplexMatrix::identity(8)) == Complex(8.0));
  CHECK(matmul(pauli(Axis::x), pauli(Axis::x)) == ComplexMatrix::identity(2));

  testing::Rng rng(3);
  ComplexMatrix a(3, 5);
  for (auto& x : a.entries()) x = {testing::uniform(rng), testing::uniform(rng)};
  CHECK(adjoint(adjoint(a)) == a);
  CHECK(adjoint(a).rows() == 5);

  const auto sum = add(ComplexMatrix::identity(2), scale(pauli(Axis::z), 2.0));
  CHECK(sum(0, 0) == Complex(3.0));
  CHECK(sum(1, 1) == Complex(-1.0));
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(add(ComplexMatrix(2, 2), ComplexMatrix(3, 3)), DimensionError);
  CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionError);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("hermitian_eig on sigma_z") {
  const auto eig = hermitian_eig(pauli(Axis::z));
  REQUIRE(eig.eigenvalues.size() == 2);
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0));
}

TEST_CASE("hermitian_eig returns the full spectrum of a rank-two state") {
  // (1-p)|W3><W3| + p|000><000| at p = 0.3.
  const auto w = w_state(3).amplitudes;
  const auto zero = product_state_all_zero(3).amplitudes;
  const ComplexMatrix rho = ComplexMatrix::outer(w, w) * 0.7 + ComplexMatrix::outer(zero, zero) * 0.3;
  const auto eig = hermitian_eig(rho);
  REQUIRE(eig.eigenvalues.size() == 8);
  CHECK(eig.eigenvalues[0] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(eig.eigenvalues[1] == doctest::Approx(0.3).epsilon(1e-12));
  for (std::size_t k = 2; k < 8; ++k) CHECK(std::abs(eig.eigenvalues[k]) <= 1e-12);
}

TEST_CASE("random 8x8 Hermitian matrices are reconstructed") {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_hermitian(8, rng);
    const auto eig = hermitian_eig(a);
    CHECK(max_abs_diff(eig.reconstruct(), a) <= 1e-9);
  }
}

TEST_CASE("eigendecomposition invariants across dimensions") {
  testing::Rng rng(77);
  for (const std::size_t dim : {2, 3, 5, 8, 16, 33, 64, 128, 256}) {
    CAPTURE(dim);
    const auto a = testing::random_hermitian(dim, rng);
    const auto eig = hermitian_eig(a);
    const double norm = frobenius_norm(a);

    CHECK(testing::max_eigen_residual(a, eig) <= 1e-10 * norm);

    const auto gram = matmul(adjoint(eig.eigenvectors), eig.eigenvectors);
    CHECK(frobenius_norm(gram - ComplexMatrix::identity(dim)) <= 1e-10);

    double sum = 0.0;
    for (const double x : eig.eigenvalues) sum += x;
    CHECK(std::abs(sum - trace(a).real()) <= 1e-10 * std::max(1.0, norm));

    CHECK(std::is_sorted(eig.eigenvalues.rbegin(), eig.eigenvalues.rend()));
  }
}

TEST_CASE("eigenvector phase convention") {
  testing::Rng rng(5);
  const auto eig = hermitian_eig(testing::random_hermitian(6, rng));
  for (std::size_t k = 0; k < 6; ++k) {
    for (std::size_t r = 0; r < 6; ++r) {
      const Complex x = eig.eigenvectors(r, k);
      if (std::abs(x) > 1e-10) {
        CHECK(std::abs(x.imag()) <= 1e-15);
        CHECK(x.real() > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("eigenvalues-only path agrees with the full decomposition") {
  testing::Rng rng(9);
  const auto a = testing::random_hermitian(12, rng);
  const auto values = hermitian_eigenvalues(a);
  const auto eig = hermitian_eig(a);
  for (std::size_t k = 0; k < values.size(); ++k) {
    CHECK(values[k] == doctest::Approx(eig.eigenvalues[k]).epsilon(1e-12));
  }
}

TEST_CASE("degenerate spectra keep an orthonormal basis") {
  const auto eig = hermitian_eig(ComplexMatrix::identity(4) * 0.25);
  CHECK(max_abs_diff(matmul(adjoint(eig.eigenvectors), eig.eigenvectors),
                     ComplexMatrix::identity(4)) <= 1e-15);
}

TEST_CASE("hermitian_eig validates its input") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), DimensionError);
  ComplexMatrix skew{{0.0, 1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(hermitian_eig(skew), ValidationError);

  // Defects below tolerance are symmetrized away.
  ComplexMatrix nearly{{1.0, Complex(0.5, 1e-12)}, {0.5, -1.0}};
  CHECK_NOTHROW(hermitian_eig(nearly));
}

TEST_CASE("is_psd") {
  CHECK(is_psd(ComplexMatrix::identity(2) * 0.5, 1e-9));
  const std::vector<double> d{1.0, -0.1};
  CHECK_FALSE(is_psd(ComplexMatrix::diagonal(d), 1e-9));
  const std::vector<double> tiny{1.0, -1e-12};
  CHECK(is_psd(ComplexMatrix::diagonal(tiny), 1e-9));
}
