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
#include <limits>

#include "doctest.h"
#include "oracles.h"
#include "qfi/channels.h"
#include "qfi/fidelity_oracle.h"
#include "qfi/qfi_engine.h"
#include "qfi/states.h"

using namespace qfi;

namespace {

constexpr SummationMode kModes[] = {SummationMode::full_spectrum, SummationMode::paper_support};

DensityMatrix noisy_w(int n, const KrausChannel& ch) {
  return apply_uniform(density_from_pure(w_state(n)), ch);
}

std::vector<KrausChannel> paper_channels(double p) {
  return {depolarizing(p), amplitude_damping(p), phase_damping(p)};
}

double max_diff(const CMatrix& a, const CMatrix& b) {
  double out = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = 0; l < 3; ++l) out = std::max(out, std::abs(a(k, l) - b(k, l)));
  }
  return out;
}

// Mixes eigenvectors inside each cluster of equal eigenvalues by a random unitary.
HermitianEigenDecomposition scramble_degenerate(HermitianEigenDecomposition eig, testing::Rng& rng) {
  const std::size_t n = eig.eigenvalues.size();
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && std::abs(eig.eigenvalues[end] - eig.eigenvalues[start]) <= 1e-9) ++end;
    const std::size_t k = end - start;
    if (k > 1) {
      const auto u = testing::random_unitary(k, rng);
      ComplexMatrix block(n, k);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) block(r, c) = eig.eigenvectors(r, start + c);
      }
      const auto mixed = matmul(block, u);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) eig.eigenvectors(r, start + c) = mixed(r, c);
      }
    }
    start = end;
  }
  return eig;
}

}  // namespace

TEST_CASE("maximally mixed state has no phase sensitivity") {
  for (const auto mode : kModes) {
    const auto c = c_matrix(maximally_mixed(3), mode);
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t l = 0; l < 3; ++l) CHECK(std::abs(c(k, l)) <= 1e-12);
    }
  }
}

TEST_CASE("pure W3 gives diag(7, 7, 0)") {
  for (const auto mode : kModes) {
    const auto c = c_matrix(density_from_pure(w_state(3)), mode);
    CHECK(c(Axis::x, Axis::x) == doctest::Approx(7.0).epsilon(1e-10));
    CHECK(c(Axis::y, Axis::y) == doctest::Approx(7.0).epsilon(1e-10));
    CHECK(std::abs(c(Axis::z, Axis::z)) <= 1e-10);
    CHECK(c.max_off_diagonal() <= 1e-10);

    const auto result = max_mean_qfi(density_from_pure(w_state(3)), mode);
    CHECK(result.mean_f == doctest::Approx(7.0 / 3.0).epsilon(1e-10));
    CHECK(result.f_max == result.c_max);
    CHECK(result.classification == Classification::useful_entangled);
    CHECK(result.mode == mode);
  }
}

TEST_CASE("phase damping in paper mode kills the C matrix") {
  const auto c = c_matrix(noisy_w(3, phase_damping(0.4)), SummationMode::paper_support);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = 0; l < 3; ++l) CHECK(std::abs(c(k, l)) <= 1e-10);
  }
}

TEST_CASE("amplitude damping at p = 0.25 in full mode") {
  const auto rho = noisy_w(3, amplitude_damping(0.25));
  const auto c = c_matrix(rho, SummationMode::full_spectrum);
  const double oracle = fidelity_qfi_oracle(rho, Direction::along(Axis::x));
  CHECK(c(Axis::x, Axis::x) == doctest::Approx(oracle).epsilon(1e-3));
  CHECK(c(Axis::x, Axis::x) == doctest::Approx(3.75).epsilon(1e-10));
}

TEST_CASE("amplitude damping in paper mode") {
  struct Case {
    double p;
    double mean;
  };
  for (const auto& [p, mean] : {Case{0.25, 0.25}, Case{0.5, 0.0}, Case{0.8, 0.36}, Case{1.0, 1.0}}) {
    CAPTURE(p);
    const auto result = max_mean_qfi(noisy_w(3, amplitude_damping(p)), SummationMode::paper_support);
    CHECK(std::abs(result.mean_f - mean) <= 1e-10);
  }
}

TEST_CASE("pure GHZ3 reaches the Heisenberg limit") {
  const auto psi = ghz_state(3);
  const auto result = max_mean_qfi(density_from_pure(psi), SummationMode::paper_support);
  const double oracle = testing::variance_qfi(psi.amplitudes, Direction::along(Axis::z)) / 3.0;
  CHECK(oracle == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(result.mean_f == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(result.classification == Classification::heisenberg);
}

TEST_CASE("qfi_along") {
  for (const double p : {0.2, 0.7}) {
    for (const auto& ch : paper_channels(p)) {
      for (const auto mode : kModes) {
        CHECK(std::abs(qfi_along(noisy_w(3, ch), Direction::along(Axis::z), mode)) <= 1e-9);
      }
    }
  }
  const auto w = density_from_pure(w_state(3));
  const double fx = qfi_along(w, Direction::along(Axis::x), SummationMode::full_spectrum);
  const double fy = qfi_along(w, Direction::along(Axis::y), SummationMode::full_spectrum);
  CHECK(fx == doctest::Approx(7.0).epsilon(1e-10));
  CHECK(fy == doctest::Approx(fx).epsilon(1e-10));

  testing::Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho(testing::random_density(4, rng));
    const auto d = testing::random_direction(rng);
    for (const auto mode : kModes) {
      const auto c = c_matrix(rho, mode);
      double quad = 0.0;
      const auto& n = d.components();
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = 0; l < 3; ++l) quad += n[k] * c(k, l) * n[l];
      }
      CHECK(std::abs(qfi_along(rho, d, mode) - quad) <= 1e-10);
      CHECK(std::abs(c.along(d) - quad) <= 1e-10);
    }
  }
}

TEST_CASE("pure_state_qfi") {
  CHECK(pure_state_qfi(w_state(3), Direction::along(Axis::x)) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(pure_state_qfi(ghz_state(3), Direction::along(Axis::z)) == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(pure_state_qfi(product_state_all_zero(3), Direction::along(Axis::x)) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(pure_state_qfi(product_state_all_zero(3), Direction::along(Axis::z))) <= 1e-12);

  testing::Rng rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const auto d = testing::random_direction(rng);
    const auto psi = dicke_state(4, 2);
    CHECK(pure_state_qfi(psi, d) == doctest::Approx(testing::variance_qfi(psi.amplitudes, d)).epsilon(1e-12));
  }
}

TEST_CASE("qcrb") {
  CHECK(qcrb(9.0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(qcrb(1.0, 100) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(qcrb(7.0, 1) == doctest::Approx(0.37796447300922725).epsilon(1e-12));
  CHECK_THROWS_AS(qcrb(0.0, 1), UndefinedBoundError);
  CHECK_THROWS_AS(qcrb(-1.0, 1), UndefinedBoundError);
  CHECK_THROWS_AS(qcrb(1.0, 0), std::invalid_argument);
}

TEST_CASE("classification thresholds") {
  CHECK(classify(0.5, 3) == Classification::below_shot_noise);
  CHECK(classify(1.0 + 5e-7, 3) == Classification::shot_noise);
  CHECK(classify(1.5, 3) == Classification::useful_entangled);
  CHECK(classify(3.0 - 5e-7, 3) == Classification::heisenberg);
  CHECK(classify(1.0, 1) == Classification::heisenberg);
  CHECK(to_string(Classification::shot_noise) == "shot_noise");
  CHECK(max_mean_qfi(density_from_pure(product_state_all_zero(3)), SummationMode::full_spectrum)
            .classification == Classification::shot_noise);
}

TEST_CASE("noisy W states keep a diagonal C with equal transverse entries") {
  for (int n = 2; n <= 4; ++n) {
    for (const double p : {0.0, 0.05, 0.3, 0.5, 0.75, 1.0}) {
      for (const auto& ch : paper_channels(p)) {
        for (const auto mode : kModes) {
          CAPTURE(n);
          CAPTURE(p);
          const auto c = c_matrix(noisy_w(n, ch), mode);
          CHECK(c.max_off_diagonal() <= 1e-9);
          CHECK(std::abs(c(Axis::x, Axis::x) - c(Axis::y, Axis::y)) <= 1e-9);
          CHECK(c(Axis::z, Axis::z) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("C matrix is symmetric and PSD") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho(testing::random_density(8, rng, 1 + trial % 4));
    for (const auto mode : kModes) {
      const auto c = c_matrix(rho, mode);
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = 0; l < 3; ++l) CHECK(std::abs(c(k, l) - c(l, k)) <= 1e-10);
      }
      CHECK(c.eigenvalues()[2] >= -1e-9);
      const auto result = summarize(c, 3, mode, kDefaultEpsilon);
      CHECK(std::abs(result.f_max - c.eigenvalues()[0]) <= 1e-10);
    }
  }
}

TEST_CASE("C matrix is independent of the basis inside degenerate eigenspaces") {
  testing::Rng rng(31);
  std::vector<DensityMatrix> states;
  for (const double p : {0.2, 0.6}) {
    for (const auto& ch : paper_channels(p)) states.push_back(noisy_w(3, ch));
  }
  states.push_back(density_from_pure(ghz_state(3)));
  states.push_back(maximally_mixed(2));
  for (const auto& rho : states) {
    const auto eig = hermitian_eig(rho.matrix());
    for (const auto mode : kModes) {
      const auto reference = c_matrix(eig, rho.n_qubits(), mode);
      for (int trial = 0; trial < 3; ++trial) {
        const auto scrambled = scramble_degenerate(eig, rng);
        CHECK(max_diff(c_matrix(scrambled, rho.n_qubits(), mode), reference) <= 1e-9);
      }
    }
  }
}

TEST_CASE("modes agree on full-rank depolarized states") {
  for (const double p : {0.01, 0.1, 0.33, 0.5, 0.77, 0.99}) {
    const auto rho = noisy_w(3, depolarizing(p));
    CHECK(max_diff(c_matrix(rho, SummationMode::full_spectrum),
                   c_matrix(rho, SummationMode::paper_support)) <= 1e-10);
  }
}

TEST_CASE("pure states agree with the variance formula") {
  for (const auto& psi : {w_state(2), w_state(3), w_state(4), ghz_state(2), ghz_state(3),
                          ghz_state(4), product_state_all_zero(3), dicke_state(4, 2)}) {
    const auto rho = density_from_pure(psi);
    for (const auto mode : kModes) {
      const auto c = c_matrix(rho, mode);
      for (const Axis axis : kAxes) {
        const double oracle = testing::variance_qfi(psi.amplitudes, Direction::along(axis));
        CHECK(std::abs(c(axis, axis) - oracle) <= 1e-9);
      }
    }
  }
}

TEST_CASE("mean QFI never exceeds N") {
  testing::Rng rng(41);
  for (const std::size_t dim : {2, 4, 8, 16}) {
    const int n = qubits_for_dimension(dim);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityMatrix rho(testing::random_density(dim, rng, 1 + trial % 3));
      for (const auto mode : kModes) {
        const auto result = max_mean_qfi(rho, mode);
        CHECK(result.mean_f <= n + 1e-9);
        CHECK(result.mean_f >= -1e-9);
      }
    }
  }
  CHECK(max_mean_qfi(density_from_pure(ghz_state(4)), SummationMode::full_spectrum).mean_f <=
        4.0 + 1e-9);
}

TEST_CASE("full mode is continuous at p = 0, paper mode jumps") {
  const double pure = max_mean_qfi(density_from_pure(w_state(3)), SummationMode::full_spectrum).mean_f;
  for (const auto& ch : {amplitude_damping(1e-6), phase_damping(1e-6)}) {
    const auto rho = noisy_w(3, ch);
    CHECK(std::abs(max_mean_qfi(rho, SummationMode::full_spectrum).mean_f - pure) <= 1e-3);
    CHECK(std::abs(max_mean_qfi(rho, SummationMode::paper_support).mean_f - pure) >= 1.0);
  }
}

TEST_CASE("epsilon controls support membership") {
  // With a huge epsilon the p = 0.25 damped state counts as pure in paper mode.
  const auto rho = noisy_w(3, amplitude_damping(0.25));
  CHECK(max_mean_qfi(rho, SummationMode::paper_support, 0.3).mean_f ==
        doctest::Approx(1.75).epsilon(1e-10));
  CHECK(max_mean_qfi(rho, SummationMode::paper_support).epsilon == kDefaultEpsilon);
}
