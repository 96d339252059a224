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

#ifndef QFI_MATCORE_H_
#define QFI_MATCORE_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfi {

using Complex = std::complex<double>;

/// Thrown when operands are not conformable (a caller bug).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an input violates a documented precondition such as
/// Hermiticity or a density-matrix invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Builds a matrix from nested rows; all rows must have equal length.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><w| for column vectors v and w.
  static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Complex> entries() { return entries_; }
  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex factor);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex factor);
ComplexMatrix operator*(Complex factor, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex factor);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& a);

/// Matrix-vector product.
std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> v);
/// <v|w>, conjugating the left argument.
Complex inner(std::span<const Complex> v, std::span<const Complex> w);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
double max_abs_entry(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |A[i][j] - conj(A[j][i])|.
double hermiticity_error(const ComplexMatrix& a);

struct EigenOptions {
  /// Allowed Hermiticity defect, relative to max(1, max |A_ij|).
  double hermitian_tol = 1e-10;
  /// Sweeps stop once the off-diagonal Frobenius norm falls below
  /// convergence_tol * ||A||_F.
  double convergence_tol = 1e-15;
  int max_sweeps = 100;
};

/// Complete spectrum, eigenvalues descending. Column k of `eigenvectors`
/// pairs with eigenvalues[k]; its first non-negligible component is real
/// and positive.
struct HermitianEigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::vector<Complex> eigenvector(std::size_t k) const;
  /// V diag(f(lambda)) V^dagger; f may return a real or complex value.
  template <typename F>
  ComplexMatrix reconstruct(F&& f) const;
  ComplexMatrix reconstruct() const;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. The input is
/// symmetrized as (A + A^dagger)/2 before rotating.
HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& a,
                                          const EigenOptions& options = {});

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          const EigenOptions& options = {});

bool is_psd(const ComplexMatrix& a, double tol);

template <typename F>
ComplexMatrix HermitianEigenDecomposition::reconstruct(F&& f) const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix scaled = eigenvectors;
  for (std::size_t c = 0; c < n; ++c) {
    const auto factor = f(eigenvalues[c]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= factor;
  }
  return matmul(scaled, adjoint(eigenvectors));
}

}  // namespace qfi

#endif  // QFI_MATCORE_H_
