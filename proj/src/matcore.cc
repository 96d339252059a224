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

#include "qfi/matcore.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qfi {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
}

// Rotates the (p, q) plane so that A(p, q) vanishes. G = [[c, s e], [-s e*, c]]
// with e the phase of A(p, q); A <- G^dagger A G and, if present, V <- V G.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex e = apq / mag;
  const Complex se = s * e;
  const Complex se_conj = std::conj(se);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - se_conj * akq;
    a(k, q) = se * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - se * aqk;
    a(q, k) = se_conj * apk + c * aqk;
  }
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex vkp = (*v)(k, p);
      const Complex vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - se_conj * vkq;
      (*v)(k, q) = se * vkp + c * vkq;
    }
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

ComplexMatrix symmetrized_checked(const ComplexMatrix& a, const EigenOptions& options) {
  require_square(a, "hermitian_eig");
  const double defect = hermiticity_error(a);
  const double allowed = options.hermitian_tol * std::max(1.0, max_abs_entry(a));
  if (defect > allowed) {
    throw ValidationError("hermitian_eig: matrix is not Hermitian (defect " +
                          std::to_string(defect) + ")");
  }
  ComplexMatrix h = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    h(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < a.cols(); ++c) {
      const Complex mean = 0.5 * (a(r, c) + std::conj(a(c, r)));
      h(r, c) = mean;
      h(c, r) = std::conj(mean);
    }
  }
  return h;
}

// Runs cyclic sweeps in place until the off-diagonal part is negligible.
void diagonalize(ComplexMatrix& a, ComplexMatrix* v, const EigenOptions& options) {
  const std::size_t n = a.rows();
  const double target = options.convergence_tol * frobenius_norm(a);
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off == 0.0 || off <= target) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
  }
}

std::vector<std::size_t> descending_order(const ComplexMatrix& diag) {
  std::vector<std::size_t> order(diag.rows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return diag(i, i).real() > diag(j, j).real();
  });
  return order;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: entry count does not match rows x cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
  ComplexMatrix m(v.size(), w.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < w.size(); ++c) m(r, c) = v[r] * std::conj(w[c]);
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor) {
  for (auto& x : entries_) x *= factor;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex factor) { return a *= factor; }
ComplexMatrix operator*(Complex factor, ComplexMatrix a) { return a *= factor; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) { return a + b; }
ComplexMatrix scale(const ComplexMatrix& a, Complex factor) { return a * factor; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex x = a(ar, ac);
      if (x == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
        }
      }
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw DimensionError("matvec: vector length mismatch");
  std::vector<Complex> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Complex sum{};
    for (std::size_t c = 0; c < a.cols(); ++c) sum += a(r, c) * v[c];
    out[r] = sum;
  }
  return out;
}

Complex inner(std::span<const Complex> v, std::span<const Complex> w) {
  if (v.size() != w.size()) throw DimensionError("inner: vector length mismatch");
  Complex sum{};
  for (std::size_t i = 0; i < v.size(); ++i) sum += std::conj(v[i]) * w[i];
  return sum;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b) - matmul(b, a);
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& x : a.entries()) sum += std::norm(x);
  return std::sqrt(sum);
}

double max_abs_entry(const ComplexMatrix& a) {
  double best = 0.0;
  for (const auto& x : a.entries()) best = std::max(best, std::abs(x));
  return best;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return best;
}

double hermiticity_error(const ComplexMatrix& a) {
  require_square(a, "hermiticity_error");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = r; c < a.cols(); ++c) {
      worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
    }
  }
  return worst;
}

std::vector<Complex> HermitianEigenDecomposition::eigenvector(std::size_t k) const {
  std::vector<Complex> v(eigenvectors.rows());
  for (std::size_t r = 0; r < v.size(); ++r) v[r] = eigenvectors(r, k);
  return v;
}

ComplexMatrix HermitianEigenDecomposition::reconstruct() const {
  return reconstruct([](double lambda) { return lambda; });
}

HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& a, const EigenOptions& options) {
  ComplexMatrix work = symmetrized_checked(a, options);
  const std::size_t n = work.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  diagonalize(work, &v, options);

  const auto order = descending_order(work);
  HermitianEigenDecomposition result;
  result.eigenvalues.reserve(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    result.eigenvalues.push_back(work(src, src).real());

    // Fix the phase: first component above the noise floor becomes real positive.
    Complex phase = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double mag = std::abs(v(r, src));
      if (mag > 1e-10) {
        phase = std::conj(v(r, src)) / mag;
        break;
      }
    }
    for (std::size_t r = 0; r < n; ++r) result.eigenvectors(r, k) = v(r, src) * phase;
  }
  return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const EigenOptions& options) {
  ComplexMatrix work = symmetrized_checked(a, options);
  diagonalize(work, nullptr, options);
  std::vector<double> values;
  values.reserve(work.rows());
  for (const auto idx : descending_order(work)) values.push_back(work(idx, idx).real());
  return values;
}

bool is_psd(const ComplexMatrix& a, double tol) {
  const auto values = hermitian_eigenvalues(a);
  return values.empty() || values.back() >= -tol;
}

}  // namespace qfi
