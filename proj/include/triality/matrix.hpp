// Copyright 2026 The Triality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace triality {

using Complex = std::complex<double>;

/// Tolerance used when validating states, overlap matrices and channels.
inline constexpr double kStateTolerance = 1e-10;
/// Tolerance for exact algebraic identities evaluated in double precision.
inline constexpr double kIdentityTolerance = 1e-12;

/// Small dense complex matrix stored row-major.
///
/// Dimensions in this library never exceed a few dozen, so storage is a
/// plain vector and every operation is a straightforward loop. All entries
/// are required to be finite.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  const std::vector<Complex>& entries() const noexcept { return data_; }

  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

/// Standard matrix product. Throws DimensionError when a.cols() != b.rows().
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Entrywise (Hadamard) product of equally shaped matrices.
ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest absolute entry of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest deviation |a_ij - conj(a_ji)|. Requires a square matrix.
double hermiticity_defect(const ComplexMatrix& a);

/// All eigenvalues of a Hermitian matrix, ascending.
///
/// 1x1 and 2x2 use the closed form; larger sizes use cyclic complex Jacobi
/// rotations, which stay accurate for (near-)degenerate spectra. Throws
/// InvalidStateError if the input is not Hermitian within kStateTolerance.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Smallest eigenvalue of a Hermitian matrix (accuracy well below 1e-10).
double psd_min_eigenvalue(const ComplexMatrix& a);

}  // namespace triality
