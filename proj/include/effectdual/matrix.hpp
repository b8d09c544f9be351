// Copyright 2026 The effectdual Authors
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

#ifndef EFFECTDUAL_MATRIX_HPP
#define EFFECTDUAL_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "effectdual/error.hpp"

namespace effectdual {

using Complex = std::complex<double>;

struct Tolerance {
  double eps = 1e-9;
};

// Dense complex matrix, row-major storage. Entries are stored exactly as they
// appear in the on-disk JSON encoding ({"rows", "cols", "data": [[re, im],...]}).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  // |v><w| for column vectors v, w.
  static ComplexMatrix outer(const std::vector<Complex>& v,
                             const std::vector<Complex>& w);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, const ComplexMatrix& a);
ComplexMatrix operator*(double scalar, const ComplexMatrix& a);

ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

// Largest entry-wise absolute difference; dimension mismatch is an error.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, Tolerance tol = {});

// Real spectrum in ascending order. Inputs within tol of Hermitian are
// symmetrized to (a + a†)/2 before the decomposition; anything further from
// Hermitian is rejected.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          Tolerance tol = {});

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector for values[k]
};

EigenSystem hermitian_eigensystem(const ComplexMatrix& a, Tolerance tol = {});

// Hermitian within tol with min eigenvalue >= -eps. Eigenvalues in [-eps, 0)
// count as zero.
bool is_psd(const ComplexMatrix& a, Tolerance tol = {});

// Kronecker product; block (i, j) equals a(i, j) * b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

enum class TensorFactor { first, second };

// Trace over one factor of a (dim_first * dim_second)-dimensional square
// matrix with composite index (i, j) -> i * dim_second + j.
ComplexMatrix partial_trace(const ComplexMatrix& a, std::size_t dim_first,
                            std::size_t dim_second, TensorFactor traced_out);

// Largest absolute eigenvalue of a - b; both inputs must be Hermitian.
double operator_norm_distance(const ComplexMatrix& a, const ComplexMatrix& b,
                              Tolerance tol = {});

// S^{-1/2} for Hermitian S with all eigenvalues >= cutoff; throws
// SingularAverage below the cutoff.
ComplexMatrix inverse_sqrt_psd(const ComplexMatrix& s, Tolerance tol,
                               double cutoff);

}  // namespace effectdual

#endif
