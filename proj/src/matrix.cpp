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

#include "effectdual/matrix.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <utility>

namespace effectdual {

namespace {

using EigenRowMajor =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMajor> as_eigen(const ComplexMatrix& m) {
  return Eigen::Map<const EigenRowMajor>(
      m.entries().data(), static_cast<Eigen::Index>(m.rows()),
      static_cast<Eigen::Index>(m.cols()));
}

ComplexMatrix from_eigen(const EigenRowMajor& e) {
  ComplexMatrix out(static_cast<std::size_t>(e.rows()),
                    static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
  return out;
}

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square())
    throw Error(ErrorCode::dimension_mismatch,
                std::string(op) + ": matrix is not square");
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::dimension_mismatch,
                std::string(op) + ": shapes differ");
}

double hermitian_defect(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) {
      double d = std::abs(a(i, j) - std::conj(a(j, i)));
      if (d > worst) worst = d;
    }
  return worst;
}

ComplexMatrix symmetrize(const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error(ErrorCode::validation,
                "matrix: entry count does not equal rows * cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Complex(1.0, 0.0);
  return out;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix out(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      throw Error(ErrorCode::validation, "matrix: ragged row list");
    std::size_t j = 0;
    for (const auto& v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<Complex>& v,
                                   const std::vector<Complex>& w) {
  ComplexMatrix out(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      out(i, j) = v[i] * std::conj(w[j]);
  return out;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : entries_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = a;
  out += b;
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = a;
  out -= b;
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::dimension_mismatch,
                "multiply: inner dimensions differ");
  EigenRowMajor prod = as_eigen(a) * as_eigen(b);
  return from_eigen(prod);
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  out *= scalar;
  return out;
}

ComplexMatrix operator*(double scalar, const ComplexMatrix& a) {
  return Complex(scalar, 0.0) * a;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(j, i) = std::conj(a(i, j));
  return out;
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    double d = std::abs(a.entries()[k] - b.entries()[k]);
    if (d > worst) worst = d;
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, Tolerance tol) {
  require_square(a, "is_hermitian");
  return hermitian_defect(a) <= tol.eps;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& a, Tolerance tol) {
  require_square(a, "hermitian_eigensystem");
  if (hermitian_defect(a) > tol.eps)
    throw Error(ErrorCode::validation,
                "hermitian_eigensystem: matrix is not Hermitian within tol");
  ComplexMatrix sym = symmetrize(a);
  Eigen::MatrixXcd m(sym.rows(), sym.cols());
  for (std::size_t i = 0; i < sym.rows(); ++i)
    for (std::size_t j = 0; j < sym.cols(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sym(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::internal, "hermitian_eigensystem: solver failed");

  EigenSystem out;
  out.values.resize(sym.rows());
  out.vectors = ComplexMatrix(sym.rows(), sym.cols());
  for (std::size_t k = 0; k < sym.rows(); ++k) {
    out.values[k] = solver.eigenvalues()(static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < sym.rows(); ++i)
      out.vectors(i, k) = solver.eigenvectors()(
          static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          Tolerance tol) {
  return hermitian_eigensystem(a, tol).values;
}

bool is_psd(const ComplexMatrix& a, Tolerance tol) {
  require_square(a, "is_psd");
  if (hermitian_defect(a) > tol.eps) return false;
  std::vector<double> eigs = hermitian_eigenvalues(a, tol);
  return eigs.empty() || eigs.front() >= -tol.eps;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex& scale = a(i, k);
      for (std::size_t j = 0; j < b.rows(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + j, k * b.cols() + l) = scale * b(j, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& a, std::size_t dim_first,
                            std::size_t dim_second, TensorFactor traced_out) {
  std::size_t total = dim_first * dim_second;
  if (!a.is_square() || a.rows() != total)
    throw Error(ErrorCode::dimension_mismatch,
                "partial_trace: matrix does not match factor dimensions");
  if (traced_out == TensorFactor::second) {
    ComplexMatrix out(dim_first, dim_first);
    for (std::size_t i = 0; i < dim_first; ++i)
      for (std::size_t k = 0; k < dim_first; ++k) {
        Complex sum(0.0, 0.0);
        for (std::size_t j = 0; j < dim_second; ++j)
          sum += a(i * dim_second + j, k * dim_second + j);
        out(i, k) = sum;
      }
    return out;
  }
  ComplexMatrix out(dim_second, dim_second);
  for (std::size_t j = 0; j < dim_second; ++j)
    for (std::size_t l = 0; l < dim_second; ++l) {
      Complex sum(0.0, 0.0);
      for (std::size_t i = 0; i < dim_first; ++i)
        sum += a(i * dim_second + j, i * dim_second + l);
      out(j, l) = sum;
    }
  return out;
}

double operator_norm_distance(const ComplexMatrix& a, const ComplexMatrix& b,
                              Tolerance tol) {
  require_same_shape(a, b, "operator_norm_distance");
  if (!is_hermitian(a, tol) || !is_hermitian(b, tol))
    throw Error(ErrorCode::validation,
                "operator_norm_distance: inputs must be Hermitian");
  std::vector<double> eigs = hermitian_eigenvalues(a - b, tol);
  double worst = 0.0;
  for (double v : eigs) worst = std::max(worst, std::abs(v));
  return worst;
}

ComplexMatrix inverse_sqrt_psd(const ComplexMatrix& s, Tolerance tol,
                               double cutoff) {
  const EigenSystem sys = hermitian_eigensystem(s, tol);
  const std::size_t d = s.rows();
  for (double v : sys.values) {
    if (v < cutoff) {
      std::ostringstream msg;
      msg << "normalising average is singular: eigenvalue " << v
          << " below cutoff " << cutoff;
      throw Error(ErrorCode::singular_average, msg.str());
    }
  }
  ComplexMatrix out = ComplexMatrix::zero(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double w = 1.0 / std::sqrt(sys.values[k]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        out(i, j) += w * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
  }
  return out;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "parse";
    case ErrorCode::validation: return "validation";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::space_mismatch: return "space_mismatch";
    case ErrorCode::not_orthogonal: return "not_orthogonal";
    case ErrorCode::not_affine: return "not_affine";
    case ErrorCode::not_homomorphism: return "not_homomorphism";
    case ErrorCode::not_povm: return "not_povm";
    case ErrorCode::not_state: return "not_state";
    case ErrorCode::range_violation: return "range_violation";
    case ErrorCode::not_transitive: return "not_transitive";
    case ErrorCode::singular_average: return "singular_average";
    case ErrorCode::io: return "io";
    case ErrorCode::callback: return "callback";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace effectdual
