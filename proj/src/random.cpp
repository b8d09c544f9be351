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

#include "effectdual/random.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "effectdual/error.hpp"
#include "effectdual/states.hpp"

namespace effectdual {

namespace {

using EigenRowMajor =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

ComplexMatrix from_eigen_any(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()),
                    static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    }
  }
  return out;
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()),
                       static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(i, j);
    }
  }
  return out;
}

}  // namespace

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix out(rows, cols);
  const double scale = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out(i, j) = Complex(rng.normal() * scale, rng.normal() * scale);
    }
  }
  return out;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix g = random_matrix(dim, dim, rng);
  ComplexMatrix h = g + adjoint(g);
  h *= 0.5;
  return h;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  Eigen::MatrixXcd g = to_eigen(random_matrix(dim, dim, rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < r.cols(); ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    const Complex phase = mag > 0.0 ? d / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return from_eigen_any(q);
}

QuantumEffect random_effect(std::size_t dim, Rng& rng) {
  ComplexMatrix v = random_unitary(dim, rng);
  ComplexMatrix d = ComplexMatrix::zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    d(i, i) = Complex(rng.uniform(), 0.0);
  }
  ComplexMatrix op = v * d * adjoint(v);
  // Numerical symmetrisation; the spectrum is in [0,1] by construction.
  ComplexMatrix sym = op + adjoint(op);
  sym *= 0.5;
  return QuantumEffect(sym);
}

ClassicalEffect random_classical_effect(const OutcomeSpace& space, Rng& rng) {
  std::vector<double> values(space.size());
  for (double& v : values) {
    v = rng.uniform();
  }
  return ClassicalEffect(space, std::move(values));
}

DensityMatrix random_density(std::size_t dim, Rng& rng) {
  ComplexMatrix b = random_matrix(dim, dim, rng);
  ComplexMatrix rho = b * adjoint(b);
  const double tr = trace(rho).real();
  if (!(tr > 0.0)) {
    throw Error(ErrorCode::internal, "degenerate random density draw");
  }
  rho *= 1.0 / tr;
  ComplexMatrix sym = rho + adjoint(rho);
  sym *= 0.5;
  return DensityMatrix(sym);
}

ProbabilityVector random_probability_vector(const OutcomeSpace& space,
                                            Rng& rng) {
  std::vector<double> w(space.size());
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - rng.uniform());
    total += v;
  }
  for (double& v : w) {
    v /= total;
  }
  return ProbabilityVector(space, std::move(w));
}

std::pair<ClassicalEffect, ClassicalEffect> random_orthogonal_pair(
    const OutcomeSpace& space, Rng& rng) {
  std::vector<double> a(space.size());
  std::vector<double> b(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double sum = rng.uniform();
    const double split = rng.uniform();
    a[i] = sum * split;
    b[i] = sum * (1.0 - split);
  }
  return {ClassicalEffect(space, std::move(a)),
          ClassicalEffect(space, std::move(b))};
}

std::pair<QuantumEffect, QuantumEffect> random_orthogonal_pair(std::size_t dim,
                                                               Rng& rng) {
  ComplexMatrix v = random_unitary(dim, rng);
  ComplexMatrix da = ComplexMatrix::zero(dim, dim);
  ComplexMatrix db = ComplexMatrix::zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double sum = rng.uniform();
    const double split = rng.uniform();
    da(i, i) = Complex(sum * split, 0.0);
    db(i, i) = Complex(sum * (1.0 - split), 0.0);
  }
  auto dress = [&](const ComplexMatrix& d) {
    ComplexMatrix op = v * d * adjoint(v);
    ComplexMatrix sym = op + adjoint(op);
    sym *= 0.5;
    return QuantumEffect(sym);
  };
  return {dress(da), dress(db)};
}

}  // namespace effectdual
