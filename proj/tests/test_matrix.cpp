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

#include "doctest.h"

#include <cmath>
#include <vector>

#include "effectdual/error.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/random.hpp"
#include "effectdual/rng.hpp"
#include "effectdual/states.hpp"

using namespace effectdual;

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x(0, 1) = Complex(1.0, 0.0);
  x(1, 0) = Complex(1.0, 0.0);
  return x;
}

ComplexMatrix pauli_y() {
  ComplexMatrix y(2, 2);
  y(0, 1) = Complex(0.0, -1.0);
  y(1, 0) = Complex(0.0, 1.0);
  return y;
}

ComplexMatrix diag(const std::vector<double>& entries) {
  ComplexMatrix d(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    d(i, i) = Complex(entries[i], 0.0);
  }
  return d;
}

// Oracle for the product: the textbook triple loop, written independently
// of the implementation.
ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("identity is neutral for the product") {
  Rng rng(11);
  const ComplexMatrix a = random_matrix(2, 2, rng);
  CHECK(max_abs_diff(ComplexMatrix::identity(2) * a, a) == 0.0);
  CHECK(max_abs_diff(a * ComplexMatrix::identity(2), a) == 0.0);
}

TEST_CASE("the flip matrix squares to the identity") {
  CHECK(max_abs_diff(pauli_x() * pauli_x(), ComplexMatrix::identity(2)) ==
        0.0);
}

TEST_CASE("product matches the naive triple loop") {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_matrix(3, 3, rng);
    const ComplexMatrix b = random_matrix(3, 3, rng);
    CHECK(max_abs_diff(a * b, naive_product(a, b)) <= 1e-13);
  }
}

TEST_CASE("product requires compatible shapes") {
  const ComplexMatrix a(2, 3);
  const ComplexMatrix b(2, 3);
  CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("product is associative") {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_matrix(4, 4, rng);
    const ComplexMatrix b = random_matrix(4, 4, rng);
    const ComplexMatrix c = random_matrix(4, 4, rng);
    CHECK(max_abs_diff((a * b) * c, a * (b * c)) <= 1e-10);
  }
}

TEST_CASE("adjoint fixes Hermitian matrices") {
  CHECK(max_abs_diff(adjoint(pauli_y()), pauli_y()) == 0.0);
}

TEST_CASE("adjoint reverses products and is an involution") {
  Rng rng(14);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_matrix(2, 2, rng);
    const ComplexMatrix b = random_matrix(2, 2, rng);
    CHECK(max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a)) <= 1e-12);
    CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
  }
}

TEST_CASE("hermiticity check accepts and rejects correctly") {
  CHECK(is_hermitian(pauli_x()));
  ComplexMatrix upper(2, 2);
  upper(0, 1) = Complex(1.0, 0.0);
  CHECK_FALSE(is_hermitian(upper));
  Rng rng(15);
  const ComplexMatrix a = random_matrix(3, 3, rng);
  CHECK(is_hermitian(a + adjoint(a)));
}

TEST_CASE("eigenvalues of a diagonal matrix come back sorted") {
  const std::vector<double> ev = hermitian_eigenvalues(diag({3.0, 1.0, 2.0}));
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("the flip matrix has spectrum minus one, one") {
  const std::vector<double> ev = hermitian_eigenvalues(pauli_x());
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenpairs satisfy the residual equation") {
  Rng rng(16);
  const ComplexMatrix a = random_hermitian(4, rng);
  const EigenSystem sys = hermitian_eigensystem(a);
  for (std::size_t k = 0; k < sys.values.size(); ++k) {
    double residual = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      Complex av(0.0, 0.0);
      for (std::size_t j = 0; j < 4; ++j) {
        av += a(i, j) * sys.vectors(j, k);
      }
      residual = std::hypot(residual,
                            std::abs(av - sys.values[k] * sys.vectors(i, k)));
    }
    CHECK(residual <= 1e-8);
  }
}

TEST_CASE("eigendecomposition reconstructs the matrix") {
  Rng rng(17);
  const ComplexMatrix a = random_hermitian(5, rng);
  const EigenSystem sys = hermitian_eigensystem(a);
  ComplexMatrix rebuilt(5, 5);
  for (std::size_t k = 0; k < sys.values.size(); ++k) {
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        rebuilt(i, j) += sys.values[k] * sys.vectors(i, k) *
                         std::conj(sys.vectors(j, k));
      }
    }
  }
  CHECK(max_abs_diff(rebuilt, a) <= 1e-8);
}

TEST_CASE("eigenvalue extraction rejects non-Hermitian input") {
  ComplexMatrix upper(2, 2);
  upper(0, 1) = Complex(1.0, 0.0);
  CHECK_THROWS_AS(hermitian_eigenvalues(upper), Error);
}

TEST_CASE("positivity check on projectors, negations, and Gram matrices") {
  ComplexMatrix ground(2, 2);
  ground(0, 0) = Complex(1.0, 0.0);
  CHECK(is_psd(ground));
  CHECK_FALSE(is_psd(-1.0 * ComplexMatrix::identity(2)));
  Rng rng(18);
  const ComplexMatrix b = random_matrix(3, 3, rng);
  CHECK(is_psd(adjoint(b) * b));
}

TEST_CASE("tensor of identities is the identity") {
  CHECK(max_abs_diff(tensor(ComplexMatrix::identity(2),
                            ComplexMatrix::identity(3)),
                     ComplexMatrix::identity(6)) == 0.0);
}

TEST_CASE("tensor of basis projectors lands on the composite index") {
  ComplexMatrix p0(2, 2);
  p0(0, 0) = Complex(1.0, 0.0);
  ComplexMatrix p1(2, 2);
  p1(1, 1) = Complex(1.0, 0.0);
  ComplexMatrix expected(4, 4);
  expected(1, 1) = Complex(1.0, 0.0);
  CHECK(max_abs_diff(tensor(p0, p1), expected) == 0.0);
}

TEST_CASE("trace is multiplicative over tensor") {
  Rng rng(19);
  const ComplexMatrix a = random_matrix(3, 3, rng);
  const ComplexMatrix b = random_matrix(2, 2, rng);
  CHECK(std::abs(trace(tensor(a, b)) - trace(a) * trace(b)) <= 1e-12);
}

TEST_CASE("tensor satisfies the mixed-product identity") {
  Rng rng(20);
  const ComplexMatrix a = random_matrix(2, 2, rng);
  const ComplexMatrix b = random_matrix(3, 3, rng);
  const ComplexMatrix c = random_matrix(2, 2, rng);
  const ComplexMatrix d = random_matrix(3, 3, rng);
  CHECK(max_abs_diff(tensor(a, b) * tensor(c, d), tensor(a * c, b * d)) <=
        1e-10);
}

TEST_CASE("partial trace over the second factor of identity times identity") {
  const ComplexMatrix full = tensor(ComplexMatrix::identity(2),
                                    ComplexMatrix::identity(2));
  CHECK(max_abs_diff(partial_trace(full, 2, 2, TensorFactor::second),
                     2.0 * ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("partial trace factorizes product states") {
  Rng rng(21);
  const DensityMatrix rho = random_density(2, rng);
  const DensityMatrix sigma = random_density(3, rng);
  const ComplexMatrix joint = tensor(rho.matrix(), sigma.matrix());
  CHECK(max_abs_diff(partial_trace(joint, 2, 3, TensorFactor::second),
                     rho.matrix()) <= 1e-12);
  CHECK(max_abs_diff(partial_trace(joint, 2, 3, TensorFactor::first),
                     sigma.matrix()) <= 1e-12);
}

TEST_CASE("iterated partial traces give the full trace") {
  Rng rng(22);
  const ComplexMatrix a = random_matrix(6, 6, rng);
  const ComplexMatrix reduced = partial_trace(a, 2, 3, TensorFactor::first);
  CHECK(std::abs(trace(reduced) - trace(a)) <= 1e-10);
  const ComplexMatrix other = partial_trace(a, 2, 3, TensorFactor::second);
  CHECK(std::abs(trace(other) - trace(a)) <= 1e-10);
}

TEST_CASE("partial trace rejects a shape that does not factor") {
  const ComplexMatrix a(5, 5);
  CHECK_THROWS_AS(partial_trace(a, 2, 3, TensorFactor::second), Error);
}

TEST_CASE("norm distance of a matrix to itself is zero") {
  Rng rng(23);
  const ComplexMatrix a = random_hermitian(3, rng);
  CHECK(operator_norm_distance(a, a) == 0.0);
}

TEST_CASE("norm distance of identity to zero is one") {
  CHECK(operator_norm_distance(ComplexMatrix::identity(3),
                               ComplexMatrix::zero(3, 3)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm distance of two diagonal effects") {
  CHECK(operator_norm_distance(diag({0.9, 0.1}), diag({0.1, 0.3})) ==
        doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("inverse square root whitens a positive matrix") {
  Rng rng(24);
  const ComplexMatrix b = random_matrix(4, 4, rng);
  const ComplexMatrix s =
      adjoint(b) * b + 0.1 * ComplexMatrix::identity(4);
  const ComplexMatrix w = inverse_sqrt_psd(s, Tolerance{}, 1e-10);
  CHECK(max_abs_diff(w * s * w, ComplexMatrix::identity(4)) <= 1e-9);
}

TEST_CASE("inverse square root refuses a singular matrix") {
  try {
    inverse_sqrt_psd(diag({1.0, 0.0}), Tolerance{}, 1e-10);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular_average);
  }
}
