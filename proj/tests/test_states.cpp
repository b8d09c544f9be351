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
#include <functional>
#include <vector>

#include "effectdual/effects.hpp"
#include "effectdual/error.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/random.hpp"
#include "effectdual/rng.hpp"
#include "effectdual/states.hpp"

namespace {

using namespace effectdual;

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

TEST_CASE("probability vector validation") {
  const OutcomeSpace space = OutcomeSpace::indexed(3);
  CHECK_NOTHROW(ProbabilityVector(space, {0.2, 0.3, 0.5}));
  CHECK_THROWS_AS(ProbabilityVector(space, {0.5, 0.5, 0.5}), Error);
  CHECK_THROWS_AS(ProbabilityVector(space, {-0.2, 0.7, 0.5}), Error);
  CHECK_THROWS_AS(ProbabilityVector(space, {1.0, 0.0}), Error);
  const ProbabilityVector delta = ProbabilityVector::point_mass(space, 1);
  CHECK(delta.weight(1) == 1.0);
  CHECK(delta.weight(0) == 0.0);
  const ProbabilityVector flat = ProbabilityVector::uniform(space);
  CHECK(flat.weight(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("in-tolerance weights are stored as given") {
  const OutcomeSpace space = OutcomeSpace::indexed(2);
  const ProbabilityVector mu(space, {0.3 + 1e-12, 0.7});
  CHECK(mu.weight(0) == 0.3 + 1e-12);
  CHECK(mu.weight(1) == 0.7);
  double total = 0.0;
  for (double w : mu.weights()) {
    total += w;
  }
  CHECK(std::abs(total - 1.0) <= 1e-9);
}

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix(ComplexMatrix::from_rows(
      {{Complex(0.5, 0.0), Complex(0.0, 0.5)},
       {Complex(0.0, -0.5), Complex(0.5, 0.0)}})));
  // Trace two.
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(2)), Error);
  // Negative eigenvalue.
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::from_rows(
                      {{Complex(1.3, 0.0), Complex(0.0, 0.0)},
                       {Complex(0.0, 0.0), Complex(-0.3, 0.0)}})),
                  Error);
  const DensityMatrix pure = DensityMatrix::pure(
      {Complex(1.0 / std::sqrt(2.0), 0.0), Complex(0.0, 1.0 / std::sqrt(2.0))});
  CHECK(pure.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pure.matrix()(0, 1).imag() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(DensityMatrix::basis_state(3, 1).matrix()(1, 1) == Complex(1.0, 0.0));
  CHECK(DensityMatrix::maximally_mixed(4).matrix()(0, 0) ==
        Complex(0.25, 0.0));
}

TEST_CASE("convex combination endpoints") {
  Rng rng(201);
  const OutcomeSpace space = OutcomeSpace::indexed(3);
  const ProbabilityVector mu = random_probability_vector(space, rng);
  const ProbabilityVector nu = random_probability_vector(space, rng);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(convex_combine(0.4, mu, mu).weight(i) ==
          doctest::Approx(mu.weight(i)).epsilon(1e-14));
    CHECK(convex_combine(0.0, mu, nu).weight(i) == nu.weight(i));
    CHECK(convex_combine(1.0, mu, nu).weight(i) == mu.weight(i));
  }
  const DensityMatrix mixed = convex_combine(
      0.5, DensityMatrix::basis_state(2, 0), DensityMatrix::basis_state(2, 1));
  CHECK(max_abs_diff(mixed.matrix(),
                     DensityMatrix::maximally_mixed(2).matrix()) == 0.0);
  CHECK_THROWS_AS(convex_combine(1.4, mu, nu), Error);
}

TEST_CASE("barycentric associativity") {
  Rng rng(202);
  const OutcomeSpace space = OutcomeSpace::indexed(4);
  for (int trial = 0; trial < 60; ++trial) {
    const double r = rng.uniform();
    const double s = rng.uniform();
    const double u = r + (1.0 - r) * s;
    // c_r(x, c_s(y, z)) = c_u(c_{r/u}(x, y), z) with u = r + (1-r)s.
    const ProbabilityVector x = random_probability_vector(space, rng);
    const ProbabilityVector y = random_probability_vector(space, rng);
    const ProbabilityVector z = random_probability_vector(space, rng);
    const ProbabilityVector lhs = convex_combine(r, x, convex_combine(s, y, z));
    const ProbabilityVector rhs =
        u == 0.0 ? z
                 : convex_combine(u, convex_combine(r / u, x, y), z);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(std::abs(lhs.weight(i) - rhs.weight(i)) <= 1e-12);
    }
    const DensityMatrix a = random_density(3, rng);
    const DensityMatrix b = random_density(3, rng);
    const DensityMatrix c = random_density(3, rng);
    const DensityMatrix ql = convex_combine(r, a, convex_combine(s, b, c));
    const DensityMatrix qr =
        u == 0.0 ? c : convex_combine(u, convex_combine(r / u, a, b), c);
    CHECK(max_abs_diff(ql.matrix(), qr.matrix()) <= 1e-12);
  }
}

TEST_CASE("expectation endpoints and a diagonal case") {
  Rng rng(203);
  const DensityMatrix rho = random_density(3, rng);
  CHECK(expectation(rho, QuantumEffect::unit(3)) == 1.0);
  CHECK(expectation(DensityMatrix::basis_state(2, 0),
                    QuantumEffect::basis_projector(2, 1)) == 0.0);
  const QuantumEffect e(ComplexMatrix::from_rows(
      {{Complex(0.3, 0.0), Complex(0.0, 0.0)},
       {Complex(0.0, 0.0), Complex(0.9, 0.0)}}));
  CHECK(expectation(DensityMatrix::maximally_mixed(2), e) ==
        doctest::Approx(0.6).epsilon(1e-14));
  CHECK_THROWS_AS(expectation(rho, QuantumEffect::unit(2)), Error);
}

TEST_CASE("expectation is affine in the state and additive in the effect") {
  Rng rng(204);
  for (int trial = 0; trial < 60; ++trial) {
    const DensityMatrix a = random_density(3, rng);
    const DensityMatrix b = random_density(3, rng);
    const double r = rng.uniform();
    const auto [e, f] = random_orthogonal_pair(3, rng);
    const double mixed = expectation(convex_combine(r, a, b), e);
    CHECK(std::abs(mixed - (r * expectation(a, e) +
                            (1.0 - r) * expectation(b, e))) <= 1e-12);
    const double summed = expectation(a, ovee(e, f));
    CHECK(std::abs(summed - (expectation(a, e) + expectation(a, f))) <=
          1e-12);
  }
}

TEST_CASE("riesz extraction of a point evaluation") {
  Rng rng(205);
  const OutcomeSpace space = OutcomeSpace::indexed(4);
  const ClassicalEffect f = riesz_extract(
      [](const ProbabilityVector& mu) { return mu.weight(std::size_t{0}); },
      space, {}, rng);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(f.value(i) == (i == 0 ? 1.0 : 0.0));
  }
}

TEST_CASE("riesz extraction of a constant functional") {
  Rng rng(206);
  const OutcomeSpace space = OutcomeSpace::indexed(3);
  const ClassicalEffect f = riesz_extract(
      [](const ProbabilityVector&) { return 0.5; }, space, {}, rng);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(f.value(i) == 0.5);
  }
}

TEST_CASE("riesz extraction recovers a hidden function") {
  Rng rng(207);
  for (std::size_t n = 2; n <= 8; ++n) {
    const OutcomeSpace space = OutcomeSpace::indexed(n);
    const ClassicalEffect hidden = random_classical_effect(space, rng);
    const auto phi = [&](const ProbabilityVector& mu) {
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        total += hidden.value(i) * mu.weight(i);
      }
      return total;
    };
    const ClassicalEffect got = riesz_extract(phi, space, {}, rng);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(got.value(i) - hidden.value(i)) <= 1e-9);
    }
    for (int probe = 0; probe < 100; ++probe) {
      const ProbabilityVector mu = random_probability_vector(space, rng);
      CHECK(std::abs(phi(mu) - integrate(got.values(), mu)) <= 1e-10);
    }
  }
}

TEST_CASE("riesz extraction flags non-affine functionals") {
  Rng rng(208);
  const OutcomeSpace space = OutcomeSpace::indexed(3);
  const auto worst = [](const ProbabilityVector& mu) {
    double top = 0.0;
    for (double w : mu.weights()) {
      top = std::max(top, w);
    }
    return top;
  };
  CHECK(code_of([&] { riesz_extract(worst, space, {}, rng); }) ==
        ErrorCode::not_affine);
  const auto quadratic = [](const ProbabilityVector& mu) {
    double total = 0.0;
    for (double w : mu.weights()) {
      total += w * w;
    }
    return total;
  };
  CHECK(code_of([&] { riesz_extract(quadratic, space, {}, rng); }) ==
        ErrorCode::not_affine);
}

TEST_CASE("riesz extraction flags out-of-range vertex values") {
  Rng rng(209);
  const OutcomeSpace space = OutcomeSpace::indexed(3);
  const auto hot = [](const ProbabilityVector& mu) {
    return 1.5 * mu.weight(std::size_t{0});
  };
  CHECK(code_of([&] { riesz_extract(hot, space, {}, rng); }) ==
        ErrorCode::range_violation);
}

TEST_CASE("tomography frame spans with valid effects") {
  for (std::size_t dim = 2; dim <= 5; ++dim) {
    const auto frame = tomography_frame(dim);
    CHECK(frame.size() == dim * dim);
    for (const auto& f : frame) {
      CHECK_NOTHROW(static_cast<void>(QuantumEffect(ComplexMatrix(f))));
    }
  }
}

TEST_CASE("frame inversion round trip on random hermitian input") {
  Rng rng(210);
  for (std::size_t dim = 2; dim <= 5; ++dim) {
    const ComplexMatrix h = random_hermitian(dim, rng);
    const auto frame = tomography_frame(dim);
    std::vector<double> values;
    for (const auto& f : frame) {
      values.push_back(trace(f * h).real());
    }
    CHECK(max_abs_diff(hermitian_from_frame_values(dim, values), h) <= 1e-12);
  }
}

TEST_CASE("busch extraction of a basis expectation") {
  Rng rng(211);
  const DensityMatrix rho = busch_extract(
      [](const QuantumEffect& a) { return a.matrix()(0, 0).real(); }, 2, {},
      rng);
  CHECK(max_abs_diff(rho.matrix(), DensityMatrix::basis_state(2, 0).matrix()) <=
        1e-12);
}

TEST_CASE("busch extraction of the normalized trace") {
  Rng rng(212);
  const DensityMatrix rho = busch_extract(
      [](const QuantumEffect& a) { return trace(a.matrix()).real() / 3.0; },
      3, {}, rng);
  CHECK(max_abs_diff(rho.matrix(),
                     DensityMatrix::maximally_mixed(3).matrix()) <= 1e-12);
}

TEST_CASE("busch extraction recovers a hidden state") {
  Rng rng(213);
  for (std::size_t dim = 2; dim <= 5; ++dim) {
    const DensityMatrix hidden = random_density(dim, rng);
    const auto beta = [&](const QuantumEffect& a) {
      return trace(hidden.matrix() * a.matrix()).real();
    };
    const DensityMatrix got = busch_extract(beta, dim, {}, rng);
    CHECK(max_abs_diff(got.matrix(), hidden.matrix()) <= 1e-9);
    for (int probe = 0; probe < 100; ++probe) {
      const QuantumEffect e = random_effect(dim, rng);
      CHECK(std::abs(beta(e) -
                     trace(got.matrix() * e.matrix()).real()) <= 1e-10);
    }
  }
}

TEST_CASE("busch extraction rejects broken anchors") {
  Rng rng(214);
  const auto shifted = [](const QuantumEffect& a) {
    return 0.5 + 0.5 * a.matrix()(0, 0).real();
  };
  CHECK(code_of([&] { busch_extract(shifted, 2, {}, rng); }) ==
        ErrorCode::not_state);
}

TEST_CASE("busch extraction flags non-affine functionals") {
  Rng rng(215);
  const auto spectral = [](const QuantumEffect& a) {
    return hermitian_eigenvalues(a.matrix()).back();
  };
  CHECK(code_of([&] { busch_extract(spectral, 3, {}, rng); }) ==
        ErrorCode::not_affine);
}

TEST_CASE("busch extraction rejects functionals of non-states") {
  Rng rng(216);
  // Linear with the right anchors, but induced by an indefinite operator.
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(1.3, 0.0);
  m(1, 1) = Complex(-0.3, 0.0);
  const auto beta = [&](const QuantumEffect& a) {
    return trace(m * a.matrix()).real();
  };
  CHECK(code_of([&] { busch_extract(beta, 2, {}, rng); }) ==
        ErrorCode::not_state);
}

TEST_CASE("separating outcome finds the largest gap") {
  const OutcomeSpace space = OutcomeSpace::indexed(3);
  const ProbabilityVector mu(space, {0.7, 0.2, 0.1});
  const ProbabilityVector nu(space, {0.1, 0.3, 0.6});
  const std::size_t x = separating_outcome(mu, nu);
  CHECK(x == 0);
  CHECK_THROWS_AS(separating_outcome(mu, mu), Error);
}

TEST_CASE("separating effect tells random distinct states apart") {
  Rng rng(217);
  for (int trial = 0; trial < 40; ++trial) {
    const DensityMatrix a = random_density(3, rng);
    const DensityMatrix b = random_density(3, rng);
    const double dist = operator_norm_distance(a.matrix(), b.matrix());
    if (dist <= 1e-9) {
      continue;
    }
    const QuantumEffect e = separating_effect(a, b);
    CHECK(std::abs(expectation(a, e) - expectation(b, e)) > dist / 2.0);
  }
  const DensityMatrix rho = random_density(2, rng);
  CHECK_THROWS_AS(separating_effect(rho, rho), Error);
}

}  // namespace
