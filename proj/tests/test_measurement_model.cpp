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

#include "effectdual/duality.hpp"
#include "effectdual/error.hpp"
#include "effectdual/fixtures.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/measurement_model.hpp"
#include "effectdual/random.hpp"
#include "effectdual/rng.hpp"
#include "effectdual/states.hpp"

namespace {

using namespace effectdual;

TEST_CASE("kraus channel validation") {
  CHECK_NOTHROW(KrausChannel::identity(3));
  std::vector<ComplexMatrix> leaky;
  leaky.push_back(0.9 * ComplexMatrix::identity(2));
  CHECK_THROWS_AS(KrausChannel(2, 2, leaky), Error);
  CHECK_THROWS_AS(KrausChannel(2, 2, {}), Error);
  // Kraus blocks must share the declared shape.
  std::vector<ComplexMatrix> ragged;
  ragged.push_back(ComplexMatrix::identity(3));
  CHECK_THROWS_AS(KrausChannel(2, 2, ragged), Error);
}

TEST_CASE("identity and unitary channels act by conjugation") {
  Rng rng(501);
  const DensityMatrix rho = random_density(3, rng);
  const DensityMatrix same = apply_channel(KrausChannel::identity(3), rho);
  CHECK(max_abs_diff(same.matrix(), rho.matrix()) == 0.0);
  const ComplexMatrix u = random_unitary(3, rng);
  const DensityMatrix rotated = apply_channel(KrausChannel::unitary(u), rho);
  CHECK(max_abs_diff(rotated.matrix(), u * rho.matrix() * adjoint(u)) <=
        1e-13);
  CHECK_THROWS_AS(KrausChannel::unitary(2.0 * u), Error);
}

TEST_CASE("full depolarizing channel forgets its input") {
  Rng rng(502);
  const KrausChannel scrambler = KrausChannel::depolarizing(3, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_density(3, rng);
    const DensityMatrix out = apply_channel(scrambler, rho);
    CHECK(max_abs_diff(out.matrix(),
                       DensityMatrix::maximally_mixed(3).matrix()) <= 1e-12);
  }
  CHECK_THROWS_AS(KrausChannel::depolarizing(3, 1.5), Error);
}

TEST_CASE("channels preserve trace and positivity") {
  Rng rng(503);
  for (int trial = 0; trial < 15; ++trial) {
    const KrausChannel lambda = random_channel(3, 3, rng);
    const DensityMatrix rho = random_density(3, rng);
    const DensityMatrix out = apply_channel(lambda, rho);
    CHECK(std::abs(trace(out.matrix()).real() - 1.0) <= 1e-10);
    CHECK(is_psd(out.matrix(), Tolerance{1e-10}));
  }
}

TEST_CASE("channel adjoint is unital") {
  Rng rng(504);
  for (int trial = 0; trial < 15; ++trial) {
    const KrausChannel lambda = random_channel(3, 3, rng);
    CHECK(max_abs_diff(channel_adjoint(lambda, ComplexMatrix::identity(3)),
                       ComplexMatrix::identity(3)) <= 1e-10);
  }
}

TEST_CASE("adjoint pairing on random observables") {
  Rng rng(505);
  for (int trial = 0; trial < 40; ++trial) {
    const KrausChannel lambda = random_channel(3, 2, rng);
    const ComplexMatrix t = random_hermitian(3, rng);
    const ComplexMatrix b = random_hermitian(3, rng);
    const Complex lhs = trace(apply_channel(lambda, t) * b);
    const Complex rhs = trace(t * channel_adjoint(lambda, b));
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("choi matrix is positive with trace equal to the dimension") {
  Rng rng(506);
  for (int trial = 0; trial < 10; ++trial) {
    const KrausChannel lambda = random_channel(3, 3, rng);
    const ComplexMatrix choi = choi_matrix(lambda);
    CHECK(is_psd(choi, Tolerance{1e-9}));
    CHECK(std::abs(trace(choi).real() - 3.0) <= 1e-9);
  }
}

TEST_CASE("model constructor enforces composite dimensions") {
  Rng rng(507);
  const DensityMatrix probe = random_density(2, rng);
  const Povm pointer = Povm::basis(2);
  CHECK_NOTHROW(MeasurementModel(2, probe, KrausChannel::identity(4),
                                 pointer));
  CHECK_THROWS_AS(MeasurementModel(3, probe, KrausChannel::identity(4),
                                   pointer),
                  Error);
  CHECK_THROWS_AS(MeasurementModel(2, probe, KrausChannel::identity(4),
                                   Povm::basis(3)),
                  Error);
}

TEST_CASE("trivial probe induces the single-outcome measure") {
  const MeasurementModel model = fixtures::trivial_model(3);
  const Povm induced = induced_povm(model);
  CHECK(induced.outcomes() == 1);
  CHECK(max_abs_diff(induced.effect(std::size_t{0}),
                     ComplexMatrix::identity(3)) <= 1e-13);
}

TEST_CASE("von neumann scheme induces the basis measure") {
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    const MeasurementModel model = MeasurementModel::von_neumann(dim);
    const Povm induced = induced_povm(model);
    const Povm basis = Povm::basis(dim);
    for (std::size_t x = 0; x < dim; ++x) {
      CHECK(max_abs_diff(induced.effect(x), basis.effect(x)) <= 1e-12);
    }
  }
}

TEST_CASE("von neumann scheme is a model for the basis measure") {
  const MeasurementModel model = MeasurementModel::von_neumann(2);
  const Povm basis = Povm::basis(2);
  const DualityReport good = check_model_for(model, basis, 50, 11);
  CHECK(good.pass);
  CHECK(good.max_deviation <= 1e-12);

  const Povm swapped(basis.space(), {basis.effect(1), basis.effect(0)});
  const DualityReport bad = check_model_for(model, swapped, 50, 11);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_deviation >= 0.1);

  CHECK_THROWS_AS(check_model_for(model, Povm::trine(), 50, 11), Error);
}

TEST_CASE("random models reproduce their induced statistics") {
  Rng rng(508);
  for (int trial = 0; trial < 8; ++trial) {
    const MeasurementModel model = random_model(3, 2, 3, rng);
    const Povm induced = induced_povm(model);
    const DualityReport report =
        check_model_for(model, induced, 40, rng.raw());
    CHECK(report.pass);
    CHECK(report.max_deviation <= 1e-10);
  }
}

TEST_CASE("dual quantization of the unit effect is the identity") {
  Rng rng(509);
  const MeasurementModel model = random_model(2, 2, 3, rng);
  const QuantumEffect q =
      dual_model_quantize(model, ClassicalEffect::unit(model.space()));
  CHECK(max_abs_diff(q.matrix(), ComplexMatrix::identity(2)) <= 1e-10);
}

TEST_CASE("dual quantization of an indicator is the induced effect") {
  Rng rng(510);
  const MeasurementModel model = random_model(2, 2, 3, rng);
  const Povm induced = induced_povm(model);
  for (std::size_t x = 0; x < 3; ++x) {
    const QuantumEffect q = dual_model_quantize(
        model, ClassicalEffect::indicator(model.space(), x));
    CHECK(max_abs_diff(q.matrix(), induced.effect(x)) <= 1e-10);
  }
}

TEST_CASE("dual quantization factors through the induced measure") {
  Rng rng(511);
  for (int trial = 0; trial < 15; ++trial) {
    const MeasurementModel model = random_model(3, 2, 4, rng);
    const Povm induced = induced_povm(model);
    const ClassicalEffect f = random_classical_effect(model.space(), rng);
    const QuantumEffect via_model = dual_model_quantize(model, f);
    const QuantumEffect via_measure = quantize(induced, f);
    CHECK(max_abs_diff(via_model.matrix(), via_measure.matrix()) <= 1e-10);
  }
}

TEST_CASE("dual observable extends quantization linearly") {
  Rng rng(512);
  const MeasurementModel model = random_model(2, 2, 2, rng);
  const Povm induced = induced_povm(model);
  const ComplexMatrix got = dual_model_observable(model, {2.0, -1.0});
  const ComplexMatrix want =
      2.0 * induced.effect(std::size_t{0}) -
      1.0 * induced.effect(std::size_t{1});
  CHECK(is_hermitian(got, Tolerance{1e-10}));
  CHECK(max_abs_diff(got, want) <= 1e-10);
  CHECK_THROWS_AS(dual_model_observable(model, {1.0}), Error);
}

TEST_CASE("dual quantization rejects a foreign outcome space") {
  const MeasurementModel model = MeasurementModel::von_neumann(2);
  CHECK_THROWS_AS(
      dual_model_quantize(model,
                          ClassicalEffect::unit(OutcomeSpace::indexed(5))),
      Error);
}

TEST_CASE("random channel generator is deterministic per seed") {
  Rng a(77);
  Rng b(77);
  const KrausChannel ka = random_channel(3, 3, a);
  const KrausChannel kb = random_channel(3, 3, b);
  REQUIRE(ka.kraus_count() == kb.kraus_count());
  for (std::size_t k = 0; k < ka.kraus_count(); ++k) {
    CHECK(max_abs_diff(ka.kraus(k), kb.kraus(k)) == 0.0);
  }
  CHECK_THROWS_AS(random_channel(3, 0, a), Error);
}

}  // namespace
