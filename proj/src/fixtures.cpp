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

#include "effectdual/fixtures.hpp"

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "effectdual/error.hpp"
#include "effectdual/states.hpp"

namespace effectdual::fixtures {

namespace {

// Must list permutations in the same order as FiniteGroup::symmetric_3
// names its elements; GroupAction validation catches any drift.
constexpr std::array<std::array<std::size_t, 3>, 6> kS3Perms = {{
    {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};

}  // namespace

io::CovarianceSystem cyclic_system(std::size_t n) {
  FiniteGroup group = FiniteGroup::cyclic(n);
  OutcomeSpace space = OutcomeSpace::indexed(n);
  GroupAction action = GroupAction::cyclic_translation(group, space);
  UnitaryRepresentation rep = UnitaryRepresentation::cyclic_shift(group, n);
  Povm povm = Povm::basis(n);
  return io::CovarianceSystem{std::move(group), std::move(action),
                              std::move(rep), std::move(povm)};
}

UnitaryRepresentation symmetric3_irrep(const FiniteGroup& s3) {
  // Orthonormal basis of the plane orthogonal to (1,1,1) in R^3; conjugated
  // permutation matrices act on it as the two-dimensional irreducible piece.
  const double a = 1.0 / std::sqrt(2.0);
  const double b = 1.0 / std::sqrt(6.0);
  const std::array<std::array<double, 2>, 3> basis = {{
      {a, b}, {-a, b}, {0.0, -2.0 * b}}};
  std::vector<ComplexMatrix> matrices;
  matrices.reserve(6);
  for (const auto& perm : kS3Perms) {
    ComplexMatrix u = ComplexMatrix::zero(2, 2);
    for (std::size_t col = 0; col < 2; ++col) {
      for (std::size_t row = 0; row < 2; ++row) {
        double sum = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
          sum += basis[perm[j]][row] * basis[j][col];
        }
        u(row, col) = Complex(sum, 0.0);
      }
    }
    matrices.push_back(std::move(u));
  }
  return UnitaryRepresentation(s3, std::move(matrices));
}

io::CovarianceSystem symmetric3_system() {
  FiniteGroup group = FiniteGroup::symmetric_3();
  OutcomeSpace space = OutcomeSpace::indexed(3);
  std::vector<std::vector<std::size_t>> act(6, std::vector<std::size_t>(3));
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t x = 0; x < 3; ++x) {
      act[g][x] = kS3Perms[g][x];
    }
  }
  GroupAction action(group, space, std::move(act));
  UnitaryRepresentation rep = symmetric3_irrep(group);
  ComplexMatrix seed = ComplexMatrix::zero(2, 2);
  seed(0, 0) = Complex(1.0, 0.0);
  Povm povm = build_covariant_povm(group, action, rep, seed);
  return io::CovarianceSystem{std::move(group), std::move(action),
                              std::move(rep), std::move(povm)};
}

io::CovarianceSystem broken_variant(const io::CovarianceSystem& system) {
  if (!system.povm.has_value()) {
    throw Error(ErrorCode::validation,
                "cannot break a system that carries no measure");
  }
  const Povm& povm = *system.povm;
  if (povm.outcomes() < 2) {
    throw Error(ErrorCode::validation,
                "breaking needs at least two outcomes to swap");
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(povm.outcomes());
  for (std::size_t x = 0; x < povm.outcomes(); ++x) {
    effects.push_back(povm.effect(x));
  }
  std::swap(effects[0], effects[1]);
  Povm swapped(povm.space(), std::move(effects));
  return io::CovarianceSystem{system.group, system.action, system.rep,
                              std::move(swapped)};
}

MeasurementModel trivial_model(std::size_t dim) {
  ComplexMatrix one(1, 1);
  one(0, 0) = Complex(1.0, 0.0);
  return MeasurementModel(dim, DensityMatrix(one),
                          KrausChannel::identity(dim), Povm::basis(1));
}

Transcript scaled_quantization_transcript() {
  const Povm trine = Povm::trine();
  Transcript t{Transcript::Kind::quantization, trine.space(), trine.dim(),
               {}, {}};
  for (std::size_t x = 0; x < trine.outcomes(); ++x) {
    t.quantization_entries.emplace_back(
        ClassicalEffect::indicator(trine.space(), x), 0.9 * trine.effect(x));
  }
  t.quantization_entries.emplace_back(ClassicalEffect::unit(trine.space()),
                                      ComplexMatrix::identity(trine.dim()));
  return t;
}

Transcript nonpsd_measurement_transcript() {
  ComplexMatrix h0(2, 2);
  h0(0, 0) = Complex(0.2, 0.0);
  h0(0, 1) = Complex(0.3, 0.0);
  h0(1, 0) = Complex(0.3, 0.0);
  h0(1, 1) = Complex(0.2, 0.0);
  const ComplexMatrix h1 = ComplexMatrix::identity(2) - h0;
  Transcript t{Transcript::Kind::measurement, OutcomeSpace::indexed(2), 2,
               {}, {}};
  for (const ComplexMatrix& frame : tomography_frame(2)) {
    t.measurement_entries.emplace_back(
        frame, std::vector<double>{trace(frame * h0).real(),
                                   trace(frame * h1).real()});
  }
  return t;
}

}  // namespace effectdual::fixtures
