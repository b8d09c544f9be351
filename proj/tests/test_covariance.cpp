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

#include "effectdual/covariance.hpp"
#include "effectdual/duality.hpp"
#include "effectdual/effects.hpp"
#include "effectdual/error.hpp"
#include "effectdual/fixtures.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/random.hpp"
#include "effectdual/rng.hpp"

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

TEST_CASE("cyclic group structure") {
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  CHECK(c4.order() == 4);
  CHECK(c4.identity() == 0);
  CHECK(c4.multiply(1, 3) == 0);
  CHECK(c4.multiply(2, 3) == 1);
  CHECK(c4.inverse(1) == 3);
  CHECK(c4.element(2) == "g2");
  CHECK(c4.index_of("g3") == 3);
  CHECK_THROWS_AS(c4.index_of("h0"), Error);
}

TEST_CASE("dihedral and symmetric groups") {
  const FiniteGroup d3 = FiniteGroup::dihedral(3);
  CHECK(d3.order() == 6);
  // Reflections square to the identity.
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(d3.multiply(3 + k, 3 + k) == d3.identity());
  }
  const FiniteGroup s3 = FiniteGroup::symmetric_3();
  CHECK(s3.order() == 6);
  const std::size_t r1 = s3.index_of("r1");
  const std::size_t r2 = s3.index_of("r2");
  CHECK(s3.multiply(r1, r1) == r2);
  CHECK(s3.multiply(r1, r2) == s3.identity());
}

TEST_CASE("broken multiplication tables are rejected") {
  // 2x2 table where one element has no inverse.
  CHECK(code_of([] {
          FiniteGroup g({"e", "a"}, {{0, 1}, {1, 1}}, 0);
        }) == ErrorCode::validation);
  // Identity fails to act trivially.
  CHECK(code_of([] {
          FiniteGroup g({"e", "a"}, {{1, 0}, {0, 1}}, 0);
        }) == ErrorCode::validation);
  // Non-associative Latin square on three elements.
  CHECK(code_of([] {
          FiniteGroup g({"e", "a", "b"},
                        {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}}, 0);
        }) == ErrorCode::validation);
}

TEST_CASE("translation action laws") {
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  const GroupAction act =
      GroupAction::cyclic_translation(c4, OutcomeSpace::indexed(4));
  CHECK(act.apply(0, 2) == 2);
  CHECK(act.apply(1, 3) == 0);
  CHECK(act.transitive());
  CHECK_THROWS_AS(
      GroupAction::cyclic_translation(c4, OutcomeSpace::indexed(3)), Error);
}

TEST_CASE("incoherent action tables are rejected") {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  const OutcomeSpace space = OutcomeSpace::indexed(2);
  // Identity row must be the identity permutation.
  CHECK(code_of([&] {
          GroupAction a(c2, space, {{1, 0}, {0, 1}});
        }) == ErrorCode::validation);
  // g*g = e but the row for g is not an involution.
  CHECK(code_of([&] {
          GroupAction a(c2, space, {{0, 1}, {0, 0}});
        }) == ErrorCode::validation);
}

TEST_CASE("left translation shifts indicator support") {
  const FiniteGroup c3 = FiniteGroup::cyclic(3);
  const OutcomeSpace space = OutcomeSpace::indexed(3);
  const GroupAction act = GroupAction::cyclic_translation(c3, space);
  const ClassicalEffect f = ClassicalEffect::indicator(space, 0);
  const ClassicalEffect shifted = left_translate(c3, act, 1, f);
  CHECK(shifted.value(std::size_t{0}) == 0.0);
  CHECK(shifted.value(std::size_t{1}) == 1.0);
  CHECK(shifted.value(std::size_t{2}) == 0.0);
  const ClassicalEffect fixed = left_translate(c3, act, c3.identity(), f);
  CHECK(fixed.value(std::size_t{0}) == 1.0);
}

TEST_CASE("left translation is a left action") {
  Rng rng(401);
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  const OutcomeSpace space = OutcomeSpace::indexed(4);
  const GroupAction act = GroupAction::cyclic_translation(c4, space);
  for (int trial = 0; trial < 10; ++trial) {
    const ClassicalEffect f = random_classical_effect(space, rng);
    for (std::size_t g = 0; g < 4; ++g) {
      for (std::size_t h = 0; h < 4; ++h) {
        const ClassicalEffect nested =
            left_translate(c4, act, g, left_translate(c4, act, h, f));
        const ClassicalEffect direct =
            left_translate(c4, act, c4.multiply(g, h), f);
        for (std::size_t x = 0; x < 4; ++x) {
          CHECK(nested.value(x) == direct.value(x));
        }
      }
    }
  }
}

TEST_CASE("push forward moves point masses along the action") {
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  const OutcomeSpace space = OutcomeSpace::indexed(4);
  const GroupAction act = GroupAction::cyclic_translation(c4, space);
  for (std::size_t g = 0; g < 4; ++g) {
    for (std::size_t x = 0; x < 4; ++x) {
      const ProbabilityVector pushed = push_forward(
          c4, act, g, ProbabilityVector::point_mass(space, x));
      CHECK(pushed.weight(act.apply(g, x)) == 1.0);
    }
  }
}

TEST_CASE("cyclic shift representation is unitary and homomorphic") {
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  const UnitaryRepresentation rep =
      UnitaryRepresentation::cyclic_shift(c4, 4);
  CHECK(rep.dim() == 4);
  CHECK(max_abs_diff(rep.matrix(0), ComplexMatrix::identity(4)) == 0.0);
  for (std::size_t g = 0; g < 4; ++g) {
    CHECK(max_abs_diff(rep.matrix(g) * adjoint(rep.matrix(g)),
                       ComplexMatrix::identity(4)) <= 1e-14);
  }
  CHECK(max_abs_diff(rep.matrix(1) * rep.matrix(3),
                     ComplexMatrix::identity(4)) <= 1e-14);
}

TEST_CASE("non-unitary representation matrices are rejected") {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  std::vector<ComplexMatrix> mats;
  mats.push_back(ComplexMatrix::identity(2));
  mats.push_back(2.0 * ComplexMatrix::identity(2));
  CHECK(code_of([&] { UnitaryRepresentation rep(c2, mats); }) ==
        ErrorCode::validation);
  // Unitary matrices that fail the homomorphism law.
  std::vector<ComplexMatrix> flip;
  flip.push_back(ComplexMatrix::identity(2));
  flip.push_back(ComplexMatrix::from_rows(
      {{Complex(0.0, 0.0), Complex(0.0, 1.0)},
       {Complex(0.0, 1.0), Complex(0.0, 0.0)}}));
  CHECK(code_of([&] { UnitaryRepresentation rep(c2, flip); }) ==
        ErrorCode::validation);
}

TEST_CASE("conjugation by a representation preserves effects") {
  Rng rng(402);
  const auto sys = fixtures::symmetric3_system();
  for (int trial = 0; trial < 20; ++trial) {
    const QuantumEffect e = random_effect(2, rng);
    for (std::size_t g = 0; g < sys.group.order(); ++g) {
      const ComplexMatrix u = sys.rep.matrix(g);
      CHECK_NOTHROW(QuantumEffect(u * e.matrix() * adjoint(u),
                                  Tolerance{1e-10}));
    }
  }
}

TEST_CASE("shift system is imprimitive") {
  const auto sys = fixtures::cyclic_system(4);
  const CovarianceReport report =
      check_imprimitivity(sys.group, sys.action, sys.rep, *sys.povm);
  CHECK(report.pass);
  CHECK(report.max_deviation <= 1e-12);
}

TEST_CASE("permuted measure breaks imprimitivity with a witness") {
  const auto sys = fixtures::cyclic_system(4);
  const auto broken = fixtures::broken_variant(sys);
  const CovarianceReport report =
      check_imprimitivity(broken.group, broken.action, broken.rep,
                          *broken.povm);
  CHECK_FALSE(report.pass);
  CHECK(report.max_deviation >= 1e-2);
  CHECK_FALSE(report.witness.empty());
}

TEST_CASE("trivial group is always imprimitive") {
  const FiniteGroup c1 = FiniteGroup::cyclic(1);
  const OutcomeSpace space = OutcomeSpace::indexed(2);
  const GroupAction act(c1, space, {{0, 1}});
  const UnitaryRepresentation rep(c1, {ComplexMatrix::identity(2)});
  const CovarianceReport report =
      check_imprimitivity(c1, act, rep, Povm::basis(2));
  CHECK(report.pass);
  CHECK(report.max_deviation == 0.0);
}

TEST_CASE("quantization covariance on the unit effect is exact") {
  const auto sys = fixtures::cyclic_system(3);
  const ClassicalEffect one = ClassicalEffect::unit(sys.action.space());
  for (std::size_t g = 0; g < sys.group.order(); ++g) {
    const QuantumEffect left =
        quantize(*sys.povm, left_translate(sys.group, sys.action, g, one));
    const ComplexMatrix u = sys.rep.matrix(g);
    const ComplexMatrix right =
        u * quantize(*sys.povm, one).matrix() * adjoint(u);
    CHECK(max_abs_diff(left.matrix(), right) <= 1e-13);
  }
}

TEST_CASE("all three covariance checks agree on fixtures") {
  Rng rng(403);
  for (const auto& sys :
       {fixtures::cyclic_system(4), fixtures::cyclic_system(6),
        fixtures::symmetric3_system()}) {
    const auto imp =
        check_imprimitivity(sys.group, sys.action, sys.rep, *sys.povm);
    const auto q = check_q_covariance(sys.group, sys.action, sys.rep,
                                      *sys.povm, 8, rng);
    const auto m = check_covariant_measurement(sys.group, sys.action, sys.rep,
                                               *sys.povm, 8, rng);
    CHECK(imp.pass);
    CHECK(q.pass);
    CHECK(m.pass);
    CHECK(imp.max_deviation <= 1e-10);
    CHECK(q.max_deviation <= 1e-10);
    CHECK(m.max_deviation <= 1e-10);

    const auto broken = fixtures::broken_variant(sys);
    const auto imp_b = check_imprimitivity(broken.group, broken.action,
                                           broken.rep, *broken.povm);
    const auto q_b = check_q_covariance(broken.group, broken.action,
                                        broken.rep, *broken.povm, 8, rng);
    const auto m_b =
        check_covariant_measurement(broken.group, broken.action, broken.rep,
                                    *broken.povm, 8, rng);
    CHECK_FALSE(imp_b.pass);
    CHECK_FALSE(q_b.pass);
    CHECK_FALSE(m_b.pass);
    CHECK(imp_b.max_deviation >= 1e-2);
    CHECK(q_b.max_deviation >= 1e-2);
    CHECK(m_b.max_deviation >= 1e-2);
    CHECK_FALSE(imp_b.witness.empty());
    CHECK_FALSE(q_b.witness.empty());
    CHECK_FALSE(m_b.witness.empty());
  }
}

TEST_CASE("covariant measurement with the maximally mixed state is exact") {
  Rng rng(404);
  const auto sys = fixtures::symmetric3_system();
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  const ProbabilityVector base = measure(*sys.povm, mixed);
  for (std::size_t g = 0; g < sys.group.order(); ++g) {
    const ComplexMatrix u = sys.rep.matrix(g);
    const DensityMatrix rotated(u * mixed.matrix() * adjoint(u));
    const ProbabilityVector lhs = measure(*sys.povm, rotated);
    const ProbabilityVector rhs = push_forward(sys.group, sys.action, g, base);
    for (std::size_t x = 0; x < 3; ++x) {
      CHECK(std::abs(lhs.weight(x) - rhs.weight(x)) <= 1e-13);
    }
  }
}

TEST_CASE("group averaging a basis projector returns the basis measure") {
  const auto sys = fixtures::cyclic_system(4);
  ComplexMatrix seed(4, 4);
  seed(0, 0) = Complex(1.0, 0.0);
  const Povm povm =
      build_covariant_povm(sys.group, sys.action, sys.rep, seed);
  const Povm basis = Povm::basis(4);
  for (std::size_t x = 0; x < 4; ++x) {
    CHECK(max_abs_diff(povm.effect(x), basis.effect(x)) <= 1e-12);
  }
}

TEST_CASE("group averaging an invariant seed returns the uniform measure") {
  const auto sys = fixtures::cyclic_system(3);
  const Povm povm = build_covariant_povm(sys.group, sys.action, sys.rep,
                                         ComplexMatrix::identity(3));
  for (std::size_t x = 0; x < 3; ++x) {
    CHECK(max_abs_diff(povm.effect(x),
                       (1.0 / 3.0) * ComplexMatrix::identity(3)) <= 1e-12);
  }
}

TEST_CASE("constructed covariant measures pass the imprimitivity check") {
  Rng rng(405);
  const auto s3 = fixtures::symmetric3_system();
  const auto c4 = fixtures::cyclic_system(4);
  int successes = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto& sys = (trial % 2 == 0) ? s3 : c4;
    const std::size_t dim = sys.rep.dim();
    const ComplexMatrix b = random_matrix(dim, dim, rng);
    const ComplexMatrix seed = adjoint(b) * b;
    try {
      const Povm povm =
          build_covariant_povm(sys.group, sys.action, sys.rep, seed);
      const auto report =
          check_imprimitivity(sys.group, sys.action, sys.rep, povm);
      CHECK(report.pass);
      CHECK(report.max_deviation <= 1e-10);
      ++successes;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::singular_average);
    }
  }
  CHECK(successes > 0);
}

TEST_CASE("non-transitive actions are refused by the constructor") {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  const OutcomeSpace space = OutcomeSpace::indexed(2);
  // Both group elements fix both points.
  const GroupAction frozen(c2, space, {{0, 1}, {0, 1}});
  const UnitaryRepresentation rep =
      UnitaryRepresentation::cyclic_shift(c2, 2);
  ComplexMatrix seed(2, 2);
  seed(0, 0) = Complex(1.0, 0.0);
  CHECK(code_of([&] {
          build_covariant_povm(c2, frozen, rep, seed);
        }) == ErrorCode::not_transitive);
}

TEST_CASE("a shift-invariant seed produces a singular average") {
  const auto sys = fixtures::cyclic_system(4);
  // Rank-one projector onto the uniform vector, fixed by every shift; its
  // translates cannot span.
  std::vector<Complex> flat(4, Complex(0.5, 0.0));
  const ComplexMatrix seed = ComplexMatrix::outer(flat, flat);
  CHECK(code_of([&] {
          build_covariant_povm(sys.group, sys.action, sys.rep, seed);
        }) == ErrorCode::singular_average);
}

TEST_CASE("seed validation in the covariant constructor") {
  const auto sys = fixtures::cyclic_system(3);
  CHECK_THROWS_AS(build_covariant_povm(sys.group, sys.action, sys.rep,
                                       ComplexMatrix::zero(3, 3)),
                  Error);
  CHECK_THROWS_AS(build_covariant_povm(sys.group, sys.action, sys.rep,
                                       -1.0 * ComplexMatrix::identity(3)),
                  Error);
}

TEST_CASE("symmetric3 fixture uses a genuine two dimensional irrep") {
  const FiniteGroup s3 = FiniteGroup::symmetric_3();
  const UnitaryRepresentation rep = fixtures::symmetric3_irrep(s3);
  CHECK(rep.dim() == 2);
  // Characters: identity 2, 3-cycles -1, transpositions 0.
  CHECK(trace(rep.matrix(s3.index_of("e"))).real() ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(trace(rep.matrix(s3.index_of("r1"))).real() ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(trace(rep.matrix(s3.index_of("s0"))).real() ==
        doctest::Approx(0.0).epsilon(1e-12));
}

}  // namespace
