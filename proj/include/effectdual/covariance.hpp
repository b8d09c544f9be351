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

#ifndef EFFECTDUAL_COVARIANCE_HPP
#define EFFECTDUAL_COVARIANCE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "effectdual/duality.hpp"
#include "effectdual/effects.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/states.hpp"

namespace effectdual {

// Finite group by multiplication table. table[g][h] is the product g*h as an
// element index; the constructor checks closure, identity, inverses and
// associativity.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> elements,
              std::vector<std::vector<std::size_t>> table,
              std::size_t identity);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup dihedral(std::size_t n);
  static FiniteGroup symmetric_3();

  std::size_t order() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(std::size_t g) const { return elements_[g]; }
  std::size_t index_of(const std::string& name) const;
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t g, std::size_t h) const {
    return table_[g][h];
  }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
};

// Left action of a group on a finite outcome space: act[g][x] is g.x.
class GroupAction {
 public:
  GroupAction(const FiniteGroup& group, OutcomeSpace space,
              std::vector<std::vector<std::size_t>> act);

  // g.x = g + x mod n for the cyclic group on an n-point space.
  static GroupAction cyclic_translation(const FiniteGroup& cyclic_group,
                                        const OutcomeSpace& space);

  const OutcomeSpace& space() const { return space_; }
  std::size_t apply(std::size_t g, std::size_t x) const { return act_[g][x]; }
  bool transitive() const;

 private:
  OutcomeSpace space_;
  std::vector<std::vector<std::size_t>> act_;
};

// Unitary representation: one unitary per group element, checked to be a
// homomorphism into U(dim) within tol.
class UnitaryRepresentation {
 public:
  UnitaryRepresentation(const FiniteGroup& group,
                        std::vector<ComplexMatrix> matrices,
                        Tolerance tol = {});

  // g |-> shift^g on C^n, shift|i> = |i+1 mod n>.
  static UnitaryRepresentation cyclic_shift(const FiniteGroup& cyclic_group,
                                            std::size_t dim);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix(std::size_t g) const { return matrices_[g]; }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> matrices_;
};

// (L_g f)(x) = f(g^{-1}.x).
ClassicalEffect left_translate(const FiniteGroup& group,
                               const GroupAction& action, std::size_t g,
                               const ClassicalEffect& f);
ProbabilityVector push_forward(const FiniteGroup& group,
                               const GroupAction& action, std::size_t g,
                               const ProbabilityVector& mu);

struct CovarianceReport {
  bool pass = true;
  double max_deviation = 0.0;
  std::string witness;  // worst probe, e.g. "g=r1, x=x2"
};

// U(g) E_x U(g)* = E_{g.x} for every g, x.
CovarianceReport check_imprimitivity(const FiniteGroup& group,
                                     const GroupAction& action,
                                     const UnitaryRepresentation& rep,
                                     const Povm& povm, Tolerance tol = {});

// Quantization intertwines left translation with conjugation:
// Q(L_g f) = U(g) Q(f) U(g)* on random probes.
CovarianceReport check_q_covariance(const FiniteGroup& group,
                                    const GroupAction& action,
                                    const UnitaryRepresentation& rep,
                                    const Povm& povm, int probes, Rng& rng,
                                    Tolerance tol = {});

// Measurement intertwines conjugation with push-forward:
// M(U(g) rho U(g)*) = g.M(rho) on random probes.
CovarianceReport check_covariant_measurement(const FiniteGroup& group,
                                             const GroupAction& action,
                                             const UnitaryRepresentation& rep,
                                             const Povm& povm, int probes,
                                             Rng& rng, Tolerance tol = {});

// Builds a covariant measure from a seed operator by group averaging from
// the first outcome as base point: the translates of the seed are whitened
// by the inverse square root of their sum, which commutes with the
// representation. Requires a PSD non-zero seed, a transitive action
// (NotTransitive) and a full-rank average (SingularAverage).
Povm build_covariant_povm(const FiniteGroup& group, const GroupAction& action,
                          const UnitaryRepresentation& rep,
                          const ComplexMatrix& seed, Tolerance tol = {});

}  // namespace effectdual

#endif
