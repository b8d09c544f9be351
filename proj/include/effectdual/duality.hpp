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

#ifndef EFFECTDUAL_DUALITY_HPP
#define EFFECTDUAL_DUALITY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "effectdual/effects.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/rng.hpp"
#include "effectdual/states.hpp"

namespace effectdual {

// Positive operator-valued measure on a finite outcome space: one effect per
// outcome, summing to the identity within tol.
class Povm {
 public:
  Povm(OutcomeSpace space, std::vector<ComplexMatrix> effects,
       Tolerance tol = {});

  // Projective measurement in the computational basis.
  static Povm basis(std::size_t dim);
  // The three-outcome qubit measurement built from vectors at mutual angle
  // 2*pi/3 on the Bloch equator, each effect (2/3) of a projector.
  static Povm trine();

  const OutcomeSpace& space() const { return space_; }
  std::size_t dim() const { return dim_; }
  std::size_t outcomes() const { return effects_.size(); }
  const ComplexMatrix& effect(std::size_t i) const { return effects_[i]; }
  const ComplexMatrix& effect(const std::string& label) const {
    return effects_[space_.index_of(label)];
  }
  QuantumEffect effect_at(std::size_t i, Tolerance tol = {}) const;

 private:
  OutcomeSpace space_;
  std::size_t dim_;
  std::vector<ComplexMatrix> effects_;
};

// Observable as a quantization map: classical effects to quantum effects,
// f |-> sum_x f(x) E_x for the canonical form. Black-box instances wrap an
// arbitrary function for later interrogation.
class QuantizationMap {
 public:
  QuantizationMap(const Povm& povm, Tolerance tol = {});
  QuantizationMap(OutcomeSpace domain, std::size_t dim,
                  std::function<QuantumEffect(const ClassicalEffect&)> fn);

  const OutcomeSpace& domain() const { return domain_; }
  std::size_t dim() const { return dim_; }
  QuantumEffect operator()(const ClassicalEffect& f) const;

 private:
  OutcomeSpace domain_;
  std::size_t dim_;
  std::function<QuantumEffect(const ClassicalEffect&)> fn_;
};

// Observable as a measurement map: states to outcome statistics,
// rho |-> (Tr[rho E_x])_x for the canonical form.
class MeasurementMap {
 public:
  MeasurementMap(const Povm& povm, Tolerance tol = {});
  MeasurementMap(OutcomeSpace codomain, std::size_t dim,
                 std::function<ProbabilityVector(const DensityMatrix&)> fn);

  const OutcomeSpace& codomain() const { return codomain_; }
  std::size_t dim() const { return dim_; }
  ProbabilityVector operator()(const DensityMatrix& rho) const;

 private:
  OutcomeSpace codomain_;
  std::size_t dim_;
  std::function<ProbabilityVector(const DensityMatrix&)> fn_;
};

QuantumEffect quantize(const Povm& povm, const ClassicalEffect& f,
                       Tolerance tol = {});
ProbabilityVector measure(const Povm& povm, const DensityMatrix& rho,
                          Tolerance tol = {});

// Reads the measure back off a quantization map by evaluating it on the
// outcome indicators, checking the effect-module-homomorphism laws on random
// probes first. Throws NotHomomorphism when a probe fails and NotPovm when
// the indicator images do not assemble into a measure.
Povm povm_from_quantization(const QuantizationMap& q, int probes, Rng& rng,
                            Tolerance tol = {});

// Reads the measure back off a measurement map through state tomography of
// each outcome functional rho |-> m(rho)(x). Throws NotAffine when a
// functional fails the affinity probes and NotPovm when the recovered
// operators do not assemble into a measure.
Povm povm_from_measurement(const MeasurementMap& m, int probes, Rng& rng,
                           Tolerance tol = {});

struct DualityReport {
  int trials = 0;
  double max_deviation = 0.0;
  bool pass = true;
  std::uint64_t seed = 0;
};

// Checks Tr[rho Q(f)] = sum_x f(x) M(rho)(x) on random (f, rho) pairs.
DualityReport verify_duality_square(const QuantizationMap& q,
                                    const MeasurementMap& m, int trials,
                                    std::uint64_t seed, Tolerance tol = {});
DualityReport verify_duality_square(const Povm& povm, int trials,
                                    std::uint64_t seed, Tolerance tol = {});

// Random measure: Ginibre squares G_x = B_x* B_x whitened by the inverse
// square root of their sum. Retries on a singular sum, then throws
// SingularAverage.
Povm random_povm(const OutcomeSpace& space, std::size_t dim, Rng& rng,
                 Tolerance tol = {});
Povm random_povm(std::size_t dim, std::size_t n_outcomes, std::uint64_t seed,
                 Tolerance tol = {});

}  // namespace effectdual

#endif
