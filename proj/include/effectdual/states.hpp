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

#ifndef EFFECTDUAL_STATES_HPP
#define EFFECTDUAL_STATES_HPP

#include <functional>
#include <string>
#include <vector>

#include "effectdual/effects.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/rng.hpp"

namespace effectdual {

// Probability distribution on a finite outcome space. Weights are
// non-negative and sum to one within tol; the constructor renormalises the
// residual so stored weights sum to one exactly.
class ProbabilityVector {
 public:
  ProbabilityVector(OutcomeSpace space, std::vector<double> weights,
                    Tolerance tol = {});

  static ProbabilityVector point_mass(const OutcomeSpace& space,
                                      std::size_t index);
  static ProbabilityVector uniform(const OutcomeSpace& space);

  const OutcomeSpace& space() const { return space_; }
  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }
  double weight(const std::string& label) const {
    return weights_[space_.index_of(label)];
  }
  const std::vector<double>& weights() const { return weights_; }

 private:
  OutcomeSpace space_;
  std::vector<double> weights_;
};

// Density matrix: Hermitian, positive semidefinite, unit trace within tol.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix op, Tolerance tol = {});

  static DensityMatrix pure(const std::vector<Complex>& amplitudes);
  static DensityMatrix basis_state(std::size_t dim, std::size_t i);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return op_; }

 private:
  std::size_t dim_;
  ComplexMatrix op_;
};

ProbabilityVector convex_combine(double r, const ProbabilityVector& a,
                                 const ProbabilityVector& b);
DensityMatrix convex_combine(double r, const DensityMatrix& a,
                             const DensityMatrix& b);

// Pairing of a state with an effect, clamped to [0,1]:
// sum_x mu(x) f(x), Tr[rho E].
double expectation(const ProbabilityVector& mu, const ClassicalEffect& f);
double expectation(const DensityMatrix& rho, const QuantumEffect& e);

// Expectation of an arbitrary real observable on the space (not clamped).
double integrate(const std::vector<double>& f, const ProbabilityVector& mu);

struct AffinityProbeConfig {
  int probes = 50;
  double threshold = 1e-8;
};

// Representation of an affine [0,1]-valued functional on distributions by a
// value vector: phi(mu) = sum_x f(x) mu(x) with f(x) = phi(delta_x).
// Affinity is probed on random convex pairs and against the recovered f;
// violations raise NotAffine, recovered values outside [0,1] raise
// RangeViolation.
ClassicalEffect riesz_extract(
    const std::function<double(const ProbabilityVector&)>& phi,
    const OutcomeSpace& space, const AffinityProbeConfig& cfg, Rng& rng,
    Tolerance tol = {});

// Tomography frame for dimension d: the basis projectors |i><i| together
// with rank-one projectors onto (|i>+|j>)/sqrt(2) and (|i>+i|j>)/sqrt(2)
// for i<j, in that order. d*d elements, each simultaneously a valid effect
// and a pure state, spanning the Hermitian matrices over the reals.
std::vector<ComplexMatrix> tomography_frame(std::size_t dim);

// Inverts the frame pairing: returns the Hermitian M with
// Tr[M frame_k] = values[k], ordering as in tomography_frame.
ComplexMatrix hermitian_from_frame_values(std::size_t dim,
                                          const std::vector<double>& values);

// Recovers the unique density operator rho with beta(A) = Tr[rho A] from a
// black-box functional on effects, by evaluating beta on the tomography
// frame and inverting. Convex-probe or consistency failures raise
// NotAffine; anchor failures (beta(0) != 0, beta(I) != 1) and
// reconstructions that are not density matrices raise NotState.
DensityMatrix busch_extract(
    const std::function<double(const QuantumEffect&)>& beta, std::size_t dim,
    const AffinityProbeConfig& cfg, Rng& rng, Tolerance tol = {});

// A witness that effects separate states: an outcome/effect telling two
// distinct states apart, expectations differing by more than half their
// distance. Throws Validation when the inputs coincide within tol.
std::size_t separating_outcome(const ProbabilityVector& a,
                               const ProbabilityVector& b, Tolerance tol = {});
QuantumEffect separating_effect(const DensityMatrix& a, const DensityMatrix& b,
                                Tolerance tol = {});

}  // namespace effectdual

#endif
