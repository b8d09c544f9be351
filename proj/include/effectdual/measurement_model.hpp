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

#ifndef EFFECTDUAL_MEASUREMENT_MODEL_HPP
#define EFFECTDUAL_MEASUREMENT_MODEL_HPP

#include <cstddef>
#include <vector>

#include "effectdual/duality.hpp"
#include "effectdual/effects.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/rng.hpp"
#include "effectdual/states.hpp"

namespace effectdual {

// Completely positive trace-preserving map in Kraus form:
// rho |-> sum_k K_k rho K_k*, with sum_k K_k* K_k = I within tol.
class KrausChannel {
 public:
  KrausChannel(std::size_t dim_in, std::size_t dim_out,
               std::vector<ComplexMatrix> kraus, Tolerance tol = {});

  static KrausChannel identity(std::size_t dim);
  static KrausChannel unitary(const ComplexMatrix& u, Tolerance tol = {});
  static KrausChannel depolarizing(std::size_t dim, double p,
                                   Tolerance tol = {});

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  std::size_t kraus_count() const { return kraus_.size(); }
  const ComplexMatrix& kraus(std::size_t k) const { return kraus_[k]; }

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  std::vector<ComplexMatrix> kraus_;
};

// Linear extension to arbitrary inputs; the state overload revalidates.
ComplexMatrix apply_channel(const KrausChannel& lambda,
                            const ComplexMatrix& rho);
DensityMatrix apply_channel(const KrausChannel& lambda,
                            const DensityMatrix& rho, Tolerance tol = {});
// Heisenberg picture: B |-> sum_k K_k* B K_k. Unital for CPTP lambda.
ComplexMatrix channel_adjoint(const KrausChannel& lambda,
                              const ComplexMatrix& b);
// Choi matrix (I (x) lambda)(|omega><omega|), unnormalised.
ComplexMatrix choi_matrix(const KrausChannel& lambda);

// Measurement scheme: probe with initial state, composite dynamics on
// system (x) probe, and a pointer measure read out on the probe.
class MeasurementModel {
 public:
  MeasurementModel(std::size_t system_dim, DensityMatrix probe_state,
                   KrausChannel channel, Povm pointer, Tolerance tol = {});

  // Controlled shift U|i>|j> = |i>|j + i mod d> with probe ground state and
  // basis pointer.
  static MeasurementModel von_neumann(std::size_t dim);

  std::size_t system_dim() const { return system_dim_; }
  std::size_t probe_dim() const { return probe_state_.dim(); }
  const DensityMatrix& probe_state() const { return probe_state_; }
  const KrausChannel& channel() const { return channel_; }
  const Povm& pointer() const { return pointer_; }
  const OutcomeSpace& space() const { return pointer_.space(); }

 private:
  std::size_t system_dim_;
  DensityMatrix probe_state_;
  KrausChannel channel_;
  Povm pointer_;
};

// The measure the scheme realises on the system:
// E_x = Tr_probe[(I (x) rho0) Lambda*(I (x) F_x)].
Povm induced_povm(const MeasurementModel& model, Tolerance tol = {});

// Whether the scheme reproduces the statistics of `target` on random states.
DualityReport check_model_for(const MeasurementModel& model,
                              const Povm& target, int trials,
                              std::uint64_t seed, Tolerance tol = {});

// Quantization through the scheme: f is loaded on the pointer, pulled back
// through the dynamics, and compressed to the system. Accepts arbitrary real
// f, so the result is Hermitian but only an effect when f maps into [0,1].
ComplexMatrix dual_model_observable(const MeasurementModel& model,
                                    const std::vector<double>& f);
QuantumEffect dual_model_quantize(const MeasurementModel& model,
                                  const ClassicalEffect& f,
                                  Tolerance tol = {});

// Ginibre blocks whitened into a Kraus family; trace preserving by
// construction, generically non-unital.
KrausChannel random_channel(std::size_t dim, int kraus_terms, Rng& rng,
                            Tolerance tol = {});
MeasurementModel random_model(std::size_t system_dim, std::size_t probe_dim,
                              std::size_t outcomes, Rng& rng,
                              Tolerance tol = {});

}  // namespace effectdual

#endif
