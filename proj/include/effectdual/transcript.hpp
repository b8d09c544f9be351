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

#ifndef EFFECTDUAL_TRANSCRIPT_HPP
#define EFFECTDUAL_TRANSCRIPT_HPP

#include <utility>
#include <vector>

#include "json.hpp"

#include "effectdual/duality.hpp"
#include "effectdual/effects.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/states.hpp"

namespace effectdual {

// Recorded interrogation of a black-box observable, one side of the duality
// per transcript. Quantization entries pair a classical effect with the
// operator the box returned; measurement entries pair an input state with
// the statistics it produced.
struct Transcript {
  enum class Kind { quantization, measurement };

  Kind kind;
  OutcomeSpace space;
  std::size_t dim;
  std::vector<std::pair<ClassicalEffect, ComplexMatrix>> quantization_entries;
  std::vector<std::pair<ComplexMatrix, std::vector<double>>>
      measurement_entries;
};

Transcript transcript_from_json(const nlohmann::json& j, Tolerance tol = {});
nlohmann::json to_json(const Transcript& t);

// Quantization side: the indicator images fix the candidate measure; every
// further entry must match its module action on the box input, else the box
// was never a homomorphism (NotHomomorphism). Measurement side: the
// tomography-frame entries fix each outcome functional by linear inversion;
// remaining entries act as affinity witnesses (NotAffine). Both sides throw
// NotPovm when the reconstruction does not assemble into a measure, and
// Validation when required probes are missing.
Povm recover_povm(const Transcript& t, Tolerance tol = {});

// Honest recordings used by fixtures and tests.
Transcript record_quantization_transcript(const Povm& povm, int extra_probes,
                                          Rng& rng, Tolerance tol = {});
Transcript record_measurement_transcript(const Povm& povm, int extra_probes,
                                         Rng& rng, Tolerance tol = {});

}  // namespace effectdual

#endif
