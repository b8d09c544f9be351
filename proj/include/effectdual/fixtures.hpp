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

#ifndef EFFECTDUAL_FIXTURES_HPP
#define EFFECTDUAL_FIXTURES_HPP

#include <cstddef>

#include "effectdual/covariance.hpp"
#include "effectdual/duality.hpp"
#include "effectdual/json_io.hpp"
#include "effectdual/measurement_model.hpp"
#include "effectdual/transcript.hpp"

namespace effectdual::fixtures {

// Shift-covariant system: C_n acting on n outcomes by translation, shift
// representation on C^n, basis measure.
io::CovarianceSystem cyclic_system(std::size_t n);

// S_3 in its two-dimensional irreducible representation, natural action on
// three outcomes, measure obtained by group-averaging |0><0|.
io::CovarianceSystem symmetric3_system();

// Same bundle with the first two effects swapped: still a measure, no
// longer covariant.
io::CovarianceSystem broken_variant(const io::CovarianceSystem& system);

// The two-dimensional irreducible representation of S_3 on its own.
UnitaryRepresentation symmetric3_irrep(const FiniteGroup& s3);

// Probe left untouched by the dynamics, single-outcome pointer.
MeasurementModel trivial_model(std::size_t dim);

// Dishonest boxes for the recovery paths. The first reports uniformly damped
// indicator images, so they cannot sum to the identity; the second reports
// statistics whose tomographic inversion has a negative eigenvalue.
Transcript scaled_quantization_transcript();
Transcript nonpsd_measurement_transcript();

}  // namespace effectdual::fixtures

#endif
