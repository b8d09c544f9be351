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

#ifndef EFFECTDUAL_RANDOM_HPP
#define EFFECTDUAL_RANDOM_HPP

#include <utility>

#include "effectdual/effects.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/rng.hpp"

namespace effectdual {

class ProbabilityVector;
class DensityMatrix;

// Ginibre matrix: independent standard complex Gaussian entries.
ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

// Haar-distributed, via QR of a Ginibre matrix with the phase convention
// fixed so R has positive diagonal.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

// V diag(u) V* with uniform u in [0,1] and Haar V.
QuantumEffect random_effect(std::size_t dim, Rng& rng);

ClassicalEffect random_classical_effect(const OutcomeSpace& space, Rng& rng);

// B B* normalised to unit trace, B Ginibre.
DensityMatrix random_density(std::size_t dim, Rng& rng);

ProbabilityVector random_probability_vector(const OutcomeSpace& space,
                                            Rng& rng);

// Pair (a, b) with a (+) b defined; drawn independently and rescaled when the
// sum escapes the unit interval.
std::pair<ClassicalEffect, ClassicalEffect> random_orthogonal_pair(
    const OutcomeSpace& space, Rng& rng);
std::pair<QuantumEffect, QuantumEffect> random_orthogonal_pair(std::size_t dim,
                                                               Rng& rng);

}  // namespace effectdual

#endif
