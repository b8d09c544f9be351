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

#ifndef EFFECTDUAL_JSON_IO_HPP
#define EFFECTDUAL_JSON_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "effectdual/covariance.hpp"
#include "effectdual/duality.hpp"
#include "effectdual/effects.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/measurement_model.hpp"
#include "effectdual/states.hpp"

namespace effectdual::io {

using nlohmann::json;

// Parse errors carry a message naming the offending field; all throw
// Error(ErrorCode::parse).

json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const ClassicalEffect& f);
ClassicalEffect classical_effect_from_json(const json& j, Tolerance tol = {});

json to_json(const QuantumEffect& e);
QuantumEffect quantum_effect_from_json(const json& j, Tolerance tol = {});

json to_json(const ProbabilityVector& mu);
ProbabilityVector probability_vector_from_json(const json& j,
                                               Tolerance tol = {});

json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j, Tolerance tol = {});

json to_json(const Povm& povm);
Povm povm_from_json(const json& j, Tolerance tol = {});

json to_json(const FiniteGroup& group);
FiniteGroup group_from_json(const json& j);

json action_to_json(const FiniteGroup& group, const GroupAction& action);
GroupAction action_from_json(const json& j, const FiniteGroup& group,
                             const OutcomeSpace& space);

json rep_to_json(const FiniteGroup& group, const UnitaryRepresentation& rep);
// `j` may embed its own "group"; when `group` is given the embedded one is
// ignored and matrices are keyed against the supplied element names.
UnitaryRepresentation rep_from_json(const json& j, const FiniteGroup& group,
                                    Tolerance tol = {});

// Bundle consumed by the covariance subcommands: group, outcome space,
// action, representation, and usually a measure.
struct CovarianceSystem {
  FiniteGroup group;
  GroupAction action;
  UnitaryRepresentation rep;
  std::optional<Povm> povm;
};

json to_json(const CovarianceSystem& system);
CovarianceSystem system_from_json(const json& j, Tolerance tol = {});

json to_json(const KrausChannel& channel);
KrausChannel channel_from_json(const json& j, Tolerance tol = {});

json to_json(const MeasurementModel& model);
MeasurementModel model_from_json(const json& j, Tolerance tol = {});

json report_to_json(const DualityReport& report);
json report_to_json(const CovarianceReport& report);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j, bool pretty);
std::string dump(const json& j, bool pretty);

}  // namespace effectdual::io

#endif
