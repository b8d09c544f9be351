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

#include "effectdual/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "effectdual/error.hpp"

namespace effectdual::io {

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw Error(ErrorCode::parse, context + ": " + what);
}

const json& require_field(const json& j, const char* key,
                          const std::string& context) {
  if (!j.is_object()) {
    fail(context, "expected a JSON object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    fail(context, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

double require_number(const json& j, const std::string& context) {
  if (!j.is_number()) {
    fail(context, "expected a number");
  }
  return j.get<double>();
}

std::size_t require_count(const json& j, const std::string& context) {
  if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) {
    fail(context, "expected a positive integer");
  }
  return static_cast<std::size_t>(j.get<std::int64_t>());
}

std::string require_string(const json& j, const std::string& context) {
  if (!j.is_string()) {
    fail(context, "expected a string");
  }
  return j.get<std::string>();
}

OutcomeSpace space_from_json(const json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) {
    fail(context, "field \"space\" must be a non-empty array of labels");
  }
  std::vector<std::string> labels;
  labels.reserve(j.size());
  for (const auto& item : j) {
    labels.push_back(require_string(item, context + ".space"));
  }
  try {
    return OutcomeSpace(std::move(labels));
  } catch (const Error& e) {
    fail(context, std::string("field \"space\": ") + e.what());
  }
}

json space_to_json(const OutcomeSpace& space) {
  json out = json::array();
  for (const auto& label : space.labels()) {
    out.push_back(label);
  }
  return out;
}

// Values keyed by outcome label; every label must appear, nothing else may.
std::vector<double> values_by_label(const json& j, const OutcomeSpace& space,
                                    const char* field,
                                    const std::string& context) {
  const std::string where = context + "." + field;
  if (!j.is_object()) {
    fail(where, "expected an object keyed by outcome label");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!space.contains(key)) {
      fail(where, "unknown outcome label \"" + key + "\"");
    }
  }
  std::vector<double> out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto it = j.find(space.label(i));
    if (it == j.end()) {
      fail(where, "missing value for outcome \"" + space.label(i) + "\"");
    }
    out[i] = require_number(*it, where + "[\"" + space.label(i) + "\"]");
  }
  return out;
}

json values_to_json(const OutcomeSpace& space,
                    const std::vector<double>& values) {
  json out = json::object();
  for (std::size_t i = 0; i < space.size(); ++i) {
    out[space.label(i)] = values[i];
  }
  return out;
}

}  // namespace

json to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (const Complex& z : m.entries()) {
    data.push_back(json::array({z.real(), z.imag()}));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const std::string context = "matrix";
  const std::size_t rows = require_count(require_field(j, "rows", context),
                                         context + ".rows");
  const std::size_t cols = require_count(require_field(j, "cols", context),
                                         context + ".cols");
  const json& data = require_field(j, "data", context);
  if (!data.is_array()) {
    fail(context + ".data", "expected an array of [re, im] pairs");
  }
  if (data.size() != rows * cols) {
    std::ostringstream msg;
    msg << "expected " << rows * cols << " entries, got " << data.size();
    fail(context + ".data", msg.str());
  }
  ComplexMatrix out(rows, cols);
  std::size_t index = 0;
  for (const auto& item : data) {
    if (!item.is_array() || item.size() != 2) {
      fail(context + ".data", "each entry must be an [re, im] pair");
    }
    const double re = require_number(item[0], context + ".data");
    const double im = require_number(item[1], context + ".data");
    out(index / cols, index % cols) = Complex(re, im);
    ++index;
  }
  return out;
}

json to_json(const ClassicalEffect& f) {
  return json{{"space", space_to_json(f.space())},
              {"values", values_to_json(f.space(), f.values())}};
}

ClassicalEffect classical_effect_from_json(const json& j, Tolerance tol) {
  const std::string context = "classical_effect";
  OutcomeSpace space =
      space_from_json(require_field(j, "space", context), context);
  std::vector<double> values = values_by_label(
      require_field(j, "values", context), space, "values", context);
  return ClassicalEffect(std::move(space), std::move(values), tol);
}

json to_json(const QuantumEffect& e) {
  return json{{"dim", e.dim()}, {"operator", to_json(e.matrix())}};
}

QuantumEffect quantum_effect_from_json(const json& j, Tolerance tol) {
  const std::string context = "quantum_effect";
  const std::size_t dim =
      require_count(require_field(j, "dim", context), context + ".dim");
  ComplexMatrix op = matrix_from_json(require_field(j, "operator", context));
  if (op.rows() != dim || op.cols() != dim) {
    std::ostringstream msg;
    msg << "field \"operator\" is " << op.rows() << "x" << op.cols()
        << " but field \"dim\" is " << dim;
    fail(context, msg.str());
  }
  return QuantumEffect(std::move(op), tol);
}

json to_json(const ProbabilityVector& mu) {
  return json{{"space", space_to_json(mu.space())},
              {"weights", values_to_json(mu.space(), mu.weights())}};
}

ProbabilityVector probability_vector_from_json(const json& j, Tolerance tol) {
  const std::string context = "probability_vector";
  OutcomeSpace space =
      space_from_json(require_field(j, "space", context), context);
  std::vector<double> weights = values_by_label(
      require_field(j, "weights", context), space, "weights", context);
  return ProbabilityVector(std::move(space), std::move(weights), tol);
}

json to_json(const DensityMatrix& rho) {
  return json{{"dim", rho.dim()}, {"operator", to_json(rho.matrix())}};
}

DensityMatrix density_from_json(const json& j, Tolerance tol) {
  const std::string context = "density_matrix";
  const std::size_t dim =
      require_count(require_field(j, "dim", context), context + ".dim");
  ComplexMatrix op = matrix_from_json(require_field(j, "operator", context));
  if (op.rows() != dim || op.cols() != dim) {
    std::ostringstream msg;
    msg << "field \"operator\" is " << op.rows() << "x" << op.cols()
        << " but field \"dim\" is " << dim;
    fail(context, msg.str());
  }
  return DensityMatrix(std::move(op), tol);
}

json to_json(const Povm& povm) {
  json effects = json::object();
  for (std::size_t x = 0; x < povm.outcomes(); ++x) {
    effects[povm.space().label(x)] = to_json(povm.effect(x));
  }
  return json{{"space", space_to_json(povm.space())},
              {"dim", povm.dim()},
              {"effects", effects}};
}

Povm povm_from_json(const json& j, Tolerance tol) {
  const std::string context = "povm";
  OutcomeSpace space =
      space_from_json(require_field(j, "space", context), context);
  const std::size_t dim =
      require_count(require_field(j, "dim", context), context + ".dim");
  const json& effects_json = require_field(j, "effects", context);
  if (!effects_json.is_object()) {
    fail(context + ".effects", "expected an object keyed by outcome label");
  }
  for (const auto& [key, value] : effects_json.items()) {
    (void)value;
    if (!space.contains(key)) {
      fail(context + ".effects", "unknown outcome label \"" + key + "\"");
    }
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    const auto it = effects_json.find(space.label(x));
    if (it == effects_json.end()) {
      fail(context + ".effects",
           "missing effect for outcome \"" + space.label(x) + "\"");
    }
    ComplexMatrix e = matrix_from_json(*it);
    if (e.rows() != dim || e.cols() != dim) {
      fail(context + ".effects",
           "effect at \"" + space.label(x) + "\" does not match field \"dim\"");
    }
    effects.push_back(std::move(e));
  }
  return Povm(std::move(space), std::move(effects), tol);
}

json to_json(const FiniteGroup& group) {
  json elements = json::array();
  for (const auto& name : group.elements()) {
    elements.push_back(name);
  }
  json table = json::array();
  for (const auto& row : group.table()) {
    json jrow = json::array();
    for (std::size_t v : row) {
      jrow.push_back(v);
    }
    table.push_back(jrow);
  }
  return json{{"elements", elements},
              {"table", table},
              {"identity", group.element(group.identity())}};
}

FiniteGroup group_from_json(const json& j) {
  const std::string context = "group";
  const json& elements_json = require_field(j, "elements", context);
  if (!elements_json.is_array() || elements_json.empty()) {
    fail(context + ".elements", "expected a non-empty array of labels");
  }
  std::vector<std::string> elements;
  elements.reserve(elements_json.size());
  for (const auto& item : elements_json) {
    elements.push_back(require_string(item, context + ".elements"));
  }
  auto element_index = [&elements, &context](const json& cell) {
    if (cell.is_string()) {
      const std::string name = cell.get<std::string>();
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] == name) {
          return i;
        }
      }
      fail(context + ".table", "unknown element label \"" + name + "\"");
    }
    if (cell.is_number_unsigned() &&
        cell.get<std::uint64_t>() < elements.size()) {
      return static_cast<std::size_t>(cell.get<std::uint64_t>());
    }
    fail(context + ".table", "entries must be element labels or indices");
  };
  const json& table_json = require_field(j, "table", context);
  if (!table_json.is_array() || table_json.size() != elements.size()) {
    fail(context + ".table", "expected one row per element");
  }
  std::vector<std::vector<std::size_t>> table;
  table.reserve(elements.size());
  for (const auto& row_json : table_json) {
    if (!row_json.is_array() || row_json.size() != elements.size()) {
      fail(context + ".table", "expected one column per element");
    }
    std::vector<std::size_t> row;
    row.reserve(elements.size());
    for (const auto& cell : row_json) {
      row.push_back(element_index(cell));
    }
    table.push_back(std::move(row));
  }
  const json& identity_json = require_field(j, "identity", context);
  const std::size_t identity = element_index(identity_json);
  return FiniteGroup(std::move(elements), std::move(table), identity);
}

json action_to_json(const FiniteGroup& group, const GroupAction& action) {
  json map = json::object();
  for (std::size_t g = 0; g < group.order(); ++g) {
    json row = json::object();
    for (std::size_t x = 0; x < action.space().size(); ++x) {
      row[action.space().label(x)] =
          action.space().label(action.apply(g, x));
    }
    map[group.element(g)] = row;
  }
  return json{{"map", map}};
}

GroupAction action_from_json(const json& j, const FiniteGroup& group,
                             const OutcomeSpace& space) {
  const std::string context = "action";
  const json& map = require_field(j, "map", context);
  if (!map.is_object()) {
    fail(context + ".map", "expected an object keyed by group element");
  }
  for (const auto& [key, value] : map.items()) {
    (void)value;
    bool known = false;
    for (const auto& name : group.elements()) {
      known = known || name == key;
    }
    if (!known) {
      fail(context + ".map", "unknown group element \"" + key + "\"");
    }
  }
  std::vector<std::vector<std::size_t>> act(
      group.order(), std::vector<std::size_t>(space.size()));
  for (std::size_t g = 0; g < group.order(); ++g) {
    const auto row_it = map.find(group.element(g));
    if (row_it == map.end()) {
      fail(context + ".map",
           "missing row for element \"" + group.element(g) + "\"");
    }
    if (!row_it->is_object()) {
      fail(context + ".map", "row for \"" + group.element(g) +
                                 "\" must be an object keyed by outcome");
    }
    for (std::size_t x = 0; x < space.size(); ++x) {
      const auto cell = row_it->find(space.label(x));
      if (cell == row_it->end()) {
        fail(context + ".map", "element \"" + group.element(g) +
                                   "\" does not move outcome \"" +
                                   space.label(x) + "\"");
      }
      const std::string target =
          require_string(*cell, context + ".map");
      if (!space.contains(target)) {
        fail(context + ".map", "unknown target outcome \"" + target + "\"");
      }
      act[g][x] = space.index_of(target);
    }
  }
  return GroupAction(group, space, std::move(act));
}

json rep_to_json(const FiniteGroup& group, const UnitaryRepresentation& rep) {
  json matrices = json::object();
  for (std::size_t g = 0; g < group.order(); ++g) {
    matrices[group.element(g)] = to_json(rep.matrix(g));
  }
  return json{{"dim", rep.dim()}, {"matrices", matrices}};
}

UnitaryRepresentation rep_from_json(const json& j, const FiniteGroup& group,
                                    Tolerance tol) {
  const std::string context = "rep";
  const std::size_t dim =
      require_count(require_field(j, "dim", context), context + ".dim");
  const json& matrices_json = require_field(j, "matrices", context);
  if (!matrices_json.is_object()) {
    fail(context + ".matrices", "expected an object keyed by group element");
  }
  std::vector<ComplexMatrix> matrices;
  matrices.reserve(group.order());
  for (std::size_t g = 0; g < group.order(); ++g) {
    const auto it = matrices_json.find(group.element(g));
    if (it == matrices_json.end()) {
      fail(context + ".matrices",
           "missing matrix for element \"" + group.element(g) + "\"");
    }
    ComplexMatrix u = matrix_from_json(*it);
    if (u.rows() != dim || u.cols() != dim) {
      fail(context + ".matrices", "matrix for \"" + group.element(g) +
                                      "\" does not match field \"dim\"");
    }
    matrices.push_back(std::move(u));
  }
  return UnitaryRepresentation(group, std::move(matrices), tol);
}

json to_json(const CovarianceSystem& system) {
  json out{{"group", to_json(system.group)},
           {"space", space_to_json(system.action.space())},
           {"action", action_to_json(system.group, system.action)},
           {"rep", rep_to_json(system.group, system.rep)}};
  if (system.povm.has_value()) {
    out["povm"] = to_json(*system.povm);
  }
  return out;
}

CovarianceSystem system_from_json(const json& j, Tolerance tol) {
  const std::string context = "system";
  FiniteGroup group = group_from_json(require_field(j, "group", context));
  OutcomeSpace space =
      space_from_json(require_field(j, "space", context), context);
  GroupAction action =
      action_from_json(require_field(j, "action", context), group, space);
  UnitaryRepresentation rep =
      rep_from_json(require_field(j, "rep", context), group, tol);
  std::optional<Povm> povm;
  if (j.contains("povm")) {
    povm = povm_from_json(j.at("povm"), tol);
    if (!(povm->space() == space)) {
      throw Error(ErrorCode::space_mismatch,
                  "system: measure outcome space differs from field \"space\"");
    }
    if (povm->dim() != rep.dim()) {
      throw Error(ErrorCode::dimension_mismatch,
                  "system: measure dimension differs from the representation");
    }
  }
  return CovarianceSystem{std::move(group), std::move(action), std::move(rep),
                          std::move(povm)};
}

json to_json(const KrausChannel& channel) {
  json kraus = json::array();
  for (std::size_t k = 0; k < channel.kraus_count(); ++k) {
    kraus.push_back(to_json(channel.kraus(k)));
  }
  return json{{"dim_in", channel.dim_in()},
              {"dim_out", channel.dim_out()},
              {"kraus", kraus}};
}

KrausChannel channel_from_json(const json& j, Tolerance tol) {
  const std::string context = "channel";
  const std::size_t dim_in =
      require_count(require_field(j, "dim_in", context), context + ".dim_in");
  const std::size_t dim_out = require_count(
      require_field(j, "dim_out", context), context + ".dim_out");
  const json& kraus_json = require_field(j, "kraus", context);
  if (!kraus_json.is_array() || kraus_json.empty()) {
    fail(context + ".kraus", "expected a non-empty array of matrices");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(kraus_json.size());
  for (const auto& item : kraus_json) {
    kraus.push_back(matrix_from_json(item));
  }
  return KrausChannel(dim_in, dim_out, std::move(kraus), tol);
}

json to_json(const MeasurementModel& model) {
  return json{{"system_dim", model.system_dim()},
              {"probe_dim", model.probe_dim()},
              {"probe_state", to_json(model.probe_state())},
              {"channel", to_json(model.channel())},
              {"pointer", to_json(model.pointer())}};
}

MeasurementModel model_from_json(const json& j, Tolerance tol) {
  const std::string context = "model";
  const std::size_t system_dim = require_count(
      require_field(j, "system_dim", context), context + ".system_dim");
  const std::size_t probe_dim = require_count(
      require_field(j, "probe_dim", context), context + ".probe_dim");
  DensityMatrix probe_state =
      density_from_json(require_field(j, "probe_state", context), tol);
  if (probe_state.dim() != probe_dim) {
    fail(context,
         "field \"probe_state\" does not match field \"probe_dim\"");
  }
  KrausChannel channel =
      channel_from_json(require_field(j, "channel", context), tol);
  Povm pointer = povm_from_json(require_field(j, "pointer", context), tol);
  if (pointer.dim() != probe_dim) {
    fail(context, "field \"pointer\" does not match field \"probe_dim\"");
  }
  return MeasurementModel(system_dim, std::move(probe_state),
                          std::move(channel), std::move(pointer), tol);
}

json report_to_json(const DualityReport& report) {
  return json{{"trials", report.trials},
              {"max_deviation", report.max_deviation},
              {"pass", report.pass},
              {"seed", report.seed}};
}

json report_to_json(const CovarianceReport& report) {
  return json{{"pass", report.pass},
              {"max_deviation", report.max_deviation},
              {"witness", report.witness}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io, "cannot read file: " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j, bool pretty) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::io, "cannot write file: " + path);
  }
  out << dump(j, pretty);
  if (!out) {
    throw Error(ErrorCode::io, "write failed: " + path);
  }
}

std::string dump(const json& j, bool pretty) {
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

}  // namespace effectdual::io
