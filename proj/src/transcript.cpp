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

#include "effectdual/transcript.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "effectdual/error.hpp"
#include "effectdual/json_io.hpp"
#include "effectdual/random.hpp"

namespace effectdual {

namespace {

using nlohmann::json;

constexpr double kMatchEps = 1e-12;

bool matches_indicator(const ClassicalEffect& f, std::size_t x) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double want = i == x ? 1.0 : 0.0;
    if (std::abs(f.value(i) - want) > kMatchEps) {
      return false;
    }
  }
  return true;
}

std::vector<double> weights_from_json(const json& j, const OutcomeSpace& space,
                                      const std::string& context) {
  if (!j.is_object()) {
    throw Error(ErrorCode::parse,
                context + ": expected an object keyed by outcome label");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!space.contains(key)) {
      throw Error(ErrorCode::parse,
                  context + ": unknown outcome label \"" + key + "\"");
    }
  }
  std::vector<double> out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto it = j.find(space.label(i));
    if (it == j.end()) {
      throw Error(ErrorCode::parse, context + ": missing value for outcome \"" +
                                        space.label(i) + "\"");
    }
    if (!it->is_number()) {
      throw Error(ErrorCode::parse, context + ": value at \"" +
                                        space.label(i) + "\" must be a number");
    }
    out[i] = it->get<double>();
  }
  return out;
}

json weights_to_json(const OutcomeSpace& space,
                     const std::vector<double>& values) {
  json out = json::object();
  for (std::size_t i = 0; i < space.size(); ++i) {
    out[space.label(i)] = values[i];
  }
  return out;
}

}  // namespace

Transcript transcript_from_json(const json& j, Tolerance tol) {
  const std::string context = "transcript";
  if (!j.is_object()) {
    throw Error(ErrorCode::parse, context + ": expected a JSON object");
  }
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw Error(ErrorCode::parse,
                context + ": missing or non-string field \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  Transcript t{Transcript::Kind::quantization, OutcomeSpace({"x"}), 0, {}, {}};
  if (kind == "quantization") {
    t.kind = Transcript::Kind::quantization;
  } else if (kind == "measurement") {
    t.kind = Transcript::Kind::measurement;
  } else {
    throw Error(ErrorCode::parse,
                context + ": field \"kind\" must be \"quantization\" or "
                          "\"measurement\", got \"" + kind + "\"");
  }
  if (!j.contains("space") || !j.at("space").is_array() ||
      j.at("space").empty()) {
    throw Error(ErrorCode::parse,
                context + ": field \"space\" must be a non-empty array");
  }
  std::vector<std::string> labels;
  for (const auto& item : j.at("space")) {
    if (!item.is_string()) {
      throw Error(ErrorCode::parse,
                  context + ": field \"space\" must hold strings");
    }
    labels.push_back(item.get<std::string>());
  }
  t.space = OutcomeSpace(std::move(labels));
  if (!j.contains("dim") || !j.at("dim").is_number_unsigned() ||
      j.at("dim").get<std::uint64_t>() == 0) {
    throw Error(ErrorCode::parse,
                context + ": field \"dim\" must be a positive integer");
  }
  t.dim = static_cast<std::size_t>(j.at("dim").get<std::uint64_t>());
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw Error(ErrorCode::parse,
                context + ": field \"entries\" must be an array");
  }
  std::size_t index = 0;
  for (const auto& entry : j.at("entries")) {
    std::ostringstream where;
    where << context << ".entries[" << index << "]";
    ++index;
    if (!entry.is_object() || !entry.contains("input") ||
        !entry.contains("output")) {
      throw Error(ErrorCode::parse,
                  where.str() + ": expected an object with "
                                "\"input\" and \"output\"");
    }
    if (t.kind == Transcript::Kind::quantization) {
      std::vector<double> values =
          weights_from_json(entry.at("input"), t.space, where.str() + ".input");
      ClassicalEffect f(t.space, std::move(values), tol);
      ComplexMatrix out = io::matrix_from_json(entry.at("output"));
      if (out.rows() != t.dim || out.cols() != t.dim) {
        throw Error(ErrorCode::parse,
                    where.str() + ".output: matrix does not match \"dim\"");
      }
      t.quantization_entries.emplace_back(std::move(f), std::move(out));
    } else {
      ComplexMatrix in = io::matrix_from_json(entry.at("input"));
      if (in.rows() != t.dim || in.cols() != t.dim) {
        throw Error(ErrorCode::parse,
                    where.str() + ".input: matrix does not match \"dim\"");
      }
      std::vector<double> out = weights_from_json(
          entry.at("output"), t.space, where.str() + ".output");
      t.measurement_entries.emplace_back(std::move(in), std::move(out));
    }
  }
  return t;
}

json to_json(const Transcript& t) {
  json entries = json::array();
  if (t.kind == Transcript::Kind::quantization) {
    for (const auto& [f, out] : t.quantization_entries) {
      entries.push_back(json{{"input", weights_to_json(t.space, f.values())},
                             {"output", io::to_json(out)}});
    }
  } else {
    for (const auto& [in, out] : t.measurement_entries) {
      entries.push_back(json{{"input", io::to_json(in)},
                             {"output", weights_to_json(t.space, out)}});
    }
  }
  json space = json::array();
  for (const auto& label : t.space.labels()) {
    space.push_back(label);
  }
  return json{{"kind", t.kind == Transcript::Kind::quantization
                           ? "quantization"
                           : "measurement"},
              {"space", space},
              {"dim", t.dim},
              {"entries", entries}};
}

namespace {

Povm recover_from_quantization(const Transcript& t, Tolerance tol) {
  const OutcomeSpace& space = t.space;
  std::vector<const ComplexMatrix*> indicator_images(space.size(), nullptr);
  for (const auto& [f, out] : t.quantization_entries) {
    for (std::size_t x = 0; x < space.size(); ++x) {
      if (matches_indicator(f, x)) {
        indicator_images[x] = &out;
      }
    }
  }
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (indicator_images[x] == nullptr) {
      throw Error(ErrorCode::validation,
                  "transcript has no indicator probe for outcome \"" +
                      space.label(x) + "\"");
    }
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(space.size());
  for (const auto* image : indicator_images) {
    effects.push_back(*image);
  }
  Povm povm = [&] {
    try {
      return Povm(space, std::move(effects), tol);
    } catch (const Error& e) {
      throw Error(ErrorCode::not_povm,
                  std::string("indicator images do not form a measure: ") +
                      e.what());
    }
  }();
  std::size_t index = 0;
  for (const auto& [f, out] : t.quantization_entries) {
    const ComplexMatrix expected = quantize(povm, f, tol).matrix();
    const double dev = max_abs_diff(expected, out);
    if (dev > tol.eps) {
      std::ostringstream msg;
      msg << "box is not the module homomorphism of its indicator images: "
          << "entry " << index << " deviates by " << dev;
      throw Error(ErrorCode::not_homomorphism, msg.str());
    }
    ++index;
  }
  return povm;
}

Povm recover_from_measurement(const Transcript& t, Tolerance tol) {
  const OutcomeSpace& space = t.space;
  const auto frame = tomography_frame(t.dim);
  std::vector<const std::vector<double>*> frame_stats(frame.size(), nullptr);
  for (const auto& [in, out] : t.measurement_entries) {
    for (std::size_t k = 0; k < frame.size(); ++k) {
      if (max_abs_diff(in, frame[k]) <= kMatchEps) {
        frame_stats[k] = &out;
      }
    }
  }
  for (std::size_t k = 0; k < frame.size(); ++k) {
    if (frame_stats[k] == nullptr) {
      std::ostringstream msg;
      msg << "transcript has no probe for tomography frame state " << k;
      throw Error(ErrorCode::validation, msg.str());
    }
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    std::vector<double> values(frame.size());
    for (std::size_t k = 0; k < frame.size(); ++k) {
      values[k] = (*frame_stats[k])[x];
    }
    effects.push_back(hermitian_from_frame_values(t.dim, values));
  }
  Povm povm = [&] {
    try {
      return Povm(space, std::move(effects), tol);
    } catch (const Error& e) {
      throw Error(ErrorCode::not_povm,
                  std::string("tomographic inversion does not yield a "
                              "measure: ") +
                      e.what());
    }
  }();
  std::size_t index = 0;
  for (const auto& [in, out] : t.measurement_entries) {
    for (std::size_t x = 0; x < space.size(); ++x) {
      const double expected = trace(in * povm.effect(x)).real();
      const double dev = std::abs(expected - out[x]);
      if (dev > tol.eps) {
        std::ostringstream msg;
        msg << "statistics are not affine in the state: entry " << index
            << " at outcome \"" << space.label(x) << "\" deviates by " << dev;
        throw Error(ErrorCode::not_affine, msg.str());
      }
    }
    ++index;
  }
  return povm;
}

}  // namespace

Povm recover_povm(const Transcript& t, Tolerance tol) {
  if (t.kind == Transcript::Kind::quantization) {
    return recover_from_quantization(t, tol);
  }
  return recover_from_measurement(t, tol);
}

Transcript record_quantization_transcript(const Povm& povm, int extra_probes,
                                          Rng& rng, Tolerance tol) {
  Transcript t{Transcript::Kind::quantization, povm.space(), povm.dim(),
               {}, {}};
  auto record = [&](const ClassicalEffect& f) {
    t.quantization_entries.emplace_back(f, quantize(povm, f, tol).matrix());
  };
  for (std::size_t x = 0; x < povm.outcomes(); ++x) {
    record(ClassicalEffect::indicator(povm.space(), x));
  }
  record(ClassicalEffect::unit(povm.space()));
  for (int k = 0; k < extra_probes; ++k) {
    record(random_classical_effect(povm.space(), rng));
  }
  return t;
}

Transcript record_measurement_transcript(const Povm& povm, int extra_probes,
                                         Rng& rng, Tolerance tol) {
  Transcript t{Transcript::Kind::measurement, povm.space(), povm.dim(),
               {}, {}};
  auto record = [&](const DensityMatrix& rho) {
    t.measurement_entries.emplace_back(rho.matrix(),
                                       measure(povm, rho, tol).weights());
  };
  for (const auto& element : tomography_frame(povm.dim())) {
    record(DensityMatrix(element, tol));
  }
  for (int k = 0; k < extra_probes; ++k) {
    record(random_density(povm.dim(), rng));
  }
  return t;
}

}  // namespace effectdual
