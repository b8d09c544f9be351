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

// Regenerates the committed fixture files. Deterministic: fixed seeds, so a
// rerun reproduces the repository content byte for byte.

#include <filesystem>
#include <iostream>
#include <string>

#include "effectdual/duality.hpp"
#include "effectdual/fixtures.hpp"
#include "effectdual/json_io.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/measurement_model.hpp"
#include "effectdual/rng.hpp"
#include "effectdual/states.hpp"
#include "effectdual/transcript.hpp"

namespace {

using namespace effectdual;

void write(const std::filesystem::path& dir, const char* name,
           const nlohmann::json& j) {
  io::save_json_file((dir / name).string(), j, true);
  std::cout << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  const Povm trine = Povm::trine();
  write(dir, "trine.json", io::to_json(trine));

  {
    nlohmann::json j = io::to_json(trine);
    for (auto& [label, eff] : j.at("effects").items()) {
      for (auto& entry : eff.at("data")) {
        entry[0] = entry[0].get<double>() * 0.9;
        entry[1] = entry[1].get<double>() * 0.9;
      }
    }
    write(dir, "bad_povm.json", j);
  }

  const io::CovarianceSystem c4 = fixtures::cyclic_system(4);
  const io::CovarianceSystem c6 = fixtures::cyclic_system(6);
  const io::CovarianceSystem s3 = fixtures::symmetric3_system();
  write(dir, "c4_system.json", io::to_json(c4));
  write(dir, "c6_system.json", io::to_json(c6));
  write(dir, "s3_system.json", io::to_json(s3));
  write(dir, "c4_system_broken.json",
        io::to_json(fixtures::broken_variant(c4)));
  write(dir, "c6_system_broken.json",
        io::to_json(fixtures::broken_variant(c6)));
  write(dir, "s3_system_broken.json",
        io::to_json(fixtures::broken_variant(s3)));

  write(dir, "von_neumann3.json",
        io::to_json(MeasurementModel::von_neumann(3)));
  write(dir, "trivial_model2.json", io::to_json(fixtures::trivial_model(2)));

  Rng rq(42);
  Rng rm(43);
  write(dir, "transcript_q_trine.json",
        to_json(record_quantization_transcript(trine, 3, rq)));
  write(dir, "transcript_m_trine.json",
        to_json(record_measurement_transcript(trine, 3, rm)));
  write(dir, "transcript_q_scaled.json",
        to_json(fixtures::scaled_quantization_transcript()));
  write(dir, "transcript_m_nonpsd.json",
        to_json(fixtures::nonpsd_measurement_transcript()));

  write(dir, "effect_trine.json",
        io::to_json(ClassicalEffect(trine.space(), {1.0, 0.5, 0.0})));
  write(dir, "effect_unit_trine.json",
        io::to_json(ClassicalEffect::unit(trine.space())));
  write(dir, "state_qubit.json",
        io::to_json(DensityMatrix::basis_state(2, 0)));

  {
    ComplexMatrix seed2(2, 2);
    seed2(0, 0) = Complex(0.7, 0.0);
    seed2(0, 1) = Complex(0.2, 0.0);
    seed2(1, 0) = Complex(0.2, 0.0);
    seed2(1, 1) = Complex(0.3, 0.0);
    write(dir, "seed_effect2.json", io::to_json(QuantumEffect(seed2)));
  }
  {
    ComplexMatrix seed4 = ComplexMatrix::zero(4, 4);
    seed4(0, 0) = Complex(0.9, 0.0);
    seed4(1, 1) = Complex(0.4, 0.0);
    seed4(2, 2) = Complex(0.1, 0.0);
    seed4(3, 3) = Complex(0.2, 0.0);
    seed4(0, 1) = Complex(0.05, 0.0);
    seed4(1, 0) = Complex(0.05, 0.0);
    write(dir, "seed_effect4.json", io::to_json(QuantumEffect(seed4)));
  }

  return 0;
}
