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

#include "effectdual.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "json.hpp"

#include "effectdual/covariance.hpp"
#include "effectdual/duality.hpp"
#include "effectdual/effects.hpp"
#include "effectdual/error.hpp"
#include "effectdual/json_io.hpp"
#include "effectdual/matrix.hpp"
#include "effectdual/measurement_model.hpp"
#include "effectdual/random.hpp"
#include "effectdual/rng.hpp"
#include "effectdual/states.hpp"
#include "effectdual/suite.hpp"
#include "effectdual/transcript.hpp"

struct ed_povm {
  effectdual::Povm impl;
};

namespace {

using effectdual::Error;
using effectdual::ErrorCode;
using effectdual::Tolerance;
using nlohmann::json;

thread_local std::string g_error_code;
thread_local std::string g_error_message;

ed_status classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_affine:
    case ErrorCode::not_homomorphism:
    case ErrorCode::not_povm:
    case ErrorCode::not_state:
      return ED_FAIL;
    case ErrorCode::callback:
    case ErrorCode::internal:
      return ED_INTERNAL;
    default:
      return ED_INVALID_INPUT;
  }
}

ed_status report_error(ErrorCode code, const std::string& message) {
  g_error_code = effectdual::error_code_name(code);
  g_error_message = message;
  return classify(code);
}

// Clean negative verdict: the report was written, nothing malfunctioned.
ed_status fail_check(const std::string& message) {
  g_error_code = "check_failed";
  g_error_message = message;
  return ED_FAIL;
}

template <typename Fn>
ed_status guarded(Fn&& fn) {
  g_error_code.clear();
  g_error_message.clear();
  try {
    return fn();
  } catch (const Error& e) {
    return report_error(e.code(), e.what());
  } catch (const std::exception& e) {
    return report_error(ErrorCode::internal, e.what());
  } catch (...) {
    return report_error(ErrorCode::internal, "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) {
    std::abort();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, bool pretty, char** out) {
  *out = dup_string(effectdual::io::dump(j, pretty));
}

Tolerance pick_tol(double tol) {
  return tol > 0.0 ? Tolerance{tol} : Tolerance{};
}

json parse_payload(const char* text, const char* what) {
  if (text == nullptr) {
    throw Error(ErrorCode::validation, std::string(what) + " is null");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string(what) + ": " + e.what());
  }
}

void require_out(void* out, const char* what) {
  if (out == nullptr) {
    throw Error(ErrorCode::validation,
                std::string(what) + " output pointer is null");
  }
}

int pick_trials(int trials) { return trials > 0 ? trials : 500; }

}  // namespace

extern "C" {

const char* ed_version(void) { return "0.1.0"; }

const char* ed_last_error_code(void) { return g_error_code.c_str(); }

const char* ed_last_error_message(void) { return g_error_message.c_str(); }

void ed_string_free(char* s) { std::free(s); }

ed_status ed_povm_parse(const char* povm_json, double tol, ed_povm** out) {
  return guarded([&]() {
    require_out(out, "measure");
    const json j = parse_payload(povm_json, "measure");
    *out = new ed_povm{effectdual::io::povm_from_json(j, pick_tol(tol))};
    return ED_OK;
  });
}

ed_status ed_povm_random(uint64_t seed, size_t dim, size_t outcomes,
                         double tol, ed_povm** out) {
  return guarded([&]() {
    require_out(out, "measure");
    *out = new ed_povm{
        effectdual::random_povm(dim, outcomes, seed, pick_tol(tol))};
    return ED_OK;
  });
}

void ed_povm_free(ed_povm* povm) { delete povm; }

ed_status ed_povm_to_json(const ed_povm* povm, int pretty, char** out) {
  return guarded([&]() {
    require_out(out, "measure json");
    if (povm == nullptr) {
      throw Error(ErrorCode::validation, "measure handle is null");
    }
    emit(effectdual::io::to_json(povm->impl), pretty != 0, out);
    return ED_OK;
  });
}

ed_status ed_povm_quantize(const ed_povm* povm, const char* effect_json,
                           double tol, char** out) {
  return guarded([&]() {
    require_out(out, "effect");
    if (povm == nullptr) {
      throw Error(ErrorCode::validation, "measure handle is null");
    }
    const Tolerance t = pick_tol(tol);
    const effectdual::ClassicalEffect f =
        effectdual::io::classical_effect_from_json(
            parse_payload(effect_json, "effect"), t);
    emit(effectdual::io::to_json(effectdual::quantize(povm->impl, f, t)),
         false, out);
    return ED_OK;
  });
}

ed_status ed_povm_measure(const ed_povm* povm, const char* state_json,
                          double tol, char** out) {
  return guarded([&]() {
    require_out(out, "distribution");
    if (povm == nullptr) {
      throw Error(ErrorCode::validation, "measure handle is null");
    }
    const Tolerance t = pick_tol(tol);
    const effectdual::DensityMatrix rho =
        effectdual::io::density_from_json(parse_payload(state_json, "state"),
                                          t);
    emit(effectdual::io::to_json(effectdual::measure(povm->impl, rho, t)),
         false, out);
    return ED_OK;
  });
}

ed_status ed_povm_verify_duality(const ed_povm* povm, int trials,
                                 uint64_t seed, double tol,
                                 char** report_out) {
  return guarded([&]() {
    require_out(report_out, "report");
    if (povm == nullptr) {
      throw Error(ErrorCode::validation, "measure handle is null");
    }
    const effectdual::DualityReport report = effectdual::verify_duality_square(
        povm->impl, pick_trials(trials), seed, pick_tol(tol));
    emit(effectdual::io::report_to_json(report), false, report_out);
    if (!report.pass) {
      return fail_check("duality square deviates beyond tolerance");
    }
    return ED_OK;
  });
}

ed_status ed_recover_povm(const char* transcript_json, double tol,
                          char** povm_out) {
  return guarded([&]() {
    require_out(povm_out, "measure");
    const Tolerance t = pick_tol(tol);
    const effectdual::Transcript transcript = effectdual::transcript_from_json(
        parse_payload(transcript_json, "transcript"), t);
    emit(effectdual::io::to_json(effectdual::recover_povm(transcript, t)),
         false, povm_out);
    return ED_OK;
  });
}

ed_status ed_check_covariance(const char* system_json, int probes,
                              uint64_t seed, double tol, char** report_out) {
  return guarded([&]() {
    require_out(report_out, "report");
    const Tolerance t = pick_tol(tol);
    const effectdual::io::CovarianceSystem sys =
        effectdual::io::system_from_json(parse_payload(system_json, "system"),
                                         t);
    if (!sys.povm.has_value()) {
      throw Error(ErrorCode::validation,
                  "system bundle carries no measure to check");
    }
    const int n_probes = probes > 0 ? probes : 8;
    effectdual::Rng rng(seed);
    const effectdual::CovarianceReport imp = effectdual::check_imprimitivity(
        sys.group, sys.action, sys.rep, *sys.povm, t);
    const effectdual::CovarianceReport qc = effectdual::check_q_covariance(
        sys.group, sys.action, sys.rep, *sys.povm, n_probes, rng, t);
    const effectdual::CovarianceReport mc =
        effectdual::check_covariant_measurement(sys.group, sys.action, sys.rep,
                                                *sys.povm, n_probes, rng, t);
    const bool agree = imp.pass == qc.pass && qc.pass == mc.pass;
    const json report{
        {"imprimitivity", effectdual::io::report_to_json(imp)},
        {"q_covariance", effectdual::io::report_to_json(qc)},
        {"covariant_measurement", effectdual::io::report_to_json(mc)},
        {"agree", agree},
        {"pass", agree && imp.pass}};
    emit(report, false, report_out);
    if (!agree) {
      return report_error(ErrorCode::internal,
                          "covariance checks returned different verdicts");
    }
    if (!imp.pass) {
      return fail_check("measure is not covariant: worst probe " +
                        imp.witness);
    }
    return ED_OK;
  });
}

ed_status ed_build_covariant(const char* system_json,
                             const char* seed_effect_json, double tol,
                             char** povm_out) {
  return guarded([&]() {
    require_out(povm_out, "measure");
    const Tolerance t = pick_tol(tol);
    const effectdual::io::CovarianceSystem sys =
        effectdual::io::system_from_json(parse_payload(system_json, "system"),
                                         t);
    const effectdual::QuantumEffect seed =
        effectdual::io::quantum_effect_from_json(
            parse_payload(seed_effect_json, "seed effect"), t);
    const effectdual::Povm built = effectdual::build_covariant_povm(
        sys.group, sys.action, sys.rep, seed.matrix(), t);
    emit(effectdual::io::to_json(built), false, povm_out);
    return ED_OK;
  });
}

ed_status ed_model_induce(const char* model_json, double tol,
                          char** povm_out) {
  return guarded([&]() {
    require_out(povm_out, "measure");
    const Tolerance t = pick_tol(tol);
    const effectdual::MeasurementModel model =
        effectdual::io::model_from_json(parse_payload(model_json, "model"), t);
    emit(effectdual::io::to_json(effectdual::induced_povm(model, t)), false,
         povm_out);
    return ED_OK;
  });
}

ed_status ed_model_check(const char* model_json, const char* target_povm_json,
                         int trials, uint64_t seed, double tol,
                         char** report_out) {
  return guarded([&]() {
    require_out(report_out, "report");
    const Tolerance t = pick_tol(tol);
    const effectdual::MeasurementModel model =
        effectdual::io::model_from_json(parse_payload(model_json, "model"), t);
    const effectdual::Povm induced = effectdual::induced_povm(model, t);
    const effectdual::Povm target =
        target_povm_json == nullptr
            ? induced
            : effectdual::io::povm_from_json(
                  parse_payload(target_povm_json, "target measure"), t);
    const effectdual::DualityReport model_for = effectdual::check_model_for(
        model, target, pick_trials(trials), seed, t);

    effectdual::Rng rng(seed ^ 0x633d75a1ba50f04dULL);
    double central_dev = 0.0;
    for (int i = 0; i < 5; ++i) {
      const effectdual::ClassicalEffect f =
          effectdual::random_classical_effect(model.space(), rng);
      const effectdual::QuantumEffect via_channel =
          effectdual::dual_model_quantize(model, f, t);
      const effectdual::QuantumEffect via_induced =
          effectdual::quantize(induced, f, t);
      central_dev = std::max(central_dev,
                             effectdual::max_abs_diff(via_channel.matrix(),
                                                      via_induced.matrix()));
    }
    const bool central_pass = central_dev <= t.eps;
    const json report{{"model_for", effectdual::io::report_to_json(model_for)},
                      {"central_identity",
                       json{{"max_deviation", central_dev},
                            {"pass", central_pass}}},
                      {"pass", model_for.pass && central_pass}};
    emit(report, false, report_out);
    if (!central_pass) {
      return report_error(
          ErrorCode::internal,
          "quantization through the channel adjoint disagrees with the "
          "induced measure");
    }
    if (!model_for.pass) {
      return fail_check("scheme does not reproduce the target statistics");
    }
    return ED_OK;
  });
}

ed_status ed_dual_quantize(const char* model_json, const char* effect_json,
                           double tol, char** effect_out) {
  return guarded([&]() {
    require_out(effect_out, "effect");
    const Tolerance t = pick_tol(tol);
    const effectdual::MeasurementModel model =
        effectdual::io::model_from_json(parse_payload(model_json, "model"), t);
    const effectdual::ClassicalEffect f =
        effectdual::io::classical_effect_from_json(
            parse_payload(effect_json, "effect"), t);
    const effectdual::QuantumEffect via_channel =
        effectdual::dual_model_quantize(model, f, t);
    const effectdual::QuantumEffect via_induced =
        effectdual::quantize(effectdual::induced_povm(model, t), f, t);
    if (effectdual::max_abs_diff(via_channel.matrix(), via_induced.matrix()) >
        t.eps) {
      throw Error(
          ErrorCode::internal,
          "quantization through the channel adjoint disagrees with the "
          "induced measure");
    }
    emit(effectdual::io::to_json(via_channel), false, effect_out);
    return ED_OK;
  });
}

ed_status ed_metric(const char* a_json, const char* b_json, double tol,
                    char** report_out) {
  return guarded([&]() {
    require_out(report_out, "report");
    const Tolerance t = pick_tol(tol);
    const json a = parse_payload(a_json, "first effect");
    const json b = parse_payload(b_json, "second effect");
    const bool a_classical = a.is_object() && a.contains("values");
    const bool b_classical = b.is_object() && b.contains("values");
    if (a_classical != b_classical) {
      throw Error(ErrorCode::space_mismatch,
                  "cannot compare a classical effect with a quantum effect");
    }
    double metric = 0.0;
    double norm = 0.0;
    std::string kind;
    if (a_classical) {
      kind = "classical";
      const effectdual::ClassicalEffect fa =
          effectdual::io::classical_effect_from_json(a, t);
      const effectdual::ClassicalEffect fb =
          effectdual::io::classical_effect_from_json(b, t);
      metric = effectdual::effect_metric(fa, fb);
      for (std::size_t i = 0; i < fa.size(); ++i) {
        norm = std::max(norm, std::abs(fa.value(i) - fb.value(i)));
      }
    } else {
      kind = "quantum";
      const effectdual::QuantumEffect ea =
          effectdual::io::quantum_effect_from_json(a, t);
      const effectdual::QuantumEffect eb =
          effectdual::io::quantum_effect_from_json(b, t);
      metric = effectdual::effect_metric(ea, eb, t);
      norm = effectdual::operator_norm_distance(ea.matrix(), eb.matrix(), t);
    }
    const double deviation = std::abs(metric - norm);
    const bool pass = deviation <= t.eps;
    const json report{{"kind", kind},
                      {"metric", metric},
                      {"norm_distance", norm},
                      {"max_deviation", deviation},
                      {"pass", pass}};
    emit(report, false, report_out);
    if (!pass) {
      return report_error(ErrorCode::internal,
                          "metric disagrees with norm distance");
    }
    return ED_OK;
  });
}

ed_status ed_run_suite(uint64_t seed, int trials, double tol,
                       const char* fixtures_dir, char** report_out) {
  return guarded([&]() {
    require_out(report_out, "report");
    effectdual::SuiteConfig cfg;
    cfg.seed = seed;
    cfg.trials = pick_trials(trials);
    cfg.tol = pick_tol(tol);
    if (fixtures_dir != nullptr) {
      cfg.fixtures_dir = fixtures_dir;
    }
    const auto results = effectdual::run_property_suite(cfg);
    const json report = effectdual::suite_report(results, cfg);
    emit(report, false, report_out);
    if (!report.at("pass").get<bool>()) {
      return fail_check("property suite failed");
    }
    return ED_OK;
  });
}

}  // extern "C"
