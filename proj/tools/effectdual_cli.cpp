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

// JSON-only front end over the C API. Reports go to stdout (or --output);
// diagnostics go to stderr as an {"error": ...} object. Exit codes: 0 pass,
// 1 property violation, 2 invalid input, 3 internal invariant breach.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "effectdual.h"

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string effect;
  std::string state;
  std::string target;
  std::string seed_effect;
  std::string fixtures;
  std::string metric_a;
  std::string metric_b;
  std::uint64_t seed = 0;
  int trials = 500;
  int probes = 8;
  double tol = 0.0;
  bool pretty = false;
  bool random = false;
  std::size_t dim = 0;
  std::size_t outcomes = 0;
};

int emit_error(const std::string& code, const std::string& message,
               int status) {
  const nlohmann::json err{
      {"error", {{"code", code}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
  return status;
}

int api_error(ed_status status) {
  return emit_error(ed_last_error_code(), ed_last_error_message(),
                    static_cast<int>(status));
}

bool slurp(const std::string& path, std::string* out, int* rc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *rc = emit_error("io", "cannot read file: " + path, 2);
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return true;
}

// Renders the payload (when any) and turns the status into an exit code.
int deliver(ed_status status, char* payload, const Options& opt) {
  int rc = static_cast<int>(status);
  if (payload != nullptr) {
    std::string text(payload);
    ed_string_free(payload);
    if (opt.pretty) {
      text = nlohmann::json::parse(text).dump(2);
      text.push_back('\n');
    }
    if (!opt.output.empty()) {
      std::ofstream out(opt.output, std::ios::binary);
      if (!out) {
        return emit_error("io", "cannot write file: " + opt.output, 2);
      }
      out << text;
    } else {
      std::cout << text;
    }
  }
  if (status != ED_OK) {
    return api_error(status);
  }
  return rc;
}

int load_povm(const Options& opt, ed_povm** handle) {
  if (opt.random) {
    if (opt.dim == 0 || opt.outcomes == 0) {
      return emit_error("validation",
                        "--random needs --dim and --outcomes", 2);
    }
    const ed_status st =
        ed_povm_random(opt.seed, opt.dim, opt.outcomes, opt.tol, handle);
    return st == ED_OK ? 0 : api_error(st);
  }
  if (opt.input.empty()) {
    return emit_error("validation", "--input file is required", 2);
  }
  std::string text;
  int rc = 0;
  if (!slurp(opt.input, &text, &rc)) {
    return rc;
  }
  const ed_status st = ed_povm_parse(text.c_str(), opt.tol, handle);
  return st == ED_OK ? 0 : api_error(st);
}

int cmd_verify_duality(const Options& opt) {
  ed_povm* handle = nullptr;
  if (const int rc = load_povm(opt, &handle); rc != 0) {
    return rc;
  }
  char* report = nullptr;
  const ed_status st =
      ed_povm_verify_duality(handle, opt.trials, opt.seed, opt.tol, &report);
  ed_povm_free(handle);
  return deliver(st, report, opt);
}

int cmd_quantize(const Options& opt) {
  ed_povm* handle = nullptr;
  if (const int rc = load_povm(opt, &handle); rc != 0) {
    return rc;
  }
  std::string effect;
  int rc = 0;
  if (!slurp(opt.effect, &effect, &rc)) {
    ed_povm_free(handle);
    return rc;
  }
  char* out = nullptr;
  const ed_status st =
      ed_povm_quantize(handle, effect.c_str(), opt.tol, &out);
  ed_povm_free(handle);
  return deliver(st, out, opt);
}

int cmd_measure(const Options& opt) {
  ed_povm* handle = nullptr;
  if (const int rc = load_povm(opt, &handle); rc != 0) {
    return rc;
  }
  std::string state;
  int rc = 0;
  if (!slurp(opt.state, &state, &rc)) {
    ed_povm_free(handle);
    return rc;
  }
  char* out = nullptr;
  const ed_status st = ed_povm_measure(handle, state.c_str(), opt.tol, &out);
  ed_povm_free(handle);
  return deliver(st, out, opt);
}

int cmd_recover_povm(const Options& opt) {
  std::string transcript;
  int rc = 0;
  if (!slurp(opt.input, &transcript, &rc)) {
    return rc;
  }
  char* out = nullptr;
  const ed_status st = ed_recover_povm(transcript.c_str(), opt.tol, &out);
  return deliver(st, out, opt);
}

int cmd_check_covariance(const Options& opt) {
  std::string system;
  int rc = 0;
  if (!slurp(opt.input, &system, &rc)) {
    return rc;
  }
  char* report = nullptr;
  const ed_status st = ed_check_covariance(system.c_str(), opt.probes,
                                           opt.seed, opt.tol, &report);
  return deliver(st, report, opt);
}

int cmd_build_covariant(const Options& opt) {
  std::string system;
  std::string seed_effect;
  int rc = 0;
  if (!slurp(opt.input, &system, &rc) ||
      !slurp(opt.seed_effect, &seed_effect, &rc)) {
    return rc;
  }
  char* out = nullptr;
  const ed_status st = ed_build_covariant(system.c_str(),
                                          seed_effect.c_str(), opt.tol, &out);
  return deliver(st, out, opt);
}

int cmd_model_induce(const Options& opt) {
  std::string model;
  int rc = 0;
  if (!slurp(opt.input, &model, &rc)) {
    return rc;
  }
  char* out = nullptr;
  const ed_status st = ed_model_induce(model.c_str(), opt.tol, &out);
  return deliver(st, out, opt);
}

int cmd_model_check(const Options& opt) {
  std::string model;
  int rc = 0;
  if (!slurp(opt.input, &model, &rc)) {
    return rc;
  }
  std::string target;
  const char* target_ptr = nullptr;
  if (!opt.target.empty()) {
    if (!slurp(opt.target, &target, &rc)) {
      return rc;
    }
    target_ptr = target.c_str();
  }
  char* report = nullptr;
  const ed_status st = ed_model_check(model.c_str(), target_ptr, opt.trials,
                                      opt.seed, opt.tol, &report);
  return deliver(st, report, opt);
}

int cmd_dual_quantize(const Options& opt) {
  std::string model;
  std::string effect;
  int rc = 0;
  if (!slurp(opt.input, &model, &rc) || !slurp(opt.effect, &effect, &rc)) {
    return rc;
  }
  char* out = nullptr;
  const ed_status st =
      ed_dual_quantize(model.c_str(), effect.c_str(), opt.tol, &out);
  return deliver(st, out, opt);
}

int cmd_metric(const Options& opt) {
  std::string a;
  std::string b;
  int rc = 0;
  if (!slurp(opt.metric_a, &a, &rc) || !slurp(opt.metric_b, &b, &rc)) {
    return rc;
  }
  char* report = nullptr;
  const ed_status st = ed_metric(a.c_str(), b.c_str(), opt.tol, &report);
  return deliver(st, report, opt);
}

int cmd_suite(const Options& opt) {
  char* report = nullptr;
  const ed_status st =
      ed_run_suite(opt.seed, opt.trials, opt.tol,
                   opt.fixtures.empty() ? nullptr : opt.fixtures.c_str(),
                   &report);
  return deliver(st, report, opt);
}

void add_output_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--output,-o", opt.output, "Write the JSON result here");
  sub->add_option("--tol", opt.tol, "Tolerance (default 1e-9)");
  sub->add_flag("--pretty", opt.pretty, "Indent the JSON output");
}

void add_seeded_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--seed", opt.seed, "PRNG seed");
  sub->add_option("--trials", opt.trials, "Random trials")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("EFFECTDUAL_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      return emit_error("validation",
                        "EFFECTDUAL_TOL is not a positive number", 2);
    }
    opt.tol = v;
  }

  CLI::App app{"Duality between quantization of events and measurement of "
               "states, on finite-dimensional data"};
  app.require_subcommand(1);
  int rc = 0;

  CLI::App* vd = app.add_subcommand(
      "verify-duality", "Check the quantize/measure duality square");
  vd->add_option("--input,-i", opt.input, "POVM file");
  vd->add_flag("--random", opt.random, "Draw a random POVM instead");
  vd->add_option("--dim", opt.dim, "Hilbert dimension for --random");
  vd->add_option("--outcomes", opt.outcomes, "Outcome count for --random");
  add_seeded_flags(vd, opt);
  add_output_flags(vd, opt);
  vd->callback([&]() { rc = cmd_verify_duality(opt); });

  CLI::App* qz = app.add_subcommand(
      "quantize", "Apply f |-> sum_x f(x) E_x to a classical effect");
  qz->add_option("--input,-i", opt.input, "POVM file")->required();
  qz->add_option("--effect", opt.effect, "Classical effect file")->required();
  add_output_flags(qz, opt);
  qz->callback([&]() { rc = cmd_quantize(opt); });

  CLI::App* ms = app.add_subcommand(
      "measure", "Outcome distribution of a state under a POVM");
  ms->add_option("--input,-i", opt.input, "POVM file")->required();
  ms->add_option("--state", opt.state, "Density matrix file")->required();
  add_output_flags(ms, opt);
  ms->callback([&]() { rc = cmd_measure(opt); });

  CLI::App* rp = app.add_subcommand(
      "recover-povm", "Reconstruct a POVM from a black-box transcript");
  rp->add_option("--input,-i", opt.input, "Transcript file")->required();
  add_output_flags(rp, opt);
  rp->callback([&]() { rc = cmd_recover_povm(opt); });

  CLI::App* cc = app.add_subcommand(
      "check-covariance",
      "Run all three covariance checks on a system bundle");
  cc->add_option("--input,-i", opt.input, "System file")->required();
  cc->add_option("--probes", opt.probes, "Random probes per element")
      ->check(CLI::PositiveNumber);
  cc->add_option("--seed", opt.seed, "PRNG seed");
  add_output_flags(cc, opt);
  cc->callback([&]() { rc = cmd_check_covariance(opt); });

  CLI::App* bc = app.add_subcommand(
      "build-covariant", "Group-average a seed effect into a covariant POVM");
  bc->add_option("--input,-i", opt.input, "System file")->required();
  bc->add_option("--seed-effect", opt.seed_effect, "Seed effect file")
      ->required();
  add_output_flags(bc, opt);
  bc->callback([&]() { rc = cmd_build_covariant(opt); });

  CLI::App* mi = app.add_subcommand(
      "model-induce", "POVM realised by a measurement scheme");
  mi->add_option("--input,-i", opt.input, "Model file")->required();
  add_output_flags(mi, opt);
  mi->callback([&]() { rc = cmd_model_induce(opt); });

  CLI::App* mc = app.add_subcommand(
      "model-check", "Whether a scheme reproduces a target POVM");
  mc->add_option("--input,-i", opt.input, "Model file")->required();
  mc->add_option("--target", opt.target,
                 "Target POVM file (default: the induced POVM)");
  add_seeded_flags(mc, opt);
  add_output_flags(mc, opt);
  mc->callback([&]() { rc = cmd_model_check(opt); });

  CLI::App* dq = app.add_subcommand(
      "dual-quantize",
      "Quantize a pointer effect through the channel adjoint");
  dq->add_option("--input,-i", opt.input, "Model file")->required();
  dq->add_option("--effect", opt.effect, "Classical effect file")->required();
  add_output_flags(dq, opt);
  dq->callback([&]() { rc = cmd_dual_quantize(opt); });

  CLI::App* mt = app.add_subcommand(
      "metric", "Effect-module metric next to the matching norm distance");
  mt->add_option("first", opt.metric_a, "First effect file")->required();
  mt->add_option("second", opt.metric_b, "Second effect file")->required();
  add_output_flags(mt, opt);
  mt->callback([&]() { rc = cmd_metric(opt); });

  CLI::App* su = app.add_subcommand(
      "suite", "Seeded property suite over every module invariant");
  su->add_option("--fixtures", opt.fixtures,
                 "Load fixture files from this directory");
  add_seeded_flags(su, opt);
  add_output_flags(su, opt);
  su->callback([&]() { rc = cmd_suite(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
