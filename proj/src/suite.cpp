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

#include "effectdual/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <utility>

#include "effectdual/covariance.hpp"
#include "effectdual/duality.hpp"
#include "effectdual/effects.hpp"
#include "effectdual/error.hpp"
#include "effectdual/fixtures.hpp"
#include "effectdual/json_io.hpp"
#include "effectdual/measurement_model.hpp"
#include "effectdual/random.hpp"
#include "effectdual/states.hpp"
#include "effectdual/transcript.hpp"

namespace effectdual {
namespace {

// Sentinel deviation for checks that died instead of deviating.
constexpr double kBlown = 1.0e308;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed keyed by check name, so adding or reordering checks leaves every
// other check's stream untouched.
std::uint64_t check_seed(std::uint64_t base, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h = (h ^ c) * 1099511628211ULL;
  }
  return mix64(base + 0x9e3779b97f4a7c15ULL + h);
}

// Everything the fixture-backed checks consume, loaded once up front so a
// corrupted file fails the run instead of silently failing one check.
struct Sources {
  Povm trine;
  io::CovarianceSystem c4, c6, s3;
  io::CovarianceSystem c4_broken, c6_broken, s3_broken;
  MeasurementModel von_neumann3;
  MeasurementModel trivial2;
  Transcript tq, tm;
  Transcript tq_scaled, tm_nonpsd;
};

Sources builtin_sources(std::uint64_t seed) {
  Rng rq(check_seed(seed, "source/transcript_q"));
  Rng rm(check_seed(seed, "source/transcript_m"));
  Povm trine = Povm::trine();
  io::CovarianceSystem c4 = fixtures::cyclic_system(4);
  io::CovarianceSystem c6 = fixtures::cyclic_system(6);
  io::CovarianceSystem s3 = fixtures::symmetric3_system();
  return Sources{trine,
                 c4,
                 c6,
                 s3,
                 fixtures::broken_variant(c4),
                 fixtures::broken_variant(c6),
                 fixtures::broken_variant(s3),
                 MeasurementModel::von_neumann(3),
                 fixtures::trivial_model(2),
                 record_quantization_transcript(trine, 3, rq),
                 record_measurement_transcript(trine, 3, rm),
                 fixtures::scaled_quantization_transcript(),
                 fixtures::nonpsd_measurement_transcript()};
}

Sources file_sources(const std::string& dir, Tolerance tol) {
  const std::filesystem::path root(dir);
  auto file = [&](const char* name) {
    return io::load_json_file((root / name).string());
  };
  return Sources{io::povm_from_json(file("trine.json"), tol),
                 io::system_from_json(file("c4_system.json"), tol),
                 io::system_from_json(file("c6_system.json"), tol),
                 io::system_from_json(file("s3_system.json"), tol),
                 io::system_from_json(file("c4_system_broken.json"), tol),
                 io::system_from_json(file("c6_system_broken.json"), tol),
                 io::system_from_json(file("s3_system_broken.json"), tol),
                 io::model_from_json(file("von_neumann3.json"), tol),
                 io::model_from_json(file("trivial_model2.json"), tol),
                 transcript_from_json(file("transcript_q_trine.json"), tol),
                 transcript_from_json(file("transcript_m_trine.json"), tol),
                 transcript_from_json(file("transcript_q_scaled.json"), tol),
                 transcript_from_json(file("transcript_m_nonpsd.json"), tol)};
}

class Runner {
 public:
  explicit Runner(const SuiteConfig& cfg) : cfg_(cfg) {}

  void add(const std::string& name, double tolerance, int trials,
           const std::function<double(Rng&, int)>& body) {
    PropertyResult r;
    r.name = name;
    r.trials = trials;
    r.tolerance = tolerance;
    Rng rng(check_seed(cfg_.seed, name));
    double dev;
    try {
      dev = body(rng, trials);
    } catch (const Error&) {
      dev = kBlown;
    }
    if (!std::isfinite(dev)) {
      dev = kBlown;
    }
    r.max_deviation = dev;
    r.pass = dev <= tolerance;
    results_.push_back(std::move(r));
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  SuiteConfig cfg_;
  std::vector<PropertyResult> results_;
};

OutcomeSpace pick_space(Rng& rng) {
  return OutcomeSpace::indexed(2 + rng.index(4));
}

std::size_t pick_dim(Rng& rng) { return 2 + rng.index(3); }

double sup_diff(const ClassicalEffect& a, const ClassicalEffect& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.value(i) - b.value(i)));
  }
  return m;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

double triple_check(const io::CovarianceSystem& sys, int probes, Rng& rng,
                    Tolerance tol) {
  const Povm& povm = *sys.povm;
  CovarianceReport imp = check_imprimitivity(sys.group, sys.action, sys.rep,
                                             povm, tol);
  CovarianceReport qc = check_q_covariance(sys.group, sys.action, sys.rep,
                                           povm, probes, rng, tol);
  CovarianceReport mc = check_covariant_measurement(sys.group, sys.action,
                                                    sys.rep, povm, probes,
                                                    rng, tol);
  if (imp.pass != qc.pass || qc.pass != mc.pass) {
    return kBlown;
  }
  double dev = std::max({imp.max_deviation, qc.max_deviation,
                         mc.max_deviation});
  return imp.pass ? dev : kBlown;
}

// Returns the number of missed detections; 0 means every break was caught
// by all three checks, loudly and unanimously.
double broken_misses(const io::CovarianceSystem& sys, int probes, Rng& rng,
                     Tolerance tol) {
  const Povm& povm = *sys.povm;
  CovarianceReport imp = check_imprimitivity(sys.group, sys.action, sys.rep,
                                             povm, tol);
  CovarianceReport qc = check_q_covariance(sys.group, sys.action, sys.rep,
                                           povm, probes, rng, tol);
  CovarianceReport mc = check_covariant_measurement(sys.group, sys.action,
                                                    sys.rep, povm, probes,
                                                    rng, tol);
  double misses = 0.0;
  for (const CovarianceReport* r : {&imp, &qc, &mc}) {
    if (r->pass || r->max_deviation < 1e-2 || r->witness.empty()) {
      misses += 1.0;
    }
  }
  return misses;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const SuiteConfig& cfg) {
  const Sources src = cfg.fixtures_dir.empty()
                          ? builtin_sources(cfg.seed)
                          : file_sources(cfg.fixtures_dir, cfg.tol);
  Runner run(cfg);
  const int base = std::max(1, cfg.trials);
  auto scaled = [&](int div) { return std::max(1, base / div); };

  run.add("classical_partial_sum_laws", 1e-12, base,
          [](Rng& rng, int trials) {
            double dev = 0.0;
            for (int t = 0; t < trials; ++t) {
              const OutcomeSpace space = pick_space(rng);
              auto [a, b] = random_orthogonal_pair(space, rng);
              dev = std::max(dev, sup_diff(ovee(a, b), ovee(b, a)));
              dev = std::max(dev, sup_diff(neg(neg(a)), a));
              dev = std::max(dev, sup_diff(ovee(a, neg(a)),
                                           ClassicalEffect::unit(space)));
              dev = std::max(dev,
                             sup_diff(ovee(a, ClassicalEffect::zero(space)),
                                      a));
              const ClassicalEffect u = random_classical_effect(space, rng);
              const double t1 = rng.uniform();
              const double t2 = rng.uniform();
              const double t3 = rng.uniform();
              const double norm = (t1 + t2 + t3) * 1.0000001;
              const ClassicalEffect p = scalar(t1 / norm, u);
              const ClassicalEffect q = scalar(t2 / norm, u);
              const ClassicalEffect r = scalar(t3 / norm, u);
              dev = std::max(dev, sup_diff(ovee(ovee(p, q), r),
                                           ovee(p, ovee(q, r))));
            }
            return dev;
          });

  run.add("quantum_partial_sum_laws", 1e-12, scaled(2),
          [](Rng& rng, int trials) {
            double dev = 0.0;
            for (int t = 0; t < trials; ++t) {
              const std::size_t d = pick_dim(rng);
              auto [a, b] = random_orthogonal_pair(d, rng);
              dev = std::max(dev, max_abs_diff(ovee(a, b).matrix(),
                                               ovee(b, a).matrix()));
              dev = std::max(dev,
                             max_abs_diff(neg(neg(a)).matrix(), a.matrix()));
              dev = std::max(dev, max_abs_diff(ovee(a, neg(a)).matrix(),
                                               ComplexMatrix::identity(d)));
              dev = std::max(dev,
                             max_abs_diff(ovee(a, QuantumEffect::zero(d))
                                              .matrix(),
                                          a.matrix()));
              const QuantumEffect u = random_effect(d, rng);
              const double t1 = rng.uniform();
              const double t2 = rng.uniform();
              const double t3 = rng.uniform();
              const double norm = (t1 + t2 + t3) * 1.0000001;
              const QuantumEffect p = scalar(t1 / norm, u);
              const QuantumEffect q = scalar(t2 / norm, u);
              const QuantumEffect r = scalar(t3 / norm, u);
              dev = std::max(dev, max_abs_diff(ovee(ovee(p, q), r).matrix(),
                                               ovee(p, ovee(q, r)).matrix()));
            }
            return dev;
          });

  run.add("classical_module_action", 1e-12, base, [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const OutcomeSpace space = pick_space(rng);
      const ClassicalEffect a = random_classical_effect(space, rng);
      const double r = rng.uniform();
      const double s = rng.uniform() * (1.0 - r);
      dev = std::max(dev, sup_diff(scalar(1.0, a), a));
      dev = std::max(dev,
                     sup_diff(scalar(r, scalar(s, a)), scalar(r * s, a)));
      dev = std::max(dev, sup_diff(scalar(r + s, a),
                                   ovee(scalar(r, a), scalar(s, a))));
      auto [e, f] = random_orthogonal_pair(space, rng);
      dev = std::max(dev, sup_diff(scalar(r, ovee(e, f)),
                                   ovee(scalar(r, e), scalar(r, f))));
    }
    return dev;
  });

  run.add("quantum_module_action", 1e-12, scaled(2), [](Rng& rng,
                                                        int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t d = pick_dim(rng);
      const QuantumEffect a = random_effect(d, rng);
      const double r = rng.uniform();
      const double s = rng.uniform() * (1.0 - r);
      dev = std::max(dev, max_abs_diff(scalar(1.0, a).matrix(), a.matrix()));
      dev = std::max(dev, max_abs_diff(scalar(r, scalar(s, a)).matrix(),
                                       scalar(r * s, a).matrix()));
      dev = std::max(dev,
                     max_abs_diff(scalar(r + s, a).matrix(),
                                  ovee(scalar(r, a), scalar(s, a)).matrix()));
      auto [e, f] = random_orthogonal_pair(d, rng);
      dev = std::max(dev,
                     max_abs_diff(scalar(r, ovee(e, f)).matrix(),
                                  ovee(scalar(r, e), scalar(r, f)).matrix()));
    }
    return dev;
  });

  run.add("classical_metric_sup_norm", 1e-12, base, [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const OutcomeSpace space = pick_space(rng);
      const ClassicalEffect a = random_classical_effect(space, rng);
      const ClassicalEffect b = random_classical_effect(space, rng);
      dev = std::max(dev, std::abs(effect_metric(a, b) - sup_diff(a, b)));
    }
    return dev;
  });

  run.add("quantum_metric_operator_norm", 1e-10, scaled(2),
          [](Rng& rng, int trials) {
            double dev = 0.0;
            for (int t = 0; t < trials; ++t) {
              const std::size_t d = pick_dim(rng);
              const QuantumEffect a = random_effect(d, rng);
              const QuantumEffect b = random_effect(d, rng);
              dev = std::max(
                  dev, std::abs(effect_metric(a, b) -
                                operator_norm_distance(a.matrix(),
                                                       b.matrix())));
            }
            return dev;
          });

  run.add("classical_convex_axioms", 1e-12, base, [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const OutcomeSpace space = pick_space(rng);
      const ProbabilityVector a = random_probability_vector(space, rng);
      const ProbabilityVector b = random_probability_vector(space, rng);
      const ProbabilityVector c = random_probability_vector(space, rng);
      const double r = rng.uniform();
      const double s = rng.uniform();
      dev = std::max(dev, sup_diff(convex_combine(1.0, a, b).weights(),
                                   a.weights()));
      dev = std::max(dev, sup_diff(convex_combine(r, a, a).weights(),
                                   a.weights()));
      const double u = r + (1.0 - r) * s;
      if (u > 1e-6) {
        const ProbabilityVector lhs =
            convex_combine(r, a, convex_combine(s, b, c));
        const ProbabilityVector rhs =
            convex_combine(u, convex_combine(r / u, a, b), c);
        dev = std::max(dev, sup_diff(lhs.weights(), rhs.weights()));
      }
    }
    return dev;
  });

  run.add("quantum_convex_axioms", 1e-12, scaled(2), [](Rng& rng,
                                                        int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t d = pick_dim(rng);
      const DensityMatrix a = random_density(d, rng);
      const DensityMatrix b = random_density(d, rng);
      const DensityMatrix c = random_density(d, rng);
      const double r = rng.uniform();
      const double s = rng.uniform();
      dev = std::max(dev, max_abs_diff(convex_combine(1.0, a, b).matrix(),
                                       a.matrix()));
      dev = std::max(dev, max_abs_diff(convex_combine(r, a, a).matrix(),
                                       a.matrix()));
      const double u = r + (1.0 - r) * s;
      if (u > 1e-6) {
        const DensityMatrix lhs =
            convex_combine(r, a, convex_combine(s, b, c));
        const DensityMatrix rhs =
            convex_combine(u, convex_combine(r / u, a, b), c);
        dev = std::max(dev, max_abs_diff(lhs.matrix(), rhs.matrix()));
      }
    }
    return dev;
  });

  run.add("expectation_affine", 1e-12, base, [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const OutcomeSpace space = pick_space(rng);
      const ProbabilityVector mu = random_probability_vector(space, rng);
      const ProbabilityVector nu = random_probability_vector(space, rng);
      const ClassicalEffect f = random_classical_effect(space, rng);
      const double r = rng.uniform();
      dev = std::max(dev, std::abs(expectation(convex_combine(r, mu, nu), f) -
                                   (r * expectation(mu, f) +
                                    (1.0 - r) * expectation(nu, f))));
      dev = std::max(dev, std::abs(integrate(f.values(), mu) -
                                   expectation(mu, f)));
      const std::size_t d = pick_dim(rng);
      const DensityMatrix rho = random_density(d, rng);
      auto [e1, e2] = random_orthogonal_pair(d, rng);
      dev = std::max(dev, std::abs(expectation(rho, ovee(e1, e2)) -
                                   (expectation(rho, e1) +
                                    expectation(rho, e2))));
    }
    return dev;
  });

  run.add("separating_witness", 1e-10, scaled(2), [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const OutcomeSpace space = pick_space(rng);
      const ProbabilityVector mu = random_probability_vector(space, rng);
      const ProbabilityVector nu = random_probability_vector(space, rng);
      double sup = 0.0;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        sup = std::max(sup, std::abs(mu.weight(i) - nu.weight(i)));
      }
      if (sup > 1e-6) {
        const std::size_t x = separating_outcome(mu, nu);
        dev = std::max(dev,
                       sup - std::abs(mu.weight(x) - nu.weight(x)));
      }
      const std::size_t d = pick_dim(rng);
      const DensityMatrix rho = random_density(d, rng);
      const DensityMatrix sig = random_density(d, rng);
      const double dist = operator_norm_distance(rho.matrix(), sig.matrix());
      if (dist > 1e-6) {
        const QuantumEffect e = separating_effect(rho, sig);
        const double gap =
            std::abs(expectation(rho, e) - expectation(sig, e));
        dev = std::max(dev, std::abs(dist - gap));
      }
    }
    return dev;
  });

  run.add("riesz_roundtrip", 1e-9, scaled(10), [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const OutcomeSpace space = pick_space(rng);
      const ClassicalEffect hidden = random_classical_effect(space, rng);
      auto phi = [&hidden](const ProbabilityVector& mu) {
        return expectation(mu, hidden);
      };
      const ClassicalEffect got =
          riesz_extract(phi, space, AffinityProbeConfig{}, rng);
      dev = std::max(dev, sup_diff(got, hidden));
    }
    return dev;
  });

  run.add("busch_roundtrip", 1e-9, scaled(25), [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t d = pick_dim(rng);
      const DensityMatrix hidden = random_density(d, rng);
      auto beta = [&hidden](const QuantumEffect& e) {
        return expectation(hidden, e);
      };
      const DensityMatrix got =
          busch_extract(beta, d, AffinityProbeConfig{}, rng);
      dev = std::max(dev, max_abs_diff(got.matrix(), hidden.matrix()));
    }
    return dev;
  });

  run.add("nonaffine_detected", 0.0, 10, [](Rng& rng, int) {
    const OutcomeSpace space = OutcomeSpace::indexed(4);
    using Phi = std::function<double(const ProbabilityVector&)>;
    const std::vector<Phi> crooked_phi = {
        [](const ProbabilityVector& mu) {
          return *std::max_element(mu.weights().begin(), mu.weights().end());
        },
        [](const ProbabilityVector& mu) {
          double s = 0.0;
          for (double w : mu.weights()) s += w * w;
          return s;
        },
        [](const ProbabilityVector& mu) {
          return *std::min_element(mu.weights().begin(), mu.weights().end());
        },
        [](const ProbabilityVector& mu) {
          return std::exp(mu.weight(0)) / std::exp(1.0);
        },
        [](const ProbabilityVector& mu) {
          return mu.weight(0) * mu.weight(0);
        },
    };
    using Beta = std::function<double(const QuantumEffect&)>;
    const std::vector<Beta> crooked_beta = {
        [](const QuantumEffect& e) {
          const auto ev = hermitian_eigenvalues(e.matrix());
          return *std::max_element(ev.begin(), ev.end());
        },
        [](const QuantumEffect& e) {
          return trace(e.matrix() * e.matrix()).real() /
                 static_cast<double>(e.dim());
        },
        [](const QuantumEffect& e) {
          const double t = trace(e.matrix()).real() /
                           static_cast<double>(e.dim());
          return t * t;
        },
        [](const QuantumEffect& e) {
          const auto ev = hermitian_eigenvalues(e.matrix());
          return *std::min_element(ev.begin(), ev.end());
        },
        [](const QuantumEffect& e) {
          const auto ev = hermitian_eigenvalues(e.matrix());
          const double top = *std::max_element(ev.begin(), ev.end());
          return 0.5 * (trace(e.matrix()).real() /
                            static_cast<double>(e.dim()) +
                        top);
        },
    };
    double misses = 0.0;
    for (const Phi& phi : crooked_phi) {
      try {
        riesz_extract(phi, space, AffinityProbeConfig{}, rng);
        misses += 1.0;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::not_affine) misses += 1.0;
      }
    }
    for (const Beta& beta : crooked_beta) {
      try {
        busch_extract(beta, 3, AffinityProbeConfig{}, rng);
        misses += 1.0;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::not_affine) misses += 1.0;
      }
    }
    return misses;
  });

  run.add("duality_square_random", 1e-10, scaled(25),
          [](Rng& rng, int trials) {
            double dev = 0.0;
            for (int t = 0; t < trials; ++t) {
              const std::size_t d = pick_dim(rng);
              const Povm povm = random_povm(pick_space(rng), d, rng);
              const DualityReport rep =
                  verify_duality_square(povm, 25, rng.raw(),
                                        Tolerance{1e-10});
              if (!rep.pass) return kBlown;
              dev = std::max(dev, rep.max_deviation);
            }
            return dev;
          });

  run.add("quantize_is_module_hom", 1e-10, scaled(25),
          [](Rng& rng, int trials) {
            double dev = 0.0;
            for (int t = 0; t < trials; ++t) {
              const std::size_t d = pick_dim(rng);
              const OutcomeSpace space = pick_space(rng);
              const Povm povm = random_povm(space, d, rng);
              const QuantizationMap q(povm);
              const HomReport rep = is_effect_module_hom(
                  [&q](const ClassicalEffect& f) { return q(f); }, space, d,
                  20, Tolerance{1e-10}, rng);
              if (!rep.pass) return kBlown;
              dev = std::max(dev, rep.max_deviation);
            }
            return dev;
          });

  run.add("measure_is_affine", 1e-12, scaled(5), [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t d = pick_dim(rng);
      const Povm povm = random_povm(pick_space(rng), d, rng);
      const DensityMatrix rho = random_density(d, rng);
      const DensityMatrix sig = random_density(d, rng);
      const double r = rng.uniform();
      const ProbabilityVector lhs =
          measure(povm, convex_combine(r, rho, sig));
      const ProbabilityVector mr = measure(povm, rho);
      const ProbabilityVector ms = measure(povm, sig);
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        dev = std::max(dev,
                       std::abs(lhs.weight(i) - (r * mr.weight(i) +
                                                 (1.0 - r) * ms.weight(i))));
      }
    }
    return dev;
  });

  run.add("povm_recovery_quantization", 1e-10, scaled(50),
          [](Rng& rng, int trials) {
            double dev = 0.0;
            for (int t = 0; t < trials; ++t) {
              const std::size_t d = pick_dim(rng);
              const OutcomeSpace space = pick_space(rng);
              const Povm povm = random_povm(space, d, rng);
              const QuantizationMap canonical(povm);
              const QuantizationMap box(
                  space, d,
                  [canonical](const ClassicalEffect& f) {
                    return canonical(f);
                  });
              const Povm back = povm_from_quantization(box, 10, rng);
              for (std::size_t x = 0; x < povm.outcomes(); ++x) {
                dev = std::max(dev,
                               max_abs_diff(back.effect(x), povm.effect(x)));
              }
            }
            return dev;
          });

  run.add("povm_recovery_measurement", 1e-9, scaled(50),
          [](Rng& rng, int trials) {
            double dev = 0.0;
            for (int t = 0; t < trials; ++t) {
              const std::size_t d = pick_dim(rng);
              const OutcomeSpace space = pick_space(rng);
              const Povm povm = random_povm(space, d, rng);
              const MeasurementMap canonical(povm);
              const MeasurementMap box(
                  space, d,
                  [canonical](const DensityMatrix& rho) {
                    return canonical(rho);
                  });
              const Povm back = povm_from_measurement(box, 10, rng);
              for (std::size_t x = 0; x < povm.outcomes(); ++x) {
                dev = std::max(dev,
                               max_abs_diff(back.effect(x), povm.effect(x)));
              }
            }
            return dev;
          });

  run.add("random_povm_valid", 1e-10, scaled(10), [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t d = pick_dim(rng);
      const Povm povm = random_povm(pick_space(rng), d, rng);
      ComplexMatrix sum = ComplexMatrix::zero(d, d);
      for (std::size_t x = 0; x < povm.outcomes(); ++x) {
        const auto ev = hermitian_eigenvalues(povm.effect(x));
        dev = std::max(dev, std::max(0.0, -(*std::min_element(ev.begin(),
                                                              ev.end()))));
        sum += povm.effect(x);
      }
      dev = std::max(dev, max_abs_diff(sum, ComplexMatrix::identity(d)));
    }
    return dev;
  });

  run.add("translation_action_laws", 1e-12, 6, [](Rng&, int) {
    double dev = 0.0;
    for (std::size_t n = 2; n <= 7; ++n) {
      const FiniteGroup g = FiniteGroup::cyclic(n);
      const GroupAction act =
          GroupAction::cyclic_translation(g, OutcomeSpace::indexed(n));
      if (!act.transitive()) return kBlown;
      const OutcomeSpace& space = act.space();
      for (std::size_t e = 0; e < g.order(); ++e) {
        for (std::size_t x = 0; x < n; ++x) {
          const ClassicalEffect moved = left_translate(
              g, act, e, ClassicalEffect::indicator(space, x));
          const ClassicalEffect want =
              ClassicalEffect::indicator(space, act.apply(e, x));
          dev = std::max(dev, sup_diff(moved, want));
          const ProbabilityVector pushed = push_forward(
              g, act, e, ProbabilityVector::point_mass(space, x));
          const ProbabilityVector target =
              ProbabilityVector::point_mass(space, act.apply(e, x));
          dev = std::max(dev, sup_diff(pushed.weights(), target.weights()));
        }
      }
    }
    return dev;
  });

  run.add("covariance_triangle_c4", 1e-10, 1, [&src](Rng& rng, int) {
    return triple_check(src.c4, 6, rng, Tolerance{1e-10});
  });

  run.add("covariance_triangle_c6", 1e-10, 1, [&src](Rng& rng, int) {
    return triple_check(src.c6, 6, rng, Tolerance{1e-10});
  });

  run.add("covariance_triangle_s3", 1e-10, 1, [&src](Rng& rng, int) {
    return triple_check(src.s3, 6, rng, Tolerance{1e-10});
  });

  run.add("covariance_broken_detected", 0.0, 3, [&src](Rng& rng, int) {
    double misses = 0.0;
    misses += broken_misses(src.c4_broken, 6, rng, Tolerance{1e-10});
    misses += broken_misses(src.c6_broken, 6, rng, Tolerance{1e-10});
    misses += broken_misses(src.s3_broken, 6, rng, Tolerance{1e-10});
    return misses;
  });

  run.add("covariant_constructor", 1e-10, std::max(2, base / 25),
          [&src](Rng& rng, int trials) {
            double dev = 0.0;
            for (int t = 0; t < trials; ++t) {
              const io::CovarianceSystem& sys = (t % 2 == 0) ? src.c4
                                                             : src.s3;
              const QuantumEffect seed = random_effect(sys.rep.dim(), rng);
              try {
                const Povm built = build_covariant_povm(
                    sys.group, sys.action, sys.rep, seed.matrix());
                const CovarianceReport rep = check_imprimitivity(
                    sys.group, sys.action, sys.rep, built, Tolerance{1e-10});
                if (!rep.pass) return kBlown;
                dev = std::max(dev, rep.max_deviation);
              } catch (const Error& err) {
                if (err.code() != ErrorCode::singular_average) throw;
              }
            }
            return dev;
          });

  run.add("adjoint_pairing", 1e-10, base, [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t d = pick_dim(rng);
      const KrausChannel lambda =
          random_channel(d, 1 + static_cast<int>(rng.index(3)), rng);
      const DensityMatrix rho = random_density(d, rng);
      const ComplexMatrix b = random_hermitian(d, rng);
      const Complex lhs = trace(apply_channel(lambda, rho.matrix()) * b);
      const Complex rhs = trace(rho.matrix() * channel_adjoint(lambda, b));
      dev = std::max(dev, std::abs(lhs - rhs));
    }
    return dev;
  });

  run.add("channel_unital_adjoint", 1e-10, scaled(5), [](Rng& rng,
                                                         int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t d = pick_dim(rng);
      const KrausChannel lambda =
          random_channel(d, 1 + static_cast<int>(rng.index(3)), rng);
      dev = std::max(
          dev, max_abs_diff(channel_adjoint(lambda,
                                            ComplexMatrix::identity(d)),
                            ComplexMatrix::identity(d)));
    }
    return dev;
  });

  run.add("choi_psd", 1e-9, scaled(5), [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t d = pick_dim(rng);
      const KrausChannel lambda =
          random_channel(d, 1 + static_cast<int>(rng.index(3)), rng);
      const ComplexMatrix choi = choi_matrix(lambda);
      const auto ev = hermitian_eigenvalues(choi);
      dev = std::max(dev, std::max(0.0, -(*std::min_element(ev.begin(),
                                                            ev.end()))));
      dev = std::max(dev,
                     std::abs(trace(choi).real() - static_cast<double>(d)));
    }
    return dev;
  });

  run.add("central_identity", 1e-10, scaled(25), [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t sys_dim = 2 + rng.index(2);
      const std::size_t outcomes = 2 + rng.index(3);
      const MeasurementModel model =
          random_model(sys_dim, 2, outcomes, rng);
      const Povm induced = induced_povm(model);
      const DensityMatrix rho = random_density(sys_dim, rng);
      const ClassicalEffect f =
          random_classical_effect(model.space(), rng);
      const QuantumEffect lifted = dual_model_quantize(model, f);
      const double lhs = expectation(rho, lifted);
      const double rhs = integrate(f.values(), measure(induced, rho));
      dev = std::max(dev, std::abs(lhs - rhs));
    }
    return dev;
  });

  run.add("model_for_induced", 1e-10, scaled(50), [](Rng& rng, int trials) {
    double dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t sys_dim = 2 + rng.index(2);
      const MeasurementModel model =
          random_model(sys_dim, 2, 2 + rng.index(3), rng);
      const DualityReport rep = check_model_for(
          model, induced_povm(model), 20, rng.raw(), Tolerance{1e-10});
      if (!rep.pass) return kBlown;
      dev = std::max(dev, rep.max_deviation);
    }
    return dev;
  });

  run.add("von_neumann_induced_basis", 1e-12, 3, [&src](Rng&, int) {
    double dev = 0.0;
    for (std::size_t d = 2; d <= 4; ++d) {
      const MeasurementModel model = (d == 3)
                                         ? src.von_neumann3
                                         : MeasurementModel::von_neumann(d);
      const Povm induced = induced_povm(model);
      const Povm basis = Povm::basis(d);
      for (std::size_t x = 0; x < d; ++x) {
        dev = std::max(dev,
                       max_abs_diff(induced.effect(x), basis.effect(x)));
      }
    }
    return dev;
  });

  run.add("trivial_model_unit", 1e-12, 3, [&src](Rng&, int) {
    double dev = 0.0;
    for (std::size_t d = 2; d <= 4; ++d) {
      const MeasurementModel model =
          (d == 2) ? src.trivial2 : fixtures::trivial_model(d);
      const Povm induced = induced_povm(model);
      if (induced.outcomes() != 1) return kBlown;
      dev = std::max(dev, max_abs_diff(induced.effect(std::size_t{0}),
                                       ComplexMatrix::identity(d)));
    }
    return dev;
  });

  run.add("transcript_q_roundtrip", 1e-10, 1, [&src](Rng&, int) {
    double dev = 0.0;
    const Povm back = recover_povm(src.tq);
    for (std::size_t x = 0; x < src.trine.outcomes(); ++x) {
      dev = std::max(dev, max_abs_diff(back.effect(x), src.trine.effect(x)));
    }
    const Transcript reparsed = transcript_from_json(to_json(src.tq));
    const Povm again = recover_povm(reparsed);
    for (std::size_t x = 0; x < src.trine.outcomes(); ++x) {
      dev = std::max(dev, max_abs_diff(again.effect(x), back.effect(x)));
    }
    return dev;
  });

  run.add("transcript_m_roundtrip", 1e-9, 1, [&src](Rng&, int) {
    double dev = 0.0;
    const Povm back = recover_povm(src.tm);
    for (std::size_t x = 0; x < src.trine.outcomes(); ++x) {
      dev = std::max(dev, max_abs_diff(back.effect(x), src.trine.effect(x)));
    }
    const Transcript reparsed = transcript_from_json(to_json(src.tm));
    const Povm again = recover_povm(reparsed);
    for (std::size_t x = 0; x < src.trine.outcomes(); ++x) {
      dev = std::max(dev, max_abs_diff(again.effect(x), back.effect(x)));
    }
    return dev;
  });

  run.add("adversarial_transcripts", 0.0, 2, [&src](Rng&, int) {
    double misses = 0.0;
    try {
      recover_povm(src.tq_scaled);
      misses += 1.0;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::not_povm) misses += 1.0;
    }
    try {
      recover_povm(src.tm_nonpsd);
      misses += 1.0;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::not_povm) misses += 1.0;
    }
    return misses;
  });

  run.add("json_roundtrip_stable", 0.0, 8, [&src](Rng& rng, int) {
    double misses = 0.0;
    auto stable = [&misses](const nlohmann::json& a, const nlohmann::json& b) {
      if (io::dump(a, false) != io::dump(b, false)) misses += 1.0;
    };
    {
      const nlohmann::json j = io::to_json(src.trine);
      stable(j, io::to_json(io::povm_from_json(j)));
    }
    {
      const nlohmann::json j = io::to_json(src.s3);
      stable(j, io::to_json(io::system_from_json(j)));
    }
    {
      const nlohmann::json j = io::to_json(src.von_neumann3);
      stable(j, io::to_json(io::model_from_json(j)));
    }
    {
      const nlohmann::json j = io::to_json(random_effect(3, rng));
      stable(j, io::to_json(io::quantum_effect_from_json(j)));
    }
    {
      const nlohmann::json j =
          io::to_json(random_classical_effect(OutcomeSpace::indexed(3), rng));
      stable(j, io::to_json(io::classical_effect_from_json(j)));
    }
    {
      const nlohmann::json j = io::to_json(random_density(3, rng));
      stable(j, io::to_json(io::density_from_json(j)));
    }
    {
      const nlohmann::json j = io::to_json(
          random_probability_vector(OutcomeSpace::indexed(4), rng));
      stable(j, io::to_json(io::probability_vector_from_json(j)));
    }
    {
      const nlohmann::json j = to_json(src.tm);
      stable(j, to_json(transcript_from_json(j)));
    }
    return misses;
  });

  return run.take();
}

nlohmann::json suite_report(const std::vector<PropertyResult>& results,
                            const SuiteConfig& cfg) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const PropertyResult& r : results) {
    all = all && r.pass;
    checks.push_back({{"name", r.name},
                      {"trials", r.trials},
                      {"max_deviation", r.max_deviation},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}});
  }
  return nlohmann::json{{"algorithm", Rng::kAlgorithm},
                        {"seed", cfg.seed},
                        {"trials", cfg.trials},
                        {"tol", cfg.tol.eps},
                        {"results", checks},
                        {"pass", all}};
}

}  // namespace effectdual
