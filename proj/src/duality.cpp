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

#include "effectdual/duality.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "effectdual/error.hpp"
#include "effectdual/random.hpp"

namespace effectdual {

namespace {

constexpr int kSingularRetries = 8;

}  // namespace

Povm::Povm(OutcomeSpace space, std::vector<ComplexMatrix> effects,
           Tolerance tol)
    : space_(std::move(space)), dim_(0), effects_(std::move(effects)) {
  if (effects_.size() != space_.size()) {
    throw Error(ErrorCode::dimension_mismatch,
                "effect count does not match the outcome space");
  }
  dim_ = effects_.front().rows();
  ComplexMatrix sum = ComplexMatrix::zero(dim_, dim_);
  for (std::size_t x = 0; x < effects_.size(); ++x) {
    const ComplexMatrix& e = effects_[x];
    if (e.rows() != dim_ || e.cols() != dim_) {
      throw Error(ErrorCode::dimension_mismatch,
                  "effects have inconsistent dimensions");
    }
    try {
      QuantumEffect probe(e, tol);
    } catch (const Error& err) {
      std::ostringstream msg;
      msg << "element at \"" << space_.label(x)
          << "\" is not an effect: " << err.what();
      throw Error(ErrorCode::validation, msg.str());
    }
    sum += e;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(dim_)) > tol.eps) {
    throw Error(ErrorCode::validation, "effects do not sum to identity");
  }
}

Povm Povm::basis(std::size_t dim) {
  std::vector<ComplexMatrix> effects;
  effects.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    ComplexMatrix p = ComplexMatrix::zero(dim, dim);
    p(i, i) = Complex(1.0, 0.0);
    effects.push_back(std::move(p));
  }
  return Povm(OutcomeSpace::indexed(dim), std::move(effects));
}

Povm Povm::trine() {
  std::vector<ComplexMatrix> effects;
  const double third = 2.0 / 3.0;
  for (int k = 0; k < 3; ++k) {
    const double angle = 2.0 * M_PI * k / 3.0;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    ComplexMatrix e(2, 2);
    e(0, 0) = Complex(third * c * c, 0.0);
    e(0, 1) = Complex(third * c * s, 0.0);
    e(1, 0) = Complex(third * c * s, 0.0);
    e(1, 1) = Complex(third * s * s, 0.0);
    effects.push_back(std::move(e));
  }
  return Povm(OutcomeSpace::indexed(3), std::move(effects));
}

QuantumEffect Povm::effect_at(std::size_t i, Tolerance tol) const {
  if (i >= effects_.size()) {
    throw Error(ErrorCode::range_violation, "outcome index out of range");
  }
  return QuantumEffect(effects_[i], tol);
}

QuantizationMap::QuantizationMap(const Povm& povm, Tolerance tol)
    : domain_(povm.space()), dim_(povm.dim()) {
  const Povm copy = povm;
  fn_ = [copy, tol](const ClassicalEffect& f) {
    return quantize(copy, f, tol);
  };
}

QuantizationMap::QuantizationMap(
    OutcomeSpace domain, std::size_t dim,
    std::function<QuantumEffect(const ClassicalEffect&)> fn)
    : domain_(std::move(domain)), dim_(dim), fn_(std::move(fn)) {
  if (!fn_) {
    throw Error(ErrorCode::callback, "quantization callback is empty");
  }
}

QuantumEffect QuantizationMap::operator()(const ClassicalEffect& f) const {
  if (!(f.space() == domain_)) {
    throw Error(ErrorCode::space_mismatch,
                "effect lives on a different outcome space");
  }
  QuantumEffect out = fn_(f);
  if (out.dim() != dim_) {
    throw Error(ErrorCode::callback,
                "quantization callback returned a wrong dimension");
  }
  return out;
}

MeasurementMap::MeasurementMap(const Povm& povm, Tolerance tol)
    : codomain_(povm.space()), dim_(povm.dim()) {
  const Povm copy = povm;
  fn_ = [copy, tol](const DensityMatrix& rho) {
    return measure(copy, rho, tol);
  };
}

MeasurementMap::MeasurementMap(
    OutcomeSpace codomain, std::size_t dim,
    std::function<ProbabilityVector(const DensityMatrix&)> fn)
    : codomain_(std::move(codomain)), dim_(dim), fn_(std::move(fn)) {
  if (!fn_) {
    throw Error(ErrorCode::callback, "measurement callback is empty");
  }
}

ProbabilityVector MeasurementMap::operator()(const DensityMatrix& rho) const {
  if (rho.dim() != dim_) {
    throw Error(ErrorCode::dimension_mismatch,
                "state dimension does not match the map");
  }
  ProbabilityVector out = fn_(rho);
  if (!(out.space() == codomain_)) {
    throw Error(ErrorCode::callback,
                "measurement callback returned a wrong outcome space");
  }
  return out;
}

QuantumEffect quantize(const Povm& povm, const ClassicalEffect& f,
                       Tolerance tol) {
  if (!(f.space() == povm.space())) {
    throw Error(ErrorCode::space_mismatch,
                "effect lives on a different outcome space than the measure");
  }
  ComplexMatrix acc = ComplexMatrix::zero(povm.dim(), povm.dim());
  for (std::size_t x = 0; x < povm.outcomes(); ++x) {
    acc += f.value(x) * povm.effect(x);
  }
  return QuantumEffect(std::move(acc), tol);
}

ProbabilityVector measure(const Povm& povm, const DensityMatrix& rho,
                          Tolerance tol) {
  if (rho.dim() != povm.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "state dimension does not match the measure");
  }
  std::vector<double> weights(povm.outcomes());
  for (std::size_t x = 0; x < povm.outcomes(); ++x) {
    weights[x] = trace(rho.matrix() * povm.effect(x)).real();
  }
  return ProbabilityVector(povm.space(), std::move(weights), tol);
}

Povm povm_from_quantization(const QuantizationMap& q, int probes, Rng& rng,
                            Tolerance tol) {
  const OutcomeSpace& space = q.domain();
  const HomReport hom = is_effect_module_hom(
      [&q](const ClassicalEffect& f) { return q(f); }, space, q.dim(), probes,
      tol, rng);
  if (!hom.pass) {
    std::ostringstream msg;
    msg << "map is not an effect-module homomorphism: " << hom.first_violation
        << " (deviation " << hom.max_deviation << ")";
    throw Error(ErrorCode::not_homomorphism, msg.str());
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    effects.push_back(q(ClassicalEffect::indicator(space, x)).matrix());
  }
  try {
    return Povm(space, std::move(effects), tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::not_povm,
                std::string("indicator images do not form a measure: ") +
                    e.what());
  }
}

Povm povm_from_measurement(const MeasurementMap& m, int probes, Rng& rng,
                           Tolerance tol) {
  const OutcomeSpace& space = m.codomain();
  const std::size_t dim = m.dim();
  for (int k = 0; k < probes; ++k) {
    const DensityMatrix s = random_density(dim, rng);
    const DensityMatrix t = random_density(dim, rng);
    const double r = rng.uniform();
    const ProbabilityVector mixed = m(convex_combine(r, s, t));
    const ProbabilityVector ms = m(s);
    const ProbabilityVector mt = m(t);
    for (std::size_t x = 0; x < space.size(); ++x) {
      const double split = r * ms.weight(x) + (1.0 - r) * mt.weight(x);
      if (std::abs(mixed.weight(x) - split) > tol.eps) {
        std::ostringstream msg;
        msg << "map is not affine at outcome \"" << space.label(x)
            << "\" (probe " << k << ", deviation "
            << std::abs(mixed.weight(x) - split) << ")";
        throw Error(ErrorCode::not_affine, msg.str());
      }
    }
  }
  const auto frame = tomography_frame(dim);
  std::vector<std::vector<double>> frame_stats;
  frame_stats.reserve(frame.size());
  for (const auto& element : frame) {
    frame_stats.push_back(m(DensityMatrix(element, tol)).weights());
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    std::vector<double> values(frame.size());
    for (std::size_t k = 0; k < frame.size(); ++k) {
      values[k] = frame_stats[k][x];
    }
    effects.push_back(hermitian_from_frame_values(dim, values));
  }
  try {
    return Povm(space, std::move(effects), tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::not_povm,
                std::string("tomographic inversion does not yield a measure: ") +
                    e.what());
  }
}

DualityReport verify_duality_square(const QuantizationMap& q,
                                    const MeasurementMap& m, int trials,
                                    std::uint64_t seed, Tolerance tol) {
  if (!(q.domain() == m.codomain()) || q.dim() != m.dim()) {
    throw Error(ErrorCode::space_mismatch,
                "quantization and measurement sides do not share a shape");
  }
  DualityReport report;
  report.trials = trials;
  report.seed = seed;
  Rng rng(seed);
  for (int k = 0; k < trials; ++k) {
    const ClassicalEffect f = random_classical_effect(q.domain(), rng);
    const DensityMatrix rho = random_density(q.dim(), rng);
    const double via_quantization =
        trace(rho.matrix() * q(f).matrix()).real();
    const double via_measurement = integrate(f.values(), m(rho));
    const double dev = std::abs(via_quantization - via_measurement);
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
    }
  }
  report.pass = report.max_deviation <= tol.eps;
  return report;
}

DualityReport verify_duality_square(const Povm& povm, int trials,
                                    std::uint64_t seed, Tolerance tol) {
  return verify_duality_square(QuantizationMap(povm, tol),
                               MeasurementMap(povm, tol), trials, seed, tol);
}

Povm random_povm(const OutcomeSpace& space, std::size_t dim, Rng& rng,
                 Tolerance tol) {
  if (dim == 0) {
    throw Error(ErrorCode::dimension_mismatch, "dimension must be positive");
  }
  for (int attempt = 0; attempt < kSingularRetries; ++attempt) {
    std::vector<ComplexMatrix> squares;
    squares.reserve(space.size());
    ComplexMatrix total = ComplexMatrix::zero(dim, dim);
    for (std::size_t x = 0; x < space.size(); ++x) {
      const ComplexMatrix b = random_matrix(dim, dim, rng);
      ComplexMatrix g = adjoint(b) * b;
      total += g;
      squares.push_back(std::move(g));
    }
    ComplexMatrix whitener;
    try {
      whitener = inverse_sqrt_psd(total, tol, 1e-8);
    } catch (const Error&) {
      continue;
    }
    std::vector<ComplexMatrix> effects;
    effects.reserve(squares.size());
    for (const auto& g : squares) {
      ComplexMatrix e = whitener * g * whitener;
      ComplexMatrix sym = e + adjoint(e);
      sym *= 0.5;
      effects.push_back(std::move(sym));
    }
    return Povm(space, std::move(effects), tol);
  }
  throw Error(ErrorCode::singular_average,
              "random draw kept a singular normaliser after retries");
}

Povm random_povm(std::size_t dim, std::size_t n_outcomes, std::uint64_t seed,
                 Tolerance tol) {
  Rng rng(seed);
  return random_povm(OutcomeSpace::indexed(n_outcomes), dim, rng, tol);
}

}  // namespace effectdual
