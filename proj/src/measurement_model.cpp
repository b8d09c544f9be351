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

#include "effectdual/measurement_model.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "effectdual/error.hpp"
#include "effectdual/random.hpp"

namespace effectdual {

KrausChannel::KrausChannel(std::size_t dim_in, std::size_t dim_out,
                           std::vector<ComplexMatrix> kraus, Tolerance tol)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
  if (dim_in_ == 0 || dim_out_ == 0) {
    throw Error(ErrorCode::dimension_mismatch,
                "channel dimensions must be positive");
  }
  if (kraus_.empty()) {
    throw Error(ErrorCode::validation, "channel needs at least one Kraus term");
  }
  ComplexMatrix completeness = ComplexMatrix::zero(dim_in_, dim_in_);
  for (const ComplexMatrix& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      std::ostringstream msg;
      msg << "Kraus term must be " << dim_out_ << "x" << dim_in_ << ", got "
          << k.rows() << "x" << k.cols();
      throw Error(ErrorCode::dimension_mismatch, msg.str());
    }
    if (!k.all_finite()) {
      throw Error(ErrorCode::validation, "Kraus term has non-finite entries");
    }
    completeness += adjoint(k) * k;
  }
  if (max_abs_diff(completeness, ComplexMatrix::identity(dim_in_)) > tol.eps) {
    throw Error(ErrorCode::validation,
                "Kraus terms are not trace preserving");
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  std::vector<ComplexMatrix> kraus;
  kraus.push_back(ComplexMatrix::identity(dim));
  return KrausChannel(dim, dim, std::move(kraus));
}

KrausChannel KrausChannel::unitary(const ComplexMatrix& u, Tolerance tol) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    throw Error(ErrorCode::dimension_mismatch,
                "unitary channel needs a square matrix");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.push_back(u);
  return KrausChannel(u.rows(), u.rows(), std::move(kraus), tol);
}

KrausChannel KrausChannel::depolarizing(std::size_t dim, double p,
                                        Tolerance tol) {
  if (dim == 0) {
    throw Error(ErrorCode::dimension_mismatch,
                "channel dimension must be positive");
  }
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw Error(ErrorCode::range_violation,
                "depolarizing weight must lie in [0,1]");
  }
  std::vector<ComplexMatrix> kraus;
  if (p < 1.0) {
    ComplexMatrix keep = ComplexMatrix::identity(dim);
    keep *= std::sqrt(1.0 - p);
    kraus.push_back(std::move(keep));
  }
  if (p > 0.0) {
    const double w = std::sqrt(p / static_cast<double>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        ComplexMatrix unit = ComplexMatrix::zero(dim, dim);
        unit(i, j) = Complex(w, 0.0);
        kraus.push_back(std::move(unit));
      }
    }
  }
  return KrausChannel(dim, dim, std::move(kraus), tol);
}

ComplexMatrix apply_channel(const KrausChannel& lambda,
                            const ComplexMatrix& rho) {
  if (rho.rows() != lambda.dim_in() || rho.cols() != lambda.dim_in()) {
    throw Error(ErrorCode::dimension_mismatch,
                "channel input dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::zero(lambda.dim_out(), lambda.dim_out());
  for (std::size_t k = 0; k < lambda.kraus_count(); ++k) {
    out += lambda.kraus(k) * rho * adjoint(lambda.kraus(k));
  }
  return out;
}

DensityMatrix apply_channel(const KrausChannel& lambda,
                            const DensityMatrix& rho, Tolerance tol) {
  ComplexMatrix out = apply_channel(lambda, rho.matrix());
  ComplexMatrix sym = out + adjoint(out);
  sym *= 0.5;
  return DensityMatrix(std::move(sym), tol);
}

ComplexMatrix channel_adjoint(const KrausChannel& lambda,
                              const ComplexMatrix& b) {
  if (b.rows() != lambda.dim_out() || b.cols() != lambda.dim_out()) {
    throw Error(ErrorCode::dimension_mismatch,
                "adjoint input dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::zero(lambda.dim_in(), lambda.dim_in());
  for (std::size_t k = 0; k < lambda.kraus_count(); ++k) {
    out += adjoint(lambda.kraus(k)) * b * lambda.kraus(k);
  }
  return out;
}

ComplexMatrix choi_matrix(const KrausChannel& lambda) {
  const std::size_t d = lambda.dim_in();
  ComplexMatrix choi = ComplexMatrix::zero(d * lambda.dim_out(),
                                           d * lambda.dim_out());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix unit = ComplexMatrix::zero(d, d);
      unit(i, j) = Complex(1.0, 0.0);
      choi += tensor(unit, apply_channel(lambda, unit));
    }
  }
  return choi;
}

MeasurementModel::MeasurementModel(std::size_t system_dim,
                                   DensityMatrix probe_state,
                                   KrausChannel channel, Povm pointer,
                                   Tolerance tol)
    : system_dim_(system_dim),
      probe_state_(std::move(probe_state)),
      channel_(std::move(channel)),
      pointer_(std::move(pointer)) {
  (void)tol;
  if (system_dim_ == 0) {
    throw Error(ErrorCode::dimension_mismatch,
                "system dimension must be positive");
  }
  if (pointer_.dim() != probe_state_.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "pointer measure must live on the probe space");
  }
  const std::size_t composite = system_dim_ * probe_state_.dim();
  if (channel_.dim_in() != composite || channel_.dim_out() != composite) {
    std::ostringstream msg;
    msg << "channel must act on the composite space of dimension "
        << composite << ", got " << channel_.dim_in() << " -> "
        << channel_.dim_out();
    throw Error(ErrorCode::dimension_mismatch, msg.str());
  }
}

MeasurementModel MeasurementModel::von_neumann(std::size_t dim) {
  if (dim == 0) {
    throw Error(ErrorCode::dimension_mismatch,
                "system dimension must be positive");
  }
  const std::size_t composite = dim * dim;
  // Controlled shift |i>|j> -> |i>|j + i mod d>, composite index i*d + j.
  ComplexMatrix u = ComplexMatrix::zero(composite, composite);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      u(i * dim + (i + j) % dim, i * dim + j) = Complex(1.0, 0.0);
    }
  }
  return MeasurementModel(dim, DensityMatrix::basis_state(dim, 0),
                          KrausChannel::unitary(u), Povm::basis(dim));
}

Povm induced_povm(const MeasurementModel& model, Tolerance tol) {
  const std::size_t ds = model.system_dim();
  const std::size_t dp = model.probe_dim();
  const ComplexMatrix eye_sys = ComplexMatrix::identity(ds);
  const ComplexMatrix weight =
      tensor(eye_sys, model.probe_state().matrix());
  std::vector<ComplexMatrix> effects;
  effects.reserve(model.pointer().outcomes());
  for (std::size_t x = 0; x < model.pointer().outcomes(); ++x) {
    const ComplexMatrix lifted = tensor(eye_sys, model.pointer().effect(x));
    const ComplexMatrix pulled = channel_adjoint(model.channel(), lifted);
    const ComplexMatrix weighted = weight * pulled;
    ComplexMatrix e =
        partial_trace(weighted, ds, dp, TensorFactor::second);
    ComplexMatrix sym = e + adjoint(e);
    sym *= 0.5;
    effects.push_back(std::move(sym));
  }
  try {
    return Povm(model.space(), std::move(effects), tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::not_povm,
                std::string("induced family is not a measure: ") + e.what());
  }
}

DualityReport check_model_for(const MeasurementModel& model,
                              const Povm& target, int trials,
                              std::uint64_t seed, Tolerance tol) {
  if (target.dim() != model.system_dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "target measure must live on the system space");
  }
  if (!(target.space() == model.space())) {
    throw Error(ErrorCode::space_mismatch,
                "target and pointer outcome spaces differ");
  }
  DualityReport report;
  report.trials = trials;
  report.seed = seed;
  Rng rng(seed);
  const std::size_t ds = model.system_dim();
  const ComplexMatrix eye_sys = ComplexMatrix::identity(ds);
  for (int k = 0; k < trials; ++k) {
    const DensityMatrix rho = random_density(ds, rng);
    const ComplexMatrix joint =
        tensor(rho.matrix(), model.probe_state().matrix());
    const ComplexMatrix evolved = apply_channel(model.channel(), joint);
    for (std::size_t x = 0; x < target.outcomes(); ++x) {
      const double via_model =
          trace(evolved * tensor(eye_sys, model.pointer().effect(x))).real();
      const double via_target =
          trace(rho.matrix() * target.effect(x)).real();
      const double dev = std::abs(via_model - via_target);
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
      }
    }
  }
  report.pass = report.max_deviation <= tol.eps;
  return report;
}

ComplexMatrix dual_model_observable(const MeasurementModel& model,
                                    const std::vector<double>& f) {
  if (f.size() != model.space().size()) {
    throw Error(ErrorCode::dimension_mismatch,
                "function length does not match the pointer outcome space");
  }
  const std::size_t ds = model.system_dim();
  const std::size_t dp = model.probe_dim();
  const ComplexMatrix eye_sys = ComplexMatrix::identity(ds);
  ComplexMatrix lifted =
      ComplexMatrix::zero(ds * dp, ds * dp);
  for (std::size_t x = 0; x < f.size(); ++x) {
    lifted += f[x] * tensor(eye_sys, model.pointer().effect(x));
  }
  const ComplexMatrix pulled = channel_adjoint(model.channel(), lifted);
  const ComplexMatrix weighted =
      tensor(eye_sys, model.probe_state().matrix()) * pulled;
  ComplexMatrix out = partial_trace(weighted, ds, dp, TensorFactor::second);
  ComplexMatrix sym = out + adjoint(out);
  sym *= 0.5;
  return sym;
}

QuantumEffect dual_model_quantize(const MeasurementModel& model,
                                  const ClassicalEffect& f, Tolerance tol) {
  if (!(f.space() == model.space())) {
    throw Error(ErrorCode::space_mismatch,
                "effect lives on a different space than the pointer");
  }
  return QuantumEffect(dual_model_observable(model, f.values()), tol);
}

KrausChannel random_channel(std::size_t dim, int kraus_terms, Rng& rng,
                            Tolerance tol) {
  if (kraus_terms <= 0) {
    throw Error(ErrorCode::validation, "need at least one Kraus term");
  }
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(kraus_terms));
  ComplexMatrix gram = ComplexMatrix::zero(dim, dim);
  for (int k = 0; k < kraus_terms; ++k) {
    ComplexMatrix g = random_matrix(dim, dim, rng);
    gram += adjoint(g) * g;
    blocks.push_back(std::move(g));
  }
  const ComplexMatrix whitener = inverse_sqrt_psd(gram, tol, 1e-10);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(blocks.size());
  for (const auto& g : blocks) {
    kraus.push_back(g * whitener);
  }
  return KrausChannel(dim, dim, std::move(kraus), tol);
}

MeasurementModel random_model(std::size_t system_dim, std::size_t probe_dim,
                              std::size_t outcomes, Rng& rng, Tolerance tol) {
  const std::size_t composite = system_dim * probe_dim;
  DensityMatrix probe = random_density(probe_dim, rng);
  KrausChannel channel = random_channel(composite, 3, rng, tol);
  Povm pointer =
      random_povm(OutcomeSpace::indexed(outcomes), probe_dim, rng, tol);
  return MeasurementModel(system_dim, std::move(probe), std::move(channel),
                          std::move(pointer), tol);
}

}  // namespace effectdual
