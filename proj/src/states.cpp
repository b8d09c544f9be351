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

#include "effectdual/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "effectdual/error.hpp"
#include "effectdual/random.hpp"

namespace effectdual {

namespace {

void require_unit_interval(double r, const char* what) {
  if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
    std::ostringstream msg;
    msg << what << " must lie in [0,1], got " << r;
    throw Error(ErrorCode::range_violation, msg.str());
  }
}

}  // namespace

ProbabilityVector::ProbabilityVector(OutcomeSpace space,
                                     std::vector<double> weights,
                                     Tolerance tol)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.size()) {
    throw Error(ErrorCode::dimension_mismatch,
                "weight count does not match the outcome space");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    double& w = weights_[i];
    if (!std::isfinite(w) || w < -tol.eps) {
      std::ostringstream msg;
      msg << "negative weight at \"" << space_.label(i) << "\": " << w;
      throw Error(ErrorCode::range_violation, msg.str());
    }
    w = std::max(0.0, w);
    total += w;
  }
  if (std::abs(total - 1.0) > tol.eps) {
    std::ostringstream msg;
    msg << "weights sum to " << total << ", expected 1";
    throw Error(ErrorCode::validation, msg.str());
  }
  // In-tolerance weights are stored as given so serialisation is stable.
}

ProbabilityVector ProbabilityVector::point_mass(const OutcomeSpace& space,
                                                std::size_t index) {
  if (index >= space.size()) {
    throw Error(ErrorCode::range_violation, "point mass index out of range");
  }
  std::vector<double> w(space.size(), 0.0);
  w[index] = 1.0;
  return ProbabilityVector(space, std::move(w));
}

ProbabilityVector ProbabilityVector::uniform(const OutcomeSpace& space) {
  std::vector<double> w(space.size(), 1.0 / static_cast<double>(space.size()));
  return ProbabilityVector(space, std::move(w));
}

DensityMatrix::DensityMatrix(ComplexMatrix op, Tolerance tol)
    : dim_(op.rows()), op_(std::move(op)) {
  if (op_.rows() != op_.cols() || op_.rows() == 0) {
    throw Error(ErrorCode::dimension_mismatch,
                "state operator must be square and non-trivial");
  }
  if (!op_.all_finite()) {
    throw Error(ErrorCode::validation, "state operator has non-finite entries");
  }
  const auto eigs = hermitian_eigenvalues(op_, tol);
  if (eigs.front() < -tol.eps) {
    std::ostringstream msg;
    msg << "state operator not positive semidefinite: bottom eigenvalue "
        << eigs.front();
    throw Error(ErrorCode::range_violation, msg.str());
  }
  const double tr = trace(op_).real();
  if (std::abs(tr - 1.0) > tol.eps) {
    std::ostringstream msg;
    msg << "state trace is " << tr << ", expected 1";
    throw Error(ErrorCode::validation, msg.str());
  }
  // In-tolerance operators are stored as given so serialisation is stable.
}

DensityMatrix DensityMatrix::pure(const std::vector<Complex>& amplitudes) {
  if (amplitudes.empty()) {
    throw Error(ErrorCode::dimension_mismatch, "empty amplitude vector");
  }
  double norm2 = 0.0;
  for (const Complex& a : amplitudes) {
    norm2 += std::norm(a);
  }
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw Error(ErrorCode::validation, "amplitude vector is not normalisable");
  }
  const std::size_t d = amplitudes.size();
  ComplexMatrix op(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      op(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm2;
    }
  }
  return DensityMatrix(std::move(op));
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t i) {
  if (i >= dim) {
    throw Error(ErrorCode::range_violation, "basis index out of range");
  }
  ComplexMatrix op = ComplexMatrix::zero(dim, dim);
  op(i, i) = Complex(1.0, 0.0);
  return DensityMatrix(std::move(op));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix op = ComplexMatrix::zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    op(i, i) = Complex(1.0 / static_cast<double>(dim), 0.0);
  }
  return DensityMatrix(std::move(op));
}

ProbabilityVector convex_combine(double r, const ProbabilityVector& a,
                                 const ProbabilityVector& b) {
  require_unit_interval(r, "mixing weight");
  if (!(a.space() == b.space())) {
    throw Error(ErrorCode::space_mismatch,
                "mixing distributions on different outcome spaces");
  }
  std::vector<double> w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    w[i] = r * a.weight(i) + (1.0 - r) * b.weight(i);
  }
  return ProbabilityVector(a.space(), std::move(w));
}

DensityMatrix convex_combine(double r, const DensityMatrix& a,
                             const DensityMatrix& b) {
  require_unit_interval(r, "mixing weight");
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "mixing states of different dimension");
  }
  ComplexMatrix op = r * a.matrix() + (1.0 - r) * b.matrix();
  return DensityMatrix(std::move(op));
}

double expectation(const ProbabilityVector& mu, const ClassicalEffect& f) {
  if (!(mu.space() == f.space())) {
    throw Error(ErrorCode::space_mismatch,
                "state and effect live on different outcome spaces");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    total += mu.weight(i) * f.value(i);
  }
  return std::min(1.0, std::max(0.0, total));
}

double expectation(const DensityMatrix& rho, const QuantumEffect& e) {
  if (rho.dim() != e.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "state and effect dimensions differ");
  }
  const double value = trace(rho.matrix() * e.matrix()).real();
  return std::min(1.0, std::max(0.0, value));
}

double integrate(const std::vector<double>& f, const ProbabilityVector& mu) {
  if (f.size() != mu.size()) {
    throw Error(ErrorCode::dimension_mismatch,
                "observable length does not match the outcome space");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    total += f[i] * mu.weight(i);
  }
  return total;
}

ClassicalEffect riesz_extract(
    const std::function<double(const ProbabilityVector&)>& phi,
    const OutcomeSpace& space, const AffinityProbeConfig& cfg, Rng& rng,
    Tolerance tol) {
  for (int k = 0; k < cfg.probes; ++k) {
    const ProbabilityVector s = random_probability_vector(space, rng);
    const ProbabilityVector t = random_probability_vector(space, rng);
    const double r = rng.uniform();
    const double mixed = phi(convex_combine(r, s, t));
    const double split = r * phi(s) + (1.0 - r) * phi(t);
    if (std::abs(mixed - split) > cfg.threshold) {
      std::ostringstream msg;
      msg << "affinity violated on convex probe " << k << ": |"
          << mixed << " - " << split << "| > " << cfg.threshold;
      throw Error(ErrorCode::not_affine, msg.str());
    }
  }
  std::vector<double> values(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    const double v = phi(ProbabilityVector::point_mass(space, x));
    if (!std::isfinite(v) || v < -tol.eps || v > 1.0 + tol.eps) {
      std::ostringstream msg;
      msg << "recovered value at \"" << space.label(x)
          << "\" escapes [0,1]: " << v;
      throw Error(ErrorCode::range_violation, msg.str());
    }
    values[x] = std::min(1.0, std::max(0.0, v));
  }
  const ClassicalEffect f(space, values, tol);
  for (int k = 0; k < cfg.probes; ++k) {
    const ProbabilityVector mu = random_probability_vector(space, rng);
    const double direct = phi(mu);
    const double represented = integrate(values, mu);
    if (std::abs(direct - represented) > cfg.threshold) {
      std::ostringstream msg;
      msg << "functional is not the barycentre of its vertex values "
          << "(consistency probe " << k << ")";
      throw Error(ErrorCode::not_affine, msg.str());
    }
  }
  return f;
}

std::vector<ComplexMatrix> tomography_frame(std::size_t dim) {
  if (dim == 0) {
    throw Error(ErrorCode::dimension_mismatch, "frame dimension must be positive");
  }
  std::vector<ComplexMatrix> frame;
  frame.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    ComplexMatrix p = ComplexMatrix::zero(dim, dim);
    p(i, i) = Complex(1.0, 0.0);
    frame.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      ComplexMatrix plus = ComplexMatrix::zero(dim, dim);
      plus(i, i) = plus(j, j) = Complex(0.5, 0.0);
      plus(i, j) = plus(j, i) = Complex(0.5, 0.0);
      frame.push_back(std::move(plus));
      // Projector onto (|i> + i|j>)/sqrt(2).
      ComplexMatrix imag = ComplexMatrix::zero(dim, dim);
      imag(i, i) = imag(j, j) = Complex(0.5, 0.0);
      imag(i, j) = Complex(0.0, -0.5);
      imag(j, i) = Complex(0.0, 0.5);
      frame.push_back(std::move(imag));
    }
  }
  return frame;
}

ComplexMatrix hermitian_from_frame_values(std::size_t dim,
                                          const std::vector<double>& values) {
  if (values.size() != dim * dim) {
    throw Error(ErrorCode::dimension_mismatch,
                "frame value count must be dim squared");
  }
  ComplexMatrix m = ComplexMatrix::zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = Complex(values[i], 0.0);
  }
  std::size_t k = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double diag_half = 0.5 * (values[i] + values[j]);
      const double re = values[k] - diag_half;
      const double im = diag_half - values[k + 1];
      k += 2;
      m(i, j) = Complex(re, im);
      m(j, i) = Complex(re, -im);
    }
  }
  return m;
}

DensityMatrix busch_extract(
    const std::function<double(const QuantumEffect&)>& beta, std::size_t dim,
    const AffinityProbeConfig& cfg, Rng& rng, Tolerance tol) {
  const double at_zero = beta(QuantumEffect::zero(dim));
  const double at_unit = beta(QuantumEffect::unit(dim));
  if (std::abs(at_zero) > cfg.threshold ||
      std::abs(at_unit - 1.0) > cfg.threshold) {
    std::ostringstream msg;
    msg << "no state induces this functional: beta(0) = " << at_zero
        << ", beta(I) = " << at_unit;
    throw Error(ErrorCode::not_state, msg.str());
  }
  for (int k = 0; k < cfg.probes; ++k) {
    const QuantumEffect a = random_effect(dim, rng);
    const QuantumEffect b = random_effect(dim, rng);
    const double r = rng.uniform();
    ComplexMatrix mix = r * a.matrix() + (1.0 - r) * b.matrix();
    const double mixed = beta(QuantumEffect(std::move(mix), tol));
    const double split = r * beta(a) + (1.0 - r) * beta(b);
    if (std::abs(mixed - split) > cfg.threshold) {
      std::ostringstream msg;
      msg << "affinity violated on convex probe " << k << ": |" << mixed
          << " - " << split << "| > " << cfg.threshold;
      throw Error(ErrorCode::not_affine, msg.str());
    }
  }
  const auto frame = tomography_frame(dim);
  std::vector<double> values;
  values.reserve(frame.size());
  for (const auto& f : frame) {
    values.push_back(beta(QuantumEffect(f, tol)));
  }
  ComplexMatrix m = hermitian_from_frame_values(dim, values);
  DensityMatrix rho = [&] {
    try {
      return DensityMatrix(std::move(m), tol);
    } catch (const Error& e) {
      throw Error(ErrorCode::not_state,
                  std::string("reconstruction is not a density matrix: ") +
                      e.what());
    }
  }();
  for (int k = 0; k < cfg.probes; ++k) {
    const QuantumEffect e = random_effect(dim, rng);
    const double direct = beta(e);
    const double represented = trace(rho.matrix() * e.matrix()).real();
    if (std::abs(direct - represented) > cfg.threshold) {
      std::ostringstream msg;
      msg << "functional disagrees with its frame reconstruction "
          << "(consistency probe " << k << ")";
      throw Error(ErrorCode::not_affine, msg.str());
    }
  }
  return rho;
}

std::size_t separating_outcome(const ProbabilityVector& a,
                               const ProbabilityVector& b, Tolerance tol) {
  if (!(a.space() == b.space())) {
    throw Error(ErrorCode::space_mismatch,
                "distributions live on different outcome spaces");
  }
  std::size_t best = 0;
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a.weight(i) - b.weight(i));
    if (d > gap) {
      gap = d;
      best = i;
    }
  }
  if (gap <= tol.eps) {
    throw Error(ErrorCode::validation,
                "distributions coincide; nothing separates them");
  }
  return best;
}

QuantumEffect separating_effect(const DensityMatrix& a, const DensityMatrix& b,
                                Tolerance tol) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "states of different dimension");
  }
  const ComplexMatrix diff = a.matrix() - b.matrix();
  const EigenSystem sys = hermitian_eigensystem(diff, tol);
  std::size_t best = 0;
  for (std::size_t i = 1; i < sys.values.size(); ++i) {
    if (std::abs(sys.values[i]) > std::abs(sys.values[best])) {
      best = i;
    }
  }
  if (std::abs(sys.values[best]) <= tol.eps) {
    throw Error(ErrorCode::validation,
                "states coincide; nothing separates them");
  }
  const std::size_t d = a.dim();
  ComplexMatrix proj(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      proj(i, j) = sys.vectors(i, best) * std::conj(sys.vectors(j, best));
    }
  }
  return QuantumEffect(std::move(proj), tol);
}

}  // namespace effectdual
