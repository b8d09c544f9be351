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

#include "effectdual/effects.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "effectdual/error.hpp"
#include "effectdual/random.hpp"

namespace effectdual {

namespace {

double clamp_unit(double v) { return std::min(1.0, std::max(0.0, v)); }

void require_same_space(const OutcomeSpace& a, const OutcomeSpace& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::space_mismatch,
                "classical operands live on different outcome spaces");
  }
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    std::ostringstream msg;
    msg << "operator dimensions differ: " << a << " vs " << b;
    throw Error(ErrorCode::dimension_mismatch, msg.str());
  }
}

}  // namespace

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorCode::validation, "outcome space must be non-empty");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::validation,
                  "duplicate outcome label: \"" + l + "\"");
    }
  }
}

OutcomeSpace OutcomeSpace::indexed(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i));
  }
  return OutcomeSpace(std::move(labels));
}

std::size_t OutcomeSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) {
      return i;
    }
  }
  throw Error(ErrorCode::validation, "unknown outcome label: \"" + label + "\"");
}

bool OutcomeSpace::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

ClassicalEffect::ClassicalEffect(OutcomeSpace space, std::vector<double> values,
                                 Tolerance tol)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    throw Error(ErrorCode::dimension_mismatch,
                "value count does not match the outcome space");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < -tol.eps || v > 1.0 + tol.eps) {
      std::ostringstream msg;
      msg << "effect value out of [0,1] at \"" << space_.label(i)
          << "\": " << v;
      throw Error(ErrorCode::range_violation, msg.str());
    }
    values_[i] = clamp_unit(v);
  }
}

ClassicalEffect ClassicalEffect::zero(const OutcomeSpace& space) {
  return ClassicalEffect(space, std::vector<double>(space.size(), 0.0));
}

ClassicalEffect ClassicalEffect::unit(const OutcomeSpace& space) {
  return ClassicalEffect(space, std::vector<double>(space.size(), 1.0));
}

ClassicalEffect ClassicalEffect::indicator(const OutcomeSpace& space,
                                           std::size_t index) {
  if (index >= space.size()) {
    throw Error(ErrorCode::range_violation, "indicator index out of range");
  }
  std::vector<double> v(space.size(), 0.0);
  v[index] = 1.0;
  return ClassicalEffect(space, std::move(v));
}

QuantumEffect::QuantumEffect(ComplexMatrix op, Tolerance tol)
    : dim_(op.rows()), op_(std::move(op)) {
  if (op_.rows() != op_.cols() || op_.rows() == 0) {
    throw Error(ErrorCode::dimension_mismatch,
                "effect operator must be square and non-trivial");
  }
  if (!op_.all_finite()) {
    throw Error(ErrorCode::validation, "effect operator has non-finite entries");
  }
  const auto eigs = hermitian_eigenvalues(op_, tol);
  if (eigs.front() < -tol.eps || eigs.back() > 1.0 + tol.eps) {
    std::ostringstream msg;
    msg << "operator spectrum escapes [0,1]: [" << eigs.front() << ", "
        << eigs.back() << "]";
    throw Error(ErrorCode::range_violation, msg.str());
  }
}

QuantumEffect QuantumEffect::zero(std::size_t dim) {
  return QuantumEffect(ComplexMatrix::zero(dim, dim));
}

QuantumEffect QuantumEffect::unit(std::size_t dim) {
  return QuantumEffect(ComplexMatrix::identity(dim));
}

QuantumEffect QuantumEffect::basis_projector(std::size_t dim, std::size_t i) {
  if (i >= dim) {
    throw Error(ErrorCode::range_violation, "projector index out of range");
  }
  ComplexMatrix p = ComplexMatrix::zero(dim, dim);
  p(i, i) = Complex(1.0, 0.0);
  return QuantumEffect(std::move(p));
}

ClassicalEffect ovee(const ClassicalEffect& a, const ClassicalEffect& b,
                     Tolerance tol) {
  require_same_space(a.space(), b.space());
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double s = a.value(i) + b.value(i);
    if (s > 1.0 + tol.eps) {
      std::ostringstream msg;
      msg << "partial sum undefined: value " << s << " at \""
          << a.space().label(i) << "\" exceeds 1";
      throw Error(ErrorCode::not_orthogonal, msg.str());
    }
    out[i] = clamp_unit(s);
  }
  return ClassicalEffect(a.space(), std::move(out), tol);
}

QuantumEffect ovee(const QuantumEffect& a, const QuantumEffect& b,
                   Tolerance tol) {
  require_same_dim(a.dim(), b.dim());
  ComplexMatrix sum = a.matrix() + b.matrix();
  const auto eigs = hermitian_eigenvalues(sum, tol);
  if (eigs.back() > 1.0 + tol.eps) {
    std::ostringstream msg;
    msg << "partial sum undefined: top eigenvalue " << eigs.back()
        << " exceeds 1";
    throw Error(ErrorCode::not_orthogonal, msg.str());
  }
  return QuantumEffect(std::move(sum), tol);
}

bool orthogonal(const ClassicalEffect& a, const ClassicalEffect& b,
                Tolerance tol) {
  require_same_space(a.space(), b.space());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.value(i) + b.value(i) > 1.0 + tol.eps) {
      return false;
    }
  }
  return true;
}

bool orthogonal(const QuantumEffect& a, const QuantumEffect& b,
                Tolerance tol) {
  require_same_dim(a.dim(), b.dim());
  const auto eigs = hermitian_eigenvalues(a.matrix() + b.matrix(), tol);
  return eigs.back() <= 1.0 + tol.eps;
}

ClassicalEffect neg(const ClassicalEffect& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = 1.0 - a.value(i);
  }
  return ClassicalEffect(a.space(), std::move(out));
}

QuantumEffect neg(const QuantumEffect& a) {
  return QuantumEffect(ComplexMatrix::identity(a.dim()) - a.matrix());
}

ClassicalEffect scalar(double r, const ClassicalEffect& a) {
  if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
    throw Error(ErrorCode::range_violation, "scalar must lie in [0,1]");
  }
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = clamp_unit(r * a.value(i));
  }
  return ClassicalEffect(a.space(), std::move(out));
}

QuantumEffect scalar(double r, const QuantumEffect& a) {
  if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
    throw Error(ErrorCode::range_violation, "scalar must lie in [0,1]");
  }
  return QuantumEffect(r * a.matrix());
}

double effect_metric(const ClassicalEffect& a, const ClassicalEffect& b) {
  require_same_space(a.space(), b.space());
  double up = 0.0;
  double down = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    up = std::max(up, a.value(i) - b.value(i));
    down = std::max(down, b.value(i) - a.value(i));
  }
  return std::max(up, down);
}

double effect_metric(const QuantumEffect& a, const QuantumEffect& b,
                     Tolerance tol) {
  require_same_dim(a.dim(), b.dim());
  const ComplexMatrix diff = a.matrix() - b.matrix();
  const auto eigs = hermitian_eigenvalues(diff, tol);
  const double up = std::max(0.0, eigs.back());
  const auto eigs_rev = hermitian_eigenvalues(b.matrix() - a.matrix(), tol);
  const double down = std::max(0.0, eigs_rev.back());
  return std::max(up, down);
}

namespace {

struct Probe {
  double deviation;
  std::string description;
};

HomReport assemble(const std::vector<Probe>& probes, Tolerance tol) {
  HomReport report;
  for (const auto& p : probes) {
    if (p.deviation > report.max_deviation) {
      report.max_deviation = p.deviation;
    }
    if (p.deviation > tol.eps && report.first_violation.empty()) {
      report.first_violation = p.description;
    }
  }
  report.pass = report.first_violation.empty();
  return report;
}

std::string probe_name(const char* law, int index) {
  std::ostringstream msg;
  msg << law << " law violated on probe " << index;
  return msg.str();
}

}  // namespace

HomReport is_effect_module_hom(
    const std::function<ClassicalEffect(const ClassicalEffect&)>& h,
    const OutcomeSpace& domain, int samples, Tolerance tol, Rng& rng) {
  std::vector<Probe> probes;
  const ClassicalEffect one = ClassicalEffect::unit(domain);
  const ClassicalEffect image_one = h(one);
  probes.push_back(
      {effect_metric(image_one, ClassicalEffect::unit(image_one.space())),
       "unit law violated"});
  for (int k = 0; k < samples; ++k) {
    const double r = rng.uniform();
    const ClassicalEffect f = random_classical_effect(domain, rng);
    probes.push_back(
        {effect_metric(h(scalar(r, f)), scalar(r, h(f))),
         probe_name("scalar action", k)});
    const auto [a, b] = random_orthogonal_pair(domain, rng);
    const ClassicalEffect ha = h(a);
    const ClassicalEffect hb = h(b);
    const ClassicalEffect hab = h(ovee(a, b, tol));
    double dev = 0.0;
    for (std::size_t i = 0; i < hab.size(); ++i) {
      dev = std::max(dev, std::abs(hab.value(i) - ha.value(i) - hb.value(i)));
    }
    probes.push_back({dev, probe_name("partial sum", k)});
  }
  return assemble(probes, tol);
}

HomReport is_effect_module_hom(
    const std::function<QuantumEffect(const ClassicalEffect&)>& h,
    const OutcomeSpace& domain, std::size_t target_dim, int samples,
    Tolerance tol, Rng& rng) {
  std::vector<Probe> probes;
  const QuantumEffect image_one = h(ClassicalEffect::unit(domain));
  require_same_dim(image_one.dim(), target_dim);
  probes.push_back({operator_norm_distance(
                        image_one.matrix(),
                        ComplexMatrix::identity(target_dim), tol),
                    "unit law violated"});
  for (int k = 0; k < samples; ++k) {
    const double r = rng.uniform();
    const ClassicalEffect f = random_classical_effect(domain, rng);
    probes.push_back({operator_norm_distance(h(scalar(r, f)).matrix(),
                                             r * h(f).matrix(), tol),
                      probe_name("scalar action", k)});
    const auto [a, b] = random_orthogonal_pair(domain, rng);
    probes.push_back(
        {operator_norm_distance(h(ovee(a, b, tol)).matrix(),
                                h(a).matrix() + h(b).matrix(), tol),
         probe_name("partial sum", k)});
  }
  return assemble(probes, tol);
}

HomReport is_effect_module_hom(
    const std::function<QuantumEffect(const QuantumEffect&)>& h,
    std::size_t dim, int samples, Tolerance tol, Rng& rng) {
  std::vector<Probe> probes;
  const QuantumEffect image_one = h(QuantumEffect::unit(dim));
  probes.push_back({operator_norm_distance(
                        image_one.matrix(),
                        ComplexMatrix::identity(image_one.dim()), tol),
                    "unit law violated"});
  for (int k = 0; k < samples; ++k) {
    const double r = rng.uniform();
    const QuantumEffect e = random_effect(dim, rng);
    probes.push_back({operator_norm_distance(h(scalar(r, e)).matrix(),
                                             r * h(e).matrix(), tol),
                      probe_name("scalar action", k)});
    const auto [a, b] = random_orthogonal_pair(dim, rng);
    probes.push_back(
        {operator_norm_distance(h(ovee(a, b, tol)).matrix(),
                                h(a).matrix() + h(b).matrix(), tol),
         probe_name("partial sum", k)});
  }
  return assemble(probes, tol);
}

}  // namespace effectdual
