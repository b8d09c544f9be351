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

#ifndef EFFECTDUAL_EFFECTS_HPP
#define EFFECTDUAL_EFFECTS_HPP

#include <functional>
#include <string>
#include <vector>

#include "effectdual/matrix.hpp"
#include "effectdual/rng.hpp"

namespace effectdual {

// Finite outcome space: an ordered list of distinct labels. A finite discrete
// space is compact Hausdorff and every function on it is continuous, so the
// classical constructions below are genuine instances, not approximations.
class OutcomeSpace {
 public:
  explicit OutcomeSpace(std::vector<std::string> labels);

  // Labels "<prefix>0" .. "<prefix>{n-1}".
  static OutcomeSpace indexed(std::size_t n, const std::string& prefix = "x");

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const;

  friend bool operator==(const OutcomeSpace& a, const OutcomeSpace& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

// [0,1]-valued function on a finite outcome space.
class ClassicalEffect {
 public:
  ClassicalEffect(OutcomeSpace space, std::vector<double> values,
                  Tolerance tol = {});

  static ClassicalEffect zero(const OutcomeSpace& space);
  static ClassicalEffect unit(const OutcomeSpace& space);
  static ClassicalEffect indicator(const OutcomeSpace& space,
                                   std::size_t index);

  const OutcomeSpace& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  double value(std::size_t i) const { return values_[i]; }
  double value(const std::string& label) const {
    return values_[space_.index_of(label)];
  }
  const std::vector<double>& values() const { return values_; }

 private:
  OutcomeSpace space_;
  std::vector<double> values_;
};

// Effect operator: E Hermitian with 0 <= E <= I, both sides within tol.
class QuantumEffect {
 public:
  explicit QuantumEffect(ComplexMatrix op, Tolerance tol = {});

  static QuantumEffect zero(std::size_t dim);
  static QuantumEffect unit(std::size_t dim);
  // Projector |i><i| in the computational basis.
  static QuantumEffect basis_projector(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return op_; }

 private:
  std::size_t dim_;
  ComplexMatrix op_;
};

// Partial sum of the effect algebra; throws NotOrthogonal when the sum
// exceeds the unit beyond tol. Sums within (1, 1+eps] count as orthogonal.
ClassicalEffect ovee(const ClassicalEffect& a, const ClassicalEffect& b,
                     Tolerance tol = {});
QuantumEffect ovee(const QuantumEffect& a, const QuantumEffect& b,
                   Tolerance tol = {});

bool orthogonal(const ClassicalEffect& a, const ClassicalEffect& b,
                Tolerance tol = {});
bool orthogonal(const QuantumEffect& a, const QuantumEffect& b,
                Tolerance tol = {});

// Orthosupplement: unit minus the effect.
ClassicalEffect neg(const ClassicalEffect& a);
QuantumEffect neg(const QuantumEffect& a);

// [0,1]-scalar action.
ClassicalEffect scalar(double r, const ClassicalEffect& a);
QuantumEffect scalar(double r, const QuantumEffect& a);

// The order-theoretic metric, computed in closed form: the one-sided infimum
// inf{r : x/2 <= y/2 (+) (r/2) 1} equals max(0, lambda_max(x - y)) and the
// metric is the max over both directions. The agreement with sup-norm /
// operator-norm distance is asserted by the test suite rather than assumed.
double effect_metric(const ClassicalEffect& a, const ClassicalEffect& b);
double effect_metric(const QuantumEffect& a, const QuantumEffect& b,
                     Tolerance tol = {});

struct HomReport {
  bool pass = true;
  double max_deviation = 0.0;
  std::string first_violation;  // empty when pass
};

// Probes whether h preserves the unit, the scalar action, and the partial sum
// on `samples` random instances. Report carries the first violating probe.
HomReport is_effect_module_hom(
    const std::function<ClassicalEffect(const ClassicalEffect&)>& h,
    const OutcomeSpace& domain, int samples, Tolerance tol, Rng& rng);
HomReport is_effect_module_hom(
    const std::function<QuantumEffect(const ClassicalEffect&)>& h,
    const OutcomeSpace& domain, std::size_t target_dim, int samples,
    Tolerance tol, Rng& rng);
HomReport is_effect_module_hom(
    const std::function<QuantumEffect(const QuantumEffect&)>& h,
    std::size_t dim, int samples, Tolerance tol, Rng& rng);

}  // namespace effectdual

#endif
