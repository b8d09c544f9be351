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

#include "effectdual/covariance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "effectdual/error.hpp"
#include "effectdual/random.hpp"

namespace effectdual {

namespace {

std::vector<std::size_t> identity_permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = i;
  }
  return p;
}

void check_system_shape(const GroupAction& action,
                        const UnitaryRepresentation& rep, const Povm& povm) {
  if (!(povm.space() == action.space())) {
    throw Error(ErrorCode::space_mismatch,
                "measure and action disagree on the outcome space");
  }
  if (povm.dim() != rep.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "measure and representation disagree on the dimension");
  }
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& a) {
  return u * a * adjoint(u);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> elements,
                         std::vector<std::vector<std::size_t>> table,
                         std::size_t identity)
    : elements_(std::move(elements)),
      table_(std::move(table)),
      identity_(identity) {
  const std::size_t n = elements_.size();
  if (n == 0) {
    throw Error(ErrorCode::validation, "invalid group table: empty group");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : elements_) {
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::validation,
                  "invalid group table: duplicate element \"" + name + "\"");
    }
  }
  if (identity_ >= n) {
    throw Error(ErrorCode::validation,
                "invalid group table: identity index out of range");
  }
  if (table_.size() != n) {
    throw Error(ErrorCode::validation,
                "invalid group table: row count mismatch");
  }
  for (const auto& row : table_) {
    if (row.size() != n) {
      throw Error(ErrorCode::validation,
                  "invalid group table: column count mismatch");
    }
    for (std::size_t v : row) {
      if (v >= n) {
        throw Error(ErrorCode::validation,
                    "invalid group table: product index out of range");
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table_[identity_][g] != g || table_[g][identity_] != g) {
      throw Error(ErrorCode::validation,
                  "invalid group table: identity does not act trivially");
    }
  }
  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table_[g][h] == identity_ && table_[h][g] == identity_) {
        inverse_[g] = h;
        break;
      }
    }
    if (inverse_[g] == n) {
      throw Error(ErrorCode::validation,
                  "invalid group table: element \"" + elements_[g] +
                      "\" has no inverse");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw Error(ErrorCode::validation,
                      "invalid group table: associativity fails at (" +
                          elements_[a] + ", " + elements_[b] + ", " +
                          elements_[c] + ")");
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::validation, "cyclic group order must be positive");
  }
  std::vector<std::string> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back("g" + std::to_string(i));
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = (i + j) % n;
    }
  }
  return FiniteGroup(std::move(elements), std::move(table), 0);
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::validation, "dihedral order parameter must be >= 2");
  }
  // Index i < n is the rotation r^i; index n + k is the reflection s r^k.
  const std::size_t order = 2 * n;
  std::vector<std::string> elements;
  elements.reserve(order);
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back("r" + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back("s" + std::to_string(i));
  }
  auto rot = [n](std::size_t a) { return a % n; };
  std::vector<std::vector<std::size_t>> table(order,
                                              std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = rot(a + b);
      table[a][n + b] = n + rot(b + n - a);
      table[n + a][b] = n + rot(a + b);
      table[n + a][n + b] = rot(b + n - a);
    }
  }
  return FiniteGroup(std::move(elements), std::move(table), 0);
}

FiniteGroup FiniteGroup::symmetric_3() {
  // Permutations of {0,1,2}: identity, the two 3-cycles, and the three
  // transpositions s_k fixing k.
  const std::vector<std::array<std::size_t, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  const std::vector<std::string> names = {"e", "r1", "r2", "s0", "s1", "s2"};
  auto find = [&perms](const std::array<std::size_t, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (perms[i] == p) {
        return i;
      }
    }
    throw Error(ErrorCode::internal, "permutation composition escaped S3");
  };
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t h = 0; h < 6; ++h) {
      std::array<std::size_t, 3> composed{};
      for (std::size_t x = 0; x < 3; ++x) {
        composed[x] = perms[g][perms[h][x]];
      }
      table[g][h] = find(composed);
    }
  }
  return FiniteGroup(names, std::move(table), 0);
}

std::size_t FiniteGroup::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) {
      return i;
    }
  }
  throw Error(ErrorCode::validation, "unknown group element: \"" + name + "\"");
}

GroupAction::GroupAction(const FiniteGroup& group, OutcomeSpace space,
                         std::vector<std::vector<std::size_t>> act)
    : space_(std::move(space)), act_(std::move(act)) {
  const std::size_t n = group.order();
  const std::size_t points = space_.size();
  if (act_.size() != n) {
    throw Error(ErrorCode::validation,
                "action table must have one row per group element");
  }
  for (const auto& row : act_) {
    if (row.size() != points) {
      throw Error(ErrorCode::validation,
                  "action table must have one column per outcome");
    }
    for (std::size_t v : row) {
      if (v >= points) {
        throw Error(ErrorCode::validation,
                    "action table sends an outcome out of the space");
      }
    }
  }
  if (act_[group.identity()] != identity_permutation(points)) {
    throw Error(ErrorCode::validation,
                "group identity must act trivially on the space");
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = group.multiply(g, h);
      for (std::size_t x = 0; x < points; ++x) {
        if (act_[gh][x] != act_[g][act_[h][x]]) {
          throw Error(ErrorCode::validation,
                      "action table is not compatible with the group law");
        }
      }
    }
  }
}

GroupAction GroupAction::cyclic_translation(const FiniteGroup& cyclic_group,
                                            const OutcomeSpace& space) {
  const std::size_t n = cyclic_group.order();
  if (space.size() != n) {
    throw Error(ErrorCode::dimension_mismatch,
                "translation action needs as many outcomes as group elements");
  }
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < n; ++x) {
      act[g][x] = (g + x) % n;
    }
  }
  return GroupAction(cyclic_group, space, std::move(act));
}

bool GroupAction::transitive() const {
  std::unordered_set<std::size_t> orbit;
  for (const auto& row : act_) {
    orbit.insert(row[0]);
  }
  return orbit.size() == space_.size();
}

UnitaryRepresentation::UnitaryRepresentation(
    const FiniteGroup& group, std::vector<ComplexMatrix> matrices,
    Tolerance tol)
    : dim_(0), matrices_(std::move(matrices)) {
  if (matrices_.size() != group.order()) {
    throw Error(ErrorCode::validation,
                "representation must assign one matrix per group element");
  }
  dim_ = matrices_.front().rows();
  if (dim_ == 0) {
    throw Error(ErrorCode::dimension_mismatch,
                "representation dimension must be positive");
  }
  const ComplexMatrix eye = ComplexMatrix::identity(dim_);
  for (std::size_t g = 0; g < matrices_.size(); ++g) {
    const ComplexMatrix& u = matrices_[g];
    if (u.rows() != dim_ || u.cols() != dim_) {
      throw Error(ErrorCode::dimension_mismatch,
                  "representation matrices have inconsistent dimensions");
    }
    if (max_abs_diff(adjoint(u) * u, eye) > tol.eps) {
      throw Error(ErrorCode::validation,
                  "matrix for \"" + group.element(g) + "\" is not unitary");
    }
  }
  if (max_abs_diff(matrices_[group.identity()], eye) > tol.eps) {
    throw Error(ErrorCode::validation,
                "representation does not send the identity to I");
  }
  for (std::size_t g = 0; g < matrices_.size(); ++g) {
    for (std::size_t h = 0; h < matrices_.size(); ++h) {
      const std::size_t gh = group.multiply(g, h);
      if (max_abs_diff(matrices_[g] * matrices_[h], matrices_[gh]) > tol.eps) {
        throw Error(ErrorCode::validation,
                    "representation is not a homomorphism at (" +
                        group.element(g) + ", " + group.element(h) + ")");
      }
    }
  }
}

UnitaryRepresentation UnitaryRepresentation::cyclic_shift(
    const FiniteGroup& cyclic_group, std::size_t dim) {
  const std::size_t n = cyclic_group.order();
  if (dim == 0 || n % dim != 0) {
    throw Error(ErrorCode::validation,
                "shift representation needs the dimension to divide the order");
  }
  ComplexMatrix shift = ComplexMatrix::zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    shift((i + 1) % dim, i) = Complex(1.0, 0.0);
  }
  std::vector<ComplexMatrix> matrices;
  matrices.reserve(n);
  ComplexMatrix power = ComplexMatrix::identity(dim);
  for (std::size_t g = 0; g < n; ++g) {
    matrices.push_back(power);
    power = shift * power;
  }
  return UnitaryRepresentation(cyclic_group, std::move(matrices));
}

ClassicalEffect left_translate(const FiniteGroup& group,
                               const GroupAction& action, std::size_t g,
                               const ClassicalEffect& f) {
  if (g >= group.order()) {
    throw Error(ErrorCode::validation, "unknown group element index");
  }
  if (!(f.space() == action.space())) {
    throw Error(ErrorCode::space_mismatch,
                "effect lives on a different space than the action");
  }
  const std::size_t inv = group.inverse(g);
  std::vector<double> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    out[x] = f.value(action.apply(inv, x));
  }
  return ClassicalEffect(f.space(), std::move(out));
}

ProbabilityVector push_forward(const FiniteGroup& group,
                               const GroupAction& action, std::size_t g,
                               const ProbabilityVector& mu) {
  if (g >= group.order()) {
    throw Error(ErrorCode::validation, "unknown group element index");
  }
  if (!(mu.space() == action.space())) {
    throw Error(ErrorCode::space_mismatch,
                "distribution lives on a different space than the action");
  }
  const std::size_t inv = group.inverse(g);
  std::vector<double> out(mu.size());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    out[x] = mu.weight(action.apply(inv, x));
  }
  return ProbabilityVector(mu.space(), std::move(out));
}

CovarianceReport check_imprimitivity(const FiniteGroup& group,
                                     const GroupAction& action,
                                     const UnitaryRepresentation& rep,
                                     const Povm& povm, Tolerance tol) {
  check_system_shape(action, rep, povm);
  CovarianceReport report;
  for (std::size_t g = 0; g < group.order(); ++g) {
    for (std::size_t x = 0; x < povm.outcomes(); ++x) {
      const ComplexMatrix lhs = conjugate(rep.matrix(g), povm.effect(x));
      const ComplexMatrix& rhs = povm.effect(action.apply(g, x));
      const double dev = operator_norm_distance(lhs, rhs, tol);
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        std::ostringstream w;
        w << "g=" << group.element(g) << ", x=" << povm.space().label(x);
        report.witness = w.str();
      }
    }
  }
  report.pass = report.max_deviation <= tol.eps;
  return report;
}

CovarianceReport check_q_covariance(const FiniteGroup& group,
                                    const GroupAction& action,
                                    const UnitaryRepresentation& rep,
                                    const Povm& povm, int probes, Rng& rng,
                                    Tolerance tol) {
  check_system_shape(action, rep, povm);
  const OutcomeSpace& space = povm.space();
  std::vector<std::pair<ClassicalEffect, std::string>> functions;
  for (std::size_t x = 0; x < space.size(); ++x) {
    functions.emplace_back(ClassicalEffect::indicator(space, x),
                           "indicator of " + space.label(x));
  }
  for (int k = 0; k < probes; ++k) {
    functions.emplace_back(random_classical_effect(space, rng),
                           "random probe " + std::to_string(k));
  }
  CovarianceReport report;
  for (std::size_t g = 0; g < group.order(); ++g) {
    for (const auto& [f, name] : functions) {
      const ComplexMatrix lhs =
          conjugate(rep.matrix(g), quantize(povm, f, tol).matrix());
      const ComplexMatrix rhs =
          quantize(povm, left_translate(group, action, g, f), tol).matrix();
      const double dev = operator_norm_distance(lhs, rhs, tol);
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.witness = "g=" + group.element(g) + ", f=" + name;
      }
    }
  }
  report.pass = report.max_deviation <= tol.eps;
  return report;
}

CovarianceReport check_covariant_measurement(const FiniteGroup& group,
                                             const GroupAction& action,
                                             const UnitaryRepresentation& rep,
                                             const Povm& povm, int probes,
                                             Rng& rng, Tolerance tol) {
  check_system_shape(action, rep, povm);
  std::vector<std::pair<DensityMatrix, std::string>> states;
  const auto frame = tomography_frame(povm.dim());
  for (std::size_t k = 0; k < frame.size(); ++k) {
    states.emplace_back(DensityMatrix(frame[k], tol),
                        "frame state " + std::to_string(k));
  }
  for (int k = 0; k < probes; ++k) {
    states.emplace_back(random_density(povm.dim(), rng),
                        "random state " + std::to_string(k));
  }
  CovarianceReport report;
  for (std::size_t g = 0; g < group.order(); ++g) {
    const std::size_t inv = group.inverse(g);
    for (const auto& [rho, name] : states) {
      // Tr[rho E_{g.x}] against Tr[U(g)^{-1} rho U(g) E_x].
      const DensityMatrix back(conjugate(rep.matrix(inv), rho.matrix()), tol);
      const ProbabilityVector direct = measure(povm, rho, tol);
      const ProbabilityVector conjugated = measure(povm, back, tol);
      for (std::size_t x = 0; x < povm.outcomes(); ++x) {
        const double dev =
            std::abs(direct.weight(action.apply(g, x)) - conjugated.weight(x));
        if (dev > report.max_deviation) {
          report.max_deviation = dev;
          std::ostringstream w;
          w << "g=" << group.element(g) << ", x=" << povm.space().label(x)
            << ", rho=" << name;
          report.witness = w.str();
        }
      }
    }
  }
  report.pass = report.max_deviation <= tol.eps;
  return report;
}

Povm build_covariant_povm(const FiniteGroup& group, const GroupAction& action,
                          const UnitaryRepresentation& rep,
                          const ComplexMatrix& seed, Tolerance tol) {
  if (seed.rows() != rep.dim() || seed.cols() != rep.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "seed dimension does not match the representation");
  }
  const auto eigs = hermitian_eigenvalues(seed, tol);
  if (eigs.front() < -tol.eps) {
    throw Error(ErrorCode::validation,
                "seed must be positive semidefinite");
  }
  if (eigs.back() <= tol.eps) {
    throw Error(ErrorCode::validation, "seed must be non-zero");
  }
  if (!action.transitive()) {
    throw Error(ErrorCode::not_transitive,
                "group averaging needs a transitive action");
  }
  const OutcomeSpace& space = action.space();
  const std::size_t d = rep.dim();
  const std::size_t base = 0;
  std::vector<ComplexMatrix> translates(space.size(),
                                        ComplexMatrix::zero(d, d));
  ComplexMatrix total = ComplexMatrix::zero(d, d);
  for (std::size_t g = 0; g < group.order(); ++g) {
    const ComplexMatrix moved = conjugate(rep.matrix(g), seed);
    translates[action.apply(g, base)] += moved;
    total += moved;
  }
  const ComplexMatrix whitener = inverse_sqrt_psd(total, tol, 1e-10);
  std::vector<ComplexMatrix> effects;
  effects.reserve(translates.size());
  for (const auto& t : translates) {
    ComplexMatrix e = whitener * t * whitener;
    ComplexMatrix sym = e + adjoint(e);
    sym *= 0.5;
    effects.push_back(std::move(sym));
  }
  return Povm(space, std::move(effects), tol);
}

}  // namespace effectdual
