// Copyright 2026 The zxwkit Authors
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

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zxw/diagram.hpp"

namespace zxw {

enum class ParamKind {
  ComplexA,
  ComplexB,
  ArityN,
  ArityM,
  Tau,    // tau in {0, pi}
  Sigma,  // second pink phase in {0, pi}
  Phase,  // real angle alpha of a green spider
  Labels, // n complex labels (one per W branch)
};

struct ParamSpec {
  std::string name;
  ParamKind kind;
  /// Inclusive range for arity parameters.
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct RuleParams {
  Complex a{1.0, 0.0};
  Complex b{1.0, 0.0};
  std::size_t n = 1;
  std::size_t m = 1;
  double tau = 0.0;
  double sigma = 0.0;
  double alpha = 0.0;
  std::vector<Complex> labels;

  std::string describe() const;
};

using RulePair = std::pair<Diagram, Diagram>;

struct RuleTemplate {
  std::string name;
  /// true for derived lemmas, false for the axioms.
  bool lemma = false;
  std::vector<ParamSpec> params;
  std::function<RulePair(const RuleParams&)> builder;
};

/// Every rule and lemma template, axioms first.
const std::vector<RuleTemplate>& rule_registry();
/// Throws ParameterError for unknown names.
const RuleTemplate& find_rule(const std::string& name);

/// Builds (lhs, rhs). With `flip`, both sides are transposed.
/// Throws ParameterError when `params` is outside the rule's domain.
RulePair instantiate(const std::string& name, const RuleParams& params,
                     bool flip = false);

/// A random parameter draw: labels r*exp(i*phi) with r in [0, 3], arities in
/// the template range, tau and sigma uniform over {0, pi}.
RuleParams random_params(const RuleTemplate& rule, std::mt19937_64& rng);

enum class Verdict { Exact, UpToScalar, Fail };
std::string to_string(Verdict v);

struct SoundnessReport {
  std::string rule;
  RuleParams sample;
  bool flipped = false;
  Verdict verdict = Verdict::Fail;
  Complex scalar{0.0, 0.0};
  double residual = 0.0;
};

/// Evaluates both sides for `samples` random draws. Odd-numbered draws use
/// the flipped rule.
std::vector<SoundnessReport> check_soundness(const std::string& name,
                                             std::size_t samples,
                                             std::uint64_t seed,
                                             double tol = 1e-9);

/// Spider fusion and identity removal to a fixpoint. Exact.
Diagram apply_fusion(const Diagram& d);

struct SimplifyResult {
  Diagram diagram;
  /// eval(input) = scalar * eval(diagram).
  Complex scalar{1.0, 0.0};
  std::vector<std::string> trace;
};

/// Directed rewriting with fusion, identity removal, empty-pair removal,
/// Hadamard cancellation, triangle inverse cancellation and the Hopf rule.
SimplifyResult simplify_basic(const Diagram& d);

}  // namespace zxw
