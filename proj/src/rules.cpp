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

#include "zxw/rules.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zxw/eval.hpp"
#include "zxw/generators.hpp"

namespace zxw {
namespace {

constexpr double kPi = std::numbers::pi;

Diagram seq(std::initializer_list<Diagram> ds) {
  return compose_seq(std::span<const Diagram>(ds.begin(), ds.size()));
}

Diagram par(std::initializer_list<Diagram> ds) {
  return compose_par(std::span<const Diagram>(ds.begin(), ds.size()));
}

Diagram repeat_par(const Diagram& d, std::size_t k) {
  Diagram acc;
  for (std::size_t i = 0; i < k; ++i) acc = compose_par(acc, d);
  return acc;
}

bool is_pink_phase(double tau) {
  return std::abs(tau) < 1e-12 || std::abs(tau - kPi) < 1e-12;
}

double pink_sum(double tau, double sigma) {
  const int parity = (std::abs(tau) > 1.0 ? 1 : 0) + (std::abs(sigma) > 1.0);
  return parity % 2 ? kPi : 0.0;
}

ParamSpec complex_a() { return {"a", ParamKind::ComplexA}; }
ParamSpec complex_b() { return {"b", ParamKind::ComplexB}; }
ParamSpec arity_n(std::size_t lo, std::size_t hi) {
  return {"n", ParamKind::ArityN, lo, hi};
}
ParamSpec arity_m(std::size_t lo, std::size_t hi) {
  return {"m", ParamKind::ArityM, lo, hi};
}

std::vector<RuleTemplate> build_registry() {
  std::vector<RuleTemplate> r;
  auto axiom = [&](std::string name, std::vector<ParamSpec> ps,
                   std::function<RulePair(const RuleParams&)> f) {
    r.push_back({std::move(name), false, std::move(ps), std::move(f)});
  };
  auto lemma = [&](std::string name, std::vector<ParamSpec> ps,
                   std::function<RulePair(const RuleParams&)> f) {
    r.push_back({std::move(name), true, std::move(ps), std::move(f)});
  };

  axiom("S1", {complex_a(), complex_b(), arity_n(0, 4), arity_m(0, 4)},
        [](const RuleParams& p) -> RulePair {
          return {seq({zbox(p.a, p.n, 1), zbox(p.b, 1, p.m)}),
                  zbox(p.a * p.b, p.n, p.m)};
        });
  axiom("S2", {}, [](const RuleParams&) -> RulePair {
    return {zbox(1.0, 1, 1), identity(1)};
  });
  axiom("S3", {}, [](const RuleParams&) -> RulePair {
    return {zbox(1.0, 0, 2), cap()};
  });
  axiom("Ept", {complex_a()}, [](const RuleParams& p) -> RulePair {
    return {seq({zbox(p.a, 0, 1), pink(0.0, 1, 0)}), Diagram{}};
  });
  axiom("B1", {arity_m(0, 4)}, [](const RuleParams& p) -> RulePair {
    return {seq({pink(0.0, 0, 1), zbox(1.0, 1, p.m)}),
            repeat_par(pink(0.0, 0, 1), p.m)};
  });
  axiom("B2", {}, [](const RuleParams&) -> RulePair {
    const std::size_t mid[] = {0, 2, 1, 3};
    return {seq({pink(0.0, 2, 1), zbox(1.0, 1, 2)}),
            seq({par({zbox(1.0, 1, 2), zbox(1.0, 1, 2)}), permutation(mid),
                 par({pink(0.0, 2, 1), pink(0.0, 2, 1)})})};
  });
  axiom("B3", {arity_m(0, 4)}, [](const RuleParams& p) -> RulePair {
    return {seq({pink(kPi, 0, 1), zbox(1.0, 1, p.m)}),
            repeat_par(pink(kPi, 0, 1), p.m)};
  });
  axiom("Brk", {}, [](const RuleParams&) -> RulePair {
    return {seq({par({identity(1), pink(kPi, 0, 1)}), and_box(2)}),
            identity(1)};
  });
  axiom("Bas0", {}, [](const RuleParams&) -> RulePair {
    return {seq({pink(0.0, 0, 1), triangle()}), pink(0.0, 0, 1)};
  });
  axiom("Bas1", {}, [](const RuleParams&) -> RulePair {
    return {seq({pink(kPi, 0, 1), triangle()}), zbox(1.0, 0, 1)};
  });
  axiom("Suc", {complex_a()}, [](const RuleParams& p) -> RulePair {
    return {seq({zbox(p.a, 0, 1), transpose(triangle())}),
            zbox(p.a + 1.0, 0, 1)};
  });
  axiom("Inv", {}, [](const RuleParams&) -> RulePair {
    return {seq({triangle(), inverse_triangle()}), identity(1)};
  });
  axiom("Zero", {arity_n(0, 4), arity_m(0, 4)},
        [](const RuleParams& p) -> RulePair {
          return {zbox(0.0, p.n, p.m),
                  par({repeat_par(pink(0.0, 1, 0), p.n),
                       repeat_par(pink(0.0, 0, 1), p.m)})};
        });
  axiom("EU", {}, [](const RuleParams&) -> RulePair {
    return {hadamard(), seq({green(kPi / 2, 1, 1), v_gate(),
                             green(kPi / 2, 1, 1)})};
  });
  axiom("Sym", {}, [](const RuleParams&) -> RulePair {
    return {seq({w_node(), swap()}), w_node()};
  });
  axiom("Aso", {}, [](const RuleParams&) -> RulePair {
    return {seq({w_node(), par({w_node(), identity(1)})}),
            seq({w_node(), par({identity(1), w_node()})})};
  });
  axiom("Pcy", {complex_a()}, [](const RuleParams& p) -> RulePair {
    return {seq({zbox(p.a, 1, 1), w_node()}),
            seq({w_node(), par({zbox(p.a, 1, 1), zbox(p.a, 1, 1)})})};
  });
  axiom("Wdc", {}, [](const RuleParams&) -> RulePair {
    // Parity split, then a (1 - y1*y2) weight through two triangles.
    const std::size_t mid[] = {0, 2, 1, 3};
    Diagram weight = seq({par({triangle(), triangle()}), zbox(-1.0, 2, 0)});
    Diagram rhs = seq({pink(0.0, 1, 2),
                       par({zbox(1.0, 1, 2), zbox(1.0, 1, 2)}),
                       permutation(mid), par({identity(2), weight})});
    return {w_node(), rhs};
  });

  lemma("S1r",
        {arity_n(0, 3), arity_m(0, 3), {"tau", ParamKind::Tau},
         {"sigma", ParamKind::Sigma}},
        [](const RuleParams& p) -> RulePair {
          return {seq({pink(p.tau, p.n, 1), pink(p.sigma, 1, p.m)}),
                  pink(pink_sum(p.tau, p.sigma), p.n, p.m)};
        });
  lemma("H2", {}, [](const RuleParams&) -> RulePair {
    return {seq({hadamard(), hadamard()}), identity(1)};
  });
  lemma("TriangleTranspose", {}, [](const RuleParams&) -> RulePair {
    return {seq({pauli_x(), triangle(), pauli_x()}), transpose(triangle())};
  });
  lemma("TriangleInvByPi", {}, [](const RuleParams&) -> RulePair {
    return {seq({green(kPi, 1, 1), triangle(), green(kPi, 1, 1)}),
            inverse_triangle()};
  });
  lemma("TriangleT_stab1", {}, [](const RuleParams&) -> RulePair {
    return {seq({pink(kPi, 0, 1), transpose(triangle())}), pink(kPi, 0, 1)};
  });
  lemma("Hopf", {}, [](const RuleParams&) -> RulePair {
    return {seq({zbox(1.0, 1, 2), pink(0.0, 2, 1)}),
            par({zbox(1.0, 1, 0), pink(0.0, 0, 1)})};
  });
  lemma("Pic", {{"alpha", ParamKind::Phase}, arity_m(0, 3)},
        [](const RuleParams& p) -> RulePair {
          return {seq({pauli_x(), green(p.alpha, 1, p.m)}),
                  seq({green(-p.alpha, 1, p.m), repeat_par(pauli_x(), p.m)})};
        });
  lemma("PiCommute", {}, [](const RuleParams&) -> RulePair {
    return {seq({green(kPi, 1, 1), pauli_x()}),
            seq({pauli_x(), green(kPi, 1, 1)})};
  });
  lemma("Wfuse1", {{"n", ParamKind::Labels, 1, 4}},
        [](const RuleParams& p) -> RulePair {
          const std::size_t s = p.labels.size();
          if (s == 0) throw ParameterError("Wfuse1: needs at least one label");
          Diagram branches;
          Complex total = 0.0;
          for (Complex a : p.labels) {
            branches = compose_par(branches, zbox(a, 1, 1));
            total += a;
          }
          return {seq({w_spider(s), branches, transpose(w_spider(s))}),
                  zbox(total, 1, 1)};
        });
  lemma("WGreenEqualsCup", {}, [](const RuleParams&) -> RulePair {
    return {seq({pink(kPi, 0, 1), w_node()}),
            seq({cap(), par({pauli_x(), identity(1)})})};
  });
  lemma("TriangleGreenHad", {}, [](const RuleParams&) -> RulePair {
    return {seq({pink(kPi, 0, 1), triangle()}),
            seq({pink(0.0, 0, 1), hadamard()})};
  });
  return r;
}

Complex random_label(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.0, 3.0), ang(-kPi, kPi);
  return std::polar(mag(rng), ang(rng));
}

}  // namespace

std::string RuleParams::describe() const {
  std::ostringstream os;
  os << "a=" << a << " b=" << b << " n=" << n << " m=" << m
     << " tau=" << tau << " sigma=" << sigma << " alpha=" << alpha;
  if (!labels.empty()) {
    os << " labels=[";
    for (std::size_t i = 0; i < labels.size(); ++i)
      os << (i ? "," : "") << labels[i];
    os << "]";
  }
  return os.str();
}

const std::vector<RuleTemplate>& rule_registry() {
  static const std::vector<RuleTemplate> registry = build_registry();
  return registry;
}

const RuleTemplate& find_rule(const std::string& name) {
  for (const auto& r : rule_registry())
    if (r.name == name) return r;
  throw ParameterError("unknown rule '" + name + "'");
}

RulePair instantiate(const std::string& name, const RuleParams& params,
                     bool flip) {
  const RuleTemplate& rule = find_rule(name);
  for (const auto& spec : rule.params) {
    switch (spec.kind) {
      case ParamKind::ArityN:
        if (params.n < spec.lo || params.n > spec.hi)
          throw ParameterError(name + ": arity n out of range");
        break;
      case ParamKind::ArityM:
        if (params.m < spec.lo || params.m > spec.hi)
          throw ParameterError(name + ": arity m out of range");
        break;
      case ParamKind::Tau:
        if (!is_pink_phase(params.tau))
          throw ParameterError(name + ": tau must be 0 or pi");
        break;
      case ParamKind::Sigma:
        if (!is_pink_phase(params.sigma))
          throw ParameterError(name + ": sigma must be 0 or pi");
        break;
      case ParamKind::Labels:
        if (params.labels.size() < spec.lo || params.labels.size() > spec.hi)
          throw ParameterError(name + ": wrong number of labels");
        break;
      case ParamKind::ComplexA:
      case ParamKind::ComplexB:
      case ParamKind::Phase:
        break;
    }
  }
  RulePair sides = rule.builder(params);
  if (flip) sides = {transpose(sides.first), transpose(sides.second)};
  if (sides.first.n_inputs() != sides.second.n_inputs() ||
      sides.first.n_outputs() != sides.second.n_outputs())
    throw Error(name + ": sides have different boundaries");
  return sides;
}

RuleParams random_params(const RuleTemplate& rule, std::mt19937_64& rng) {
  RuleParams p;
  for (const auto& spec : rule.params) {
    std::uniform_int_distribution<std::size_t> ar(spec.lo, spec.hi);
    std::bernoulli_distribution coin(0.5);
    switch (spec.kind) {
      case ParamKind::ComplexA:
        p.a = random_label(rng);
        break;
      case ParamKind::ComplexB:
        p.b = random_label(rng);
        break;
      case ParamKind::ArityN:
        p.n = ar(rng);
        break;
      case ParamKind::ArityM:
        p.m = ar(rng);
        break;
      case ParamKind::Tau:
        p.tau = coin(rng) ? kPi : 0.0;
        break;
      case ParamKind::Sigma:
        p.sigma = coin(rng) ? kPi : 0.0;
        break;
      case ParamKind::Phase:
        p.alpha = std::uniform_real_distribution<double>(-kPi, kPi)(rng);
        break;
      case ParamKind::Labels: {
        p.labels.resize(ar(rng));
        for (auto& l : p.labels) l = random_label(rng);
        break;
      }
    }
  }
  return p;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Exact:
      return "exact";
    case Verdict::UpToScalar:
      return "up-to-scalar";
    case Verdict::Fail:
      return "fail";
  }
  return "?";
}

std::vector<SoundnessReport> check_soundness(const std::string& name,
                                             std::size_t samples,
                                             std::uint64_t seed, double tol) {
  const RuleTemplate& rule = find_rule(name);
  std::mt19937_64 rng(seed);
  std::vector<SoundnessReport> out;
  for (std::size_t i = 0; i < samples; ++i) {
    SoundnessReport rep;
    rep.rule = name;
    rep.sample = random_params(rule, rng);
    rep.flipped = i % 2 == 1;
    auto [lhs, rhs] = instantiate(name, rep.sample, rep.flipped);
    auto eq = equal_up_to_scalar(eval(lhs), eval(rhs), tol);
    rep.scalar = eq.scalar;
    rep.residual = eq.residual;
    rep.verdict = eq.exact   ? Verdict::Exact
                  : eq.equal ? Verdict::UpToScalar
                             : Verdict::Fail;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace zxw
