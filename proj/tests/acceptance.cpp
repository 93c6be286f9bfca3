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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "oracle.hpp"
#include "random_diagram.hpp"
#include "zxw/controlled.hpp"
#include "zxw/eval.hpp"
#include "zxw/expm.hpp"
#include "zxw/generators.hpp"
#include "zxw/hamiltonian.hpp"
#include "zxw/io.hpp"
#include "zxw/pauli.hpp"
#include "zxw/rules.hpp"

namespace {

using oracle::C;
using oracle::M;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

zxw::PauliSum to_sum(const std::vector<oracle::Term>& terms) {
  return zxw::parse_pauli_sum(oracle::to_text(terms));
}

std::vector<oracle::Term> random_terms(oracle::Rng& rng, int m, int n,
                                       bool real, double scale = 1.0) {
  std::vector<oracle::Term> terms;
  for (int k = 0; k < n; ++k) {
    C a = real ? C(rng.uniform(-scale, scale), 0.0) : rng.complex(scale);
    terms.push_back({a, rng.pauli_word(m)});
  }
  return terms;
}

Outcome generators() {
  oracle::Rng rng(101);
  double worst = 0.0;
  auto track = [&](const zxw::Diagram& d, const M& want) {
    worst = std::max(worst, oracle::maxabs(zxw::eval(d) - want));
  };
  track(zxw::hadamard(), oracle::hadamard());
  track(zxw::w_node(), oracle::w12());
  track(zxw::cap(), oracle::cap());
  track(zxw::cup(), oracle::cap().transpose());
  track(zxw::swap(), oracle::swap());
  track(zxw::identity(2), oracle::eye(4));
  for (int k = 0; k < 20; ++k) {
    const C a = rng.complex();
    const int n = rng.integer(0, 3), m = rng.integer(0, 3);
    track(zxw::zbox(a, std::size_t(n), std::size_t(m)), oracle::zbox(a, n, m));
  }
  return {worst <= 1e-12, "worst entry error " + fmt("%.2e", worst)};
}

Outcome rule_soundness() {
  const auto t0 = Clock::now();
  std::size_t draws = 0, fails = 0, scalar = 0, disagreements = 0;
  std::size_t rules = 0;
  for (const auto& rule : zxw::rule_registry()) {
    ++rules;
    auto reports = zxw::check_soundness(rule.name, 50, 2026);
    for (const auto& r : reports) {
      ++draws;
      if (r.verdict == zxw::Verdict::Fail) ++fails;
      if (r.verdict == zxw::Verdict::UpToScalar) ++scalar;
      // Second route: proportionality decided test-side.
      auto [lhs, rhs] = zxw::instantiate(rule.name, r.sample, r.flipped);
      if (!oracle::proportional(zxw::eval(lhs), zxw::eval(rhs), 1e-9))
        ++disagreements;
    }
  }
  const double secs = seconds_since(t0);
  return {fails == 0 && disagreements == 0 && secs < 30.0 && rules >= 18,
          std::to_string(rules) + " templates, " + std::to_string(draws) +
              " draws, " + std::to_string(scalar) + " up-to-scalar, " +
              std::to_string(fails) + " fail, " +
              std::to_string(disagreements) + " oracle disagreements, " +
              fmt("%.2f s", secs)};
}

Outcome controlled_contract() {
  oracle::Rng rng(202);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int m = 1 + k % 3;
    const M mat = rng.matrix(1 << m, 1 << m);
    auto c = zxw::controlled_matrix(mat);
    worst = std::max(worst, oracle::maxabs(zxw::eval(zxw::idle(c)) - oracle::eye(1 << m)));
    worst = std::max(worst, oracle::maxabs(zxw::eval(zxw::discharge(c)) - mat));
  }
  for (int k = 0; k < 20; ++k) {
    const int m = 1 + k % 3;
    const M v = rng.matrix(1 << m, 1);
    auto c = zxw::controlled_state_normal_form(v.col(0));
    M zero = M::Zero(1 << m, 1);
    zero(0, 0) = 1.0;
    worst = std::max(worst, oracle::maxabs(zxw::eval(zxw::idle(c)) - zero));
    worst = std::max(worst, oracle::maxabs(zxw::eval(zxw::discharge(c)) - v));
  }
  return {worst <= 1e-9, "20 matrices + 20 states, worst residual " + fmt("%.2e", worst)};
}

Outcome sum_product() {
  oracle::Rng rng(303);
  double worst = 0.0;
  for (int k = 1; k <= 4; ++k) {
    for (int m = 1; m <= 2; ++m) {
      std::vector<zxw::ControlledDiagram> cm, cs;
      std::vector<zxw::Complex> coeffs;
      M msum = M::Zero(1 << m, 1 << m), vsum = M::Zero(1 << m, 1);
      M prod = oracle::eye(1 << m);
      for (int i = 0; i < k; ++i) {
        const C c = rng.complex();
        const M mat = rng.matrix(1 << m, 1 << m);
        const M v = rng.matrix(1 << m, 1);
        cm.push_back(zxw::controlled_matrix(mat));
        cs.push_back(zxw::controlled_state_normal_form(v.col(0)));
        coeffs.push_back(c);
        msum += c * mat;
        vsum += c * v;
        prod = prod * mat;
      }
      auto sm = zxw::controlled_sum_matrices(cm, coeffs);
      auto ss = zxw::controlled_sum_states(cs, coeffs);
      auto pm = zxw::controlled_product(cm);
      worst = std::max(worst, oracle::maxabs(zxw::eval(zxw::discharge(sm)) - msum));
      worst = std::max(worst, oracle::maxabs(zxw::eval(zxw::idle(sm)) - oracle::eye(1 << m)));
      worst = std::max(worst, oracle::maxabs(zxw::eval(zxw::discharge(ss)) - vsum));
      worst = std::max(worst, oracle::maxabs(zxw::eval(zxw::discharge(pm)) - prod));
      worst = std::max(worst, oracle::maxabs(zxw::eval(zxw::idle(pm)) - oracle::eye(1 << m)));
    }
  }
  // Two normal forms merged branch by branch.
  const M v1 = rng.matrix(4, 1), v2 = rng.matrix(4, 1);
  const C a = rng.complex(), b = rng.complex();
  worst = std::max(worst, oracle::maxabs(
      zxw::eval(zxw::sum_normal_forms(v1.col(0), v2.col(0), a, b)) - (a * v1 + b * v2)));
  return {worst <= 1e-9, "k = 1..4 sums and products, worst residual " + fmt("%.2e", worst)};
}

Outcome hamiltonian_encoding() {
  const std::vector<oracle::Term> ex = {
      {1.0, "XXI"}, {1.0, "IXX"}, {-1.0, "ZII"}, {-1.0, "IZI"}, {-1.0, "IIZ"}};
  double ex_res = oracle::maxabs(
      zxw::eval(zxw::build_hamiltonian_diagram(to_sum(ex)).discharged) -
      oracle::hamiltonian(ex));
  oracle::Rng rng(404);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto terms = random_terms(rng, rng.integer(1, 3), rng.integer(1, 6), false);
    auto hd = zxw::build_hamiltonian_diagram(to_sum(terms));
    worst = std::max(worst, oracle::maxabs(zxw::eval(hd.discharged) - oracle::hamiltonian(terms)));
    const M id = oracle::eye(hd.discharged.n_inputs() ? (1 << hd.discharged.n_inputs()) : 1);
    worst = std::max(worst, oracle::maxabs(zxw::eval(zxw::idle(hd.controlled)) - id));
  }
  // Diagonal-factor form, oracle assembled here from C^dagger D C.
  const zxw::BasisChange changes[] = {zxw::BasisChange::I, zxw::BasisChange::H,
                                      zxw::BasisChange::V};
  M basis[3] = {oracle::eye(2), oracle::hadamard(), M(2, 2)};
  basis[2] << C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5);
  double diag_worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    zxw::DiagonalFactorSum ds;
    ds.m = std::size_t(rng.integer(1, 3));
    M want = M::Zero(1 << ds.m, 1 << ds.m);
    for (int i = 0, n = rng.integer(1, 3); i < n; ++i) {
      zxw::DiagonalTerm t;
      t.alpha = rng.complex();
      M d = oracle::eye(1), c = oracle::eye(1);
      for (std::size_t q = 0; q < ds.m; ++q) {
        const C a = rng.integer(0, 3) == 0 ? C(1.0) : rng.complex();
        const int ci = rng.integer(0, 2);
        t.labels.push_back(a);
        t.conj.push_back(changes[ci]);
        M dq = oracle::eye(2);
        dq(1, 1) = a;
        d = oracle::kron(d, dq);
        c = oracle::kron(c, basis[ci]);
      }
      want += t.alpha * c.adjoint() * d * c;
      ds.terms.push_back(t);
    }
    auto cd = zxw::build_diagonal_sum_diagram(ds);
    diag_worst = std::max(diag_worst, oracle::maxabs(zxw::eval(zxw::discharge(cd)) - want));
  }
  const double all = std::max({ex_res, worst, diag_worst});
  return {all <= 1e-9, "5-term example " + fmt("%.2e", ex_res) + ", 20 random " +
                           fmt("%.2e", worst) + ", diagonal form " + fmt("%.2e", diag_worst)};
}

Outcome commutativity() {
  oracle::Rng rng(505);
  int ok = 0;
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const int n = rng.integer(2, 5);
    const auto terms = random_terms(rng, rng.integer(1, 3), n, false);
    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.gen);
    auto v = zxw::check_sum_commutativity(to_sum(terms), perm);
    if (v.equal) ++ok;
    worst = std::max({worst, v.discharged_residual, v.idle_residual});
  }
  return {ok == 10, std::to_string(ok) + "/10 permutations, worst residual " + fmt("%.2e", worst)};
}

Outcome schrodinger() {
  oracle::Rng rng(606);
  int ok = 0;
  double worst_ratio = 0.0;
  const double grid[] = {0.0, 0.3, 0.7, 1.2};
  for (int k = 0; k < 5; ++k) {
    const auto terms = random_terms(rng, 2, rng.integer(1, 4), true);
    const M psi = rng.matrix(4, 1), phi = rng.matrix(4, 1);
    auto r = zxw::verify_schrodinger_linearity(to_sum(terms), psi.col(0), phi.col(0),
                                               rng.complex(), rng.complex(), grid, 1e-3);
    bool case_ok = r.ok;
    for (std::size_t i = 0; i < r.times.size(); ++i) {
      const double ratio = r.bounds[i] > 0 ? r.residuals[i] / r.bounds[i] : 0.0;
      worst_ratio = std::max(worst_ratio, ratio);
      if (r.residuals[i] > r.bounds[i] + 1e-12) case_ok = false;
    }
    if (case_ok) ++ok;
  }
  return {ok == 5, std::to_string(ok) + "/5 cases, worst residual/bound " + fmt("%.3f", worst_ratio)};
}

Outcome commuting_exponentials() {
  const std::vector<oracle::Term> terms = {{1.0, "ZZZ"}, {2.0, "XZX"}};
  const M H = oracle::hamiltonian(terms);
  auto pd = zxw::commuting_exponential(to_sum(terms));
  double worst = 0.0;
  for (double t : {0.1, 0.5, 1.0})
    worst = std::max(worst, oracle::dist_up_to_phase(
                                zxw::eval_at(pd.diagram, t), oracle::expm_h(H, t)));
  auto dr = zxw::derivative_at_zero(pd, H);
  const double rich = oracle::maxabs(dr.richardson - C(0.0, -0.5) * H);
  const bool slope_ok = std::abs(dr.slope - 2.0) <= 0.2;
  return {worst <= 1e-9 && slope_ok && rich <= 1e-6,
          "phase-free distance " + fmt("%.2e", worst) + ", slope " + fmt("%.3f", dr.slope) +
              ", Richardson error " + fmt("%.2e", rich)};
}

Outcome taylor() {
  oracle::Rng rng(707);
  double exact_worst = 0.0, ratio_lo = 1e9, ratio_hi = 0.0;
  for (int k = 0; k < 5; ++k) {
    const double a = rng.uniform(-1.5, 1.5), b = rng.uniform(-1.5, 1.5);
    const std::vector<oracle::Term> terms = {{a, "ZZ"}, {b, "ZX"}};
    const M H = oracle::hamiltonian(terms);
    double err[2];
    const double ts[2] = {0.4, 0.2};
    for (int i = 0; i < 2; ++i) {
      const M got = zxw::eval(zxw::taylor_diagram(to_sum(terms), 3, ts[i]));
      exact_worst = std::max(exact_worst, oracle::maxabs(got - oracle::taylor(H, 3, ts[i])));
      err[i] = oracle::opnorm(got - oracle::expm_h(H, ts[i]));
    }
    const double ratio = err[0] / err[1];
    ratio_lo = std::min(ratio_lo, ratio);
    ratio_hi = std::max(ratio_hi, ratio);
  }
  const bool ok = exact_worst <= 1e-9 && ratio_lo >= 16.0 * 0.75 && ratio_hi <= 16.0 * 1.25;
  return {ok, "partial-sum residual " + fmt("%.2e", exact_worst) + ", halving ratio in [" +
                  fmt("%.2f", ratio_lo) + ", " + fmt("%.2f", ratio_hi) + "]"};
}

Outcome trotter() {
  const std::vector<oracle::Term> terms = {{3.0, "ZY"}, {2.0, "ZZ"}};
  const M want = oracle::expm_h(oracle::hamiltonian(terms), 0.5);
  const auto h = to_sum(terms);
  const M d5 = zxw::eval(zxw::trotter_diagram(h, 5, 0.5));
  const M d10 = zxw::eval(zxw::trotter_diagram(h, 10, 0.5));
  const double prod_res = std::max(oracle::maxabs(d5 - oracle::trotter(terms, 5, 0.5)),
                                   oracle::maxabs(d10 - oracle::trotter(terms, 10, 0.5)));
  const double e5 = oracle::opnorm(d5 - want), e10 = oracle::opnorm(d10 - want);
  const double ratio = e5 / e10;
  return {prod_res <= 1e-9 && std::abs(ratio - 2.0) <= 0.4,
          "errors " + fmt("%.3e", e5) + " -> " + fmt("%.3e", e10) + ", ratio " +
              fmt("%.3f", ratio) + ", product-formula residual " + fmt("%.2e", prod_res)};
}

Outcome cayley() {
  oracle::Rng rng(808);
  std::vector<M> cases = {oracle::kron(oracle::pauli('Z'), oracle::pauli('I')),
                          oracle::kron(oracle::pauli('I'), oracle::pauli('X')),
                          oracle::kron(oracle::pauli('Z'), oracle::pauli('Z')),
                          2.5 * oracle::eye(4), M::Zero(2, 2)};
  while (cases.size() < 20) cases.push_back(rng.hermitian(rng.integer(1, 4)));
  double worst = 0.0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const double t = rng.uniform(-2.0, 2.0);
    const auto c = zxw::putzer_at(cases[k], t);
    worst = std::max(worst, oracle::maxabs(zxw::cayley_reconstruct(cases[k], c) -
                                           oracle::expm_h(cases[k], t)));
  }
  // Diagram route on the repeated-eigenvalue case.
  const std::vector<oracle::Term> zi = {{1.0, "ZI"}};
  const double diag = oracle::maxabs(zxw::eval(zxw::cayley_hamilton_diagram(to_sum(zi), 0.8)) -
                                     oracle::expm_h(oracle::hamiltonian(zi), 0.8));
  return {worst <= 1e-8 && diag <= 1e-8,
          "20 matrices, worst reconstruction " + fmt("%.2e", worst) + ", Z(x)I diagram " +
              fmt("%.2e", diag)};
}

Outcome extraction() {
  oracle::Rng rng(909);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0), t = rng.uniform(0.0, 3.0);
    const M H = a * oracle::pauli('X') + b * oracle::pauli('Z');
    worst = std::max(worst, oracle::dist_up_to_phase(zxw::extract_axz_circuit(a, b, t).unitary(),
                                                     oracle::expm_h(H, t)));
  }
  return {worst <= 1e-9, "10 random (a, b, t), worst distance up to phase " + fmt("%.2e", worst)};
}

Outcome plumbing() {
  oracle::Rng rng(1010);
  int same = 0;
  for (int k = 0; k < 50; ++k) {
    const zxw::Diagram d = testutil::random_diagram(rng);
    if (zxw::diagram_from_json(zxw::to_json(d)) == d) ++same;
  }
  const auto terms = random_terms(rng, 10, 70, true);
  const auto t0 = Clock::now();
  const auto h = zxw::parse_pauli_sum(oracle::to_text(terms));
  const auto hd = zxw::build_hamiltonian_diagram(h);
  const double secs = seconds_since(t0);
  const bool parsed = h.terms.size() == 70 && h.m == 10 && zxw::validate(hd.discharged).empty();
  return {same == 50 && parsed && secs < 5.0,
          std::to_string(same) + "/50 JSON round trips, 70-term 10-qubit build " +
              fmt("%.3f s", secs) + ", " + std::to_string(hd.discharged.n_generators()) +
              " generators"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"generator semantics", generators},
      {"rule soundness", rule_soundness},
      {"controlled contract", controlled_contract},
      {"sum/product algebra", sum_product},
      {"Hamiltonian encoding", hamiltonian_encoding},
      {"commutativity", commutativity},
      {"Schrodinger linearity", schrodinger},
      {"commuting exponentials", commuting_exponentials},
      {"Taylor", taylor},
      {"Trotter", trotter},
      {"Cayley-Hamilton/Putzer", cayley},
      {"extraction demo", extraction},
      {"plumbing", plumbing},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %-24s %s\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
