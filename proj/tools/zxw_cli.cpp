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

// zxw: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "zxw/controlled.hpp"
#include "zxw/eval.hpp"
#include "zxw/expm.hpp"
#include "zxw/hamiltonian.hpp"
#include "zxw/io.hpp"
#include "zxw/pauli.hpp"
#include "zxw/rules.hpp"

namespace {

using namespace zxw;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Global {
  std::optional<std::size_t> cap;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
};

Config resolve(const Global& g) {
  Config c = Config::from_env();
  if (g.cap) c.qubit_cap = *g.cap;
  if (g.tol) c.tolerance = *g.tol;
  if (g.seed) c.seed = *g.seed;
  c.check();
  return c;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

EvalOptions eval_options(const Config& cfg) {
  EvalOptions opts;
  opts.qubit_cap = cfg.qubit_cap;
  return opts;
}

std::string render(const Diagram& d, const std::string& format) {
  if (format == "dot") return to_dot(d);
  return to_json(d, 1) + "\n";
}

// Diagram JSON, or a Pauli-sum file (discharged Hamiltonian diagram).
Diagram load_diagram(const std::string& path, const Config& cfg) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return diagram_from_json(text);
  return build_hamiltonian_diagram(parse_pauli_sum(text), cfg.qubit_cap)
      .discharged;
}

// ---------------------------------------------------------------- check-rules

struct CheckRulesArgs {
  std::string rule;
  std::size_t samples = 50;
};

int run_check_rules(const CheckRulesArgs& a, const Config& cfg) {
  std::vector<std::string> names;
  if (a.rule.empty()) {
    for (const auto& r : rule_registry()) names.push_back(r.name);
  } else {
    names.push_back(find_rule(a.rule).name);
  }
  std::printf("%-18s %8s %8s %10s %12s\n", "rule", "samples", "exact%",
              "scalar%", "max_resid");
  std::size_t total_fail = 0;
  for (const auto& name : names) {
    auto reports = check_soundness(name, a.samples, cfg.seed, cfg.tolerance);
    std::size_t exact = 0, scalar = 0, fail = 0;
    double worst = 0.0;
    for (const auto& r : reports) {
      if (r.verdict == Verdict::Exact) ++exact;
      else if (r.verdict == Verdict::UpToScalar) ++scalar;
      else ++fail;
      worst = std::max(worst, r.residual);
    }
    const double n = static_cast<double>(reports.size());
    std::printf("%-18s %8zu %8.1f %10.1f %12.3g%s\n", name.c_str(),
                reports.size(), 100.0 * double(exact) / n,
                100.0 * double(scalar) / n, worst, fail ? "  FAIL" : "");
    total_fail += fail;
  }
  if (total_fail) {
    std::printf("%zu failing draw(s)\n", total_fail);
    return kFailed;
  }
  return kOk;
}

// ----------------------------------------------------------------------- eval

struct EvalArgs {
  std::string file;
  std::optional<double> t;
  std::string out;
};

int run_eval(const EvalArgs& a, const Config& cfg) {
  const Diagram d = load_diagram(a.file, cfg);
  EvalOptions opts = eval_options(cfg);
  opts.t = a.t;
  write_out(a.out, format_matrix(eval(d, opts)));
  return kOk;
}

// ----------------------------------------------------------------- controlled

struct ControlledArgs {
  std::string matrix, state, sum, out;
  bool verify = false;
};

// SPEC is a comma separated list of COEFF:FILE items added to the base term.
std::vector<std::pair<Complex, std::string>> parse_sum_spec(
    const std::string& spec) {
  std::vector<std::pair<Complex, std::string>> items;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("--sum item '" + item + "' is not COEFF:FILE", 0);
    items.emplace_back(parse_coefficient(item.substr(0, colon)),
                       item.substr(colon + 1));
  }
  return items;
}

int run_controlled(const ControlledArgs& a, const Config& cfg) {
  const bool is_state = !a.state.empty();
  auto build = [&](const Matrix& m) {
    if (is_state) {
      if (m.cols() != 1) throw ArityError("state file must have one column");
      return controlled_state_normal_form(m.col(0));
    }
    return controlled_matrix(m);
  };
  const Matrix base = parse_matrix(read_file(is_state ? a.state : a.matrix));
  std::vector<ControlledDiagram> parts{build(base)};
  std::vector<Complex> coeffs{1.0};
  Matrix target = base;
  for (const auto& [c, path] : parse_sum_spec(a.sum)) {
    const Matrix m = parse_matrix(read_file(path));
    if (m.rows() != base.rows() || m.cols() != base.cols())
      throw ArityError("'" + path + "' does not match the base shape");
    parts.push_back(build(m));
    coeffs.push_back(c);
    target += c * m;
  }
  ControlledDiagram cd = parts.front();
  if (parts.size() > 1)
    cd = is_state ? controlled_sum_states(parts, coeffs)
                  : controlled_sum_matrices(parts, coeffs);
  if (cd.m > cfg.qubit_cap)
    throw CapExceeded(std::to_string(cd.m) + " qubits exceed the cap");
  write_out(a.out, to_json(cd.diagram, 1) + "\n");
  if (!a.verify) return kOk;
  const auto r = check_contract(cd, target, cfg.tolerance);
  std::cerr << "idle residual " << sci(r.idle_residual)
            << ", discharge residual " << sci(r.discharge_residual) << ": "
            << (r.ok ? "contract holds" : "CONTRACT VIOLATED") << "\n";
  return r.ok ? kOk : kFailed;
}

// ------------------------------------------------------------------------ ham

struct HamArgs {
  std::string file, format, out;
  bool verify = false;
};

int run_ham_build(const HamArgs& a, const Config& cfg) {
  const PauliSum h = parse_pauli_sum(read_file(a.file));
  const HamiltonianDiagram hd = build_hamiltonian_diagram(h, cfg.qubit_cap);
  std::cerr << h.terms.size() << " terms on " << h.m << " qubits, "
            << hd.discharged.n_generators() << " generators\n";
  if (!a.format.empty()) write_out(a.out, render(hd.discharged, a.format));
  if (!a.verify) return kOk;
  const Matrix got = eval(hd.discharged, eval_options(cfg));
  const Matrix want = oracle_matrix(h, cfg.qubit_cap);
  const double res = max_abs_diff(got, want);
  const std::string dims =
      std::to_string(want.rows()) + "x" + std::to_string(want.cols());
  if (res <= cfg.tolerance) {
    std::cout << "oracle match: " << dims << ", residual " << sci(res)
              << " < " << sci(cfg.tolerance) << "\n";
    return kOk;
  }
  std::cout << "oracle MISMATCH: " << dims << ", residual " << sci(res)
            << "\n";
  return kFailed;
}

// ----------------------------------------------------------------------- expm

struct ExpmArgs {
  std::string file, method = "exact", format, out;
  double t = 0.0;
  std::optional<std::size_t> order, steps;
  bool emit_circuit = false;
  bool compare = false;
};

int run_expm(const ExpmArgs& a, const Config& cfg) {
  const PauliSum h = parse_pauli_sum(read_file(a.file));
  if (h.m > cfg.qubit_cap)
    throw CapExceeded(std::to_string(h.m) + " qubits exceed the cap");
  if (a.method == "taylor" && a.steps)
    throw ParameterError("--steps applies to trotter only");
  if (a.method != "taylor" && a.order)
    throw ParameterError("--order applies to taylor only");
  if (a.method == "exact" && a.steps)
    throw ParameterError("--steps applies to trotter only");

  Diagram d;
  std::optional<Circuit> circuit;
  if (a.method == "taylor") {
    if (a.emit_circuit)
      throw ParameterError("--emit-circuit needs a unitary method");
    d = taylor_diagram(h, a.order.value_or(3), a.t, cfg.qubit_cap);
  } else if (a.method == "trotter") {
    const std::size_t n = a.steps.value_or(1);
    d = trotter_diagram(h, n, a.t);
    if (a.emit_circuit) circuit = trotter_circuit(h, n, a.t);
  } else {
    d = commuting_exponential(h).at(a.t);
    // With commuting terms one step is exact.
    if (a.emit_circuit) circuit = trotter_circuit(h, 1, a.t);
  }
  std::cerr << a.method << ": " << d.n_generators() << " generators\n";
  if (!a.format.empty()) write_out(a.out, render(d, a.format));
  if (circuit) std::cout << circuit->to_text();
  if (!a.compare) return kOk;
  const Matrix want = expm_oracle(oracle_matrix(h, cfg.qubit_cap), a.t);
  const Matrix got = eval(d, eval_options(cfg));
  std::cout << "operator-norm error vs exp(-iHt/2): "
            << sci(operator_norm(got - want)) << "\n";
  if (circuit)
    std::cout << "circuit operator-norm error: "
              << sci(operator_norm(circuit->unitary() - want)) << "\n";
  return kOk;
}

// --------------------------------------------------------------------- export

struct ExportArgs {
  std::string file, format = "json", out;
};

int run_export(const ExportArgs& a, const Config& cfg) {
  write_out(a.out, render(load_diagram(a.file, cfg), a.format));
  return kOk;
}

// --------------------------------------------------------------- extract-demo

struct ExtractArgs {
  std::optional<double> a, b, t;
  std::size_t count = 1;
};

int run_extract(const ExtractArgs& x, const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> coef(-2.0, 2.0), time(0.0, 3.0);
  const bool fixed = x.a || x.b || x.t;
  const std::size_t count = fixed ? 1 : x.count;
  bool ok = true;
  for (std::size_t k = 0; k < count; ++k) {
    const double a = fixed ? x.a.value_or(1.0) : coef(rng);
    const double b = fixed ? x.b.value_or(1.0) : coef(rng);
    const double t = fixed ? x.t.value_or(1.0) : time(rng);
    const Circuit c = extract_axz_circuit(a, b, t);
    const Matrix H = a * pauli_matrix(Pauli::X) + b * pauli_matrix(Pauli::Z);
    const auto [s0, s1] = axz_coefficients(a, b, t);
    const auto dist = phase_aligned_distance(c.unitary(), expm_oracle(H, t));
    std::cout << "# a " << a << " b " << b << " t " << t << "\n";
    std::cout << "# s0 " << s0 << " s1 " << s1 << "\n";
    std::cout << c.to_text();
    std::cout << "# distance up to phase " << sci(dist.distance) << "\n";
    if (dist.distance > cfg.tolerance) ok = false;
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxw: diagrammatic matrix toolkit"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--cap", g.cap, "qubit cap (env ZXW_CAP, default 12)");
  app.add_option("--tol", g.tol, "tolerance (env ZXW_TOL, default 1e-9)");
  app.add_option("--seed", g.seed, "random seed (default 0)");

  CheckRulesArgs cr;
  auto* s_rules = app.add_subcommand("check-rules", "rule soundness table");
  s_rules->add_option("--rule", cr.rule, "single rule name");
  s_rules->add_option("--samples", cr.samples, "draws per rule")
      ->check(CLI::PositiveNumber);
  s_rules->add_option("--seed", g.seed, "random seed");

  EvalArgs ev;
  auto* s_eval = app.add_subcommand("eval", "evaluate a diagram to a matrix");
  s_eval->add_option("file", ev.file, "diagram JSON or Pauli-sum file")
      ->required();
  s_eval->add_option("--t", ev.t, "value for symbolic labels");
  s_eval->add_option("--out", ev.out, "output path (default stdout)");

  ControlledArgs ct;
  auto* s_ctrl = app.add_subcommand("controlled", "controlled diagram JSON");
  auto* o_m = s_ctrl->add_option("--matrix", ct.matrix, "square matrix file");
  auto* o_s = s_ctrl->add_option("--state", ct.state, "column vector file");
  o_m->excludes(o_s);
  s_ctrl->add_option("--sum", ct.sum, "extra terms COEFF:FILE[,COEFF:FILE...]");
  s_ctrl->add_flag("--verify", ct.verify, "check both plug conditions");
  s_ctrl->add_option("--out", ct.out, "output path (default stdout)");

  HamArgs hm;
  auto* s_ham = app.add_subcommand("ham", "Hamiltonian diagrams");
  s_ham->require_subcommand(1);
  auto* s_build = s_ham->add_subcommand("build", "build from a Pauli-sum file");
  s_build->add_option("file", hm.file, "Pauli-sum file")->required();
  s_build->add_option("--export", hm.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  s_build->add_flag("--verify", hm.verify, "compare with the dense oracle");
  s_build->add_option("--out", hm.out, "export path (default stdout)");

  ExpmArgs ex;
  auto* s_expm = app.add_subcommand("expm", "exp(-iHt/2) diagrams");
  s_expm->add_option("file", ex.file, "Pauli-sum file")->required();
  s_expm->add_option("--method", ex.method, "taylor, trotter or exact")
      ->check(CLI::IsMember({"taylor", "trotter", "exact"}));
  s_expm->add_option("--t", ex.t, "evolution time")->required();
  auto* o_order = s_expm->add_option("--order", ex.order, "Taylor order");
  auto* o_steps = s_expm->add_option("--steps", ex.steps, "Trotter steps");
  o_order->excludes(o_steps);
  s_expm->add_flag("--emit-circuit", ex.emit_circuit, "print the gate list");
  s_expm->add_flag("--compare-oracle", ex.compare, "print the norm error");
  s_expm->add_option("--export", ex.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  s_expm->add_option("--out", ex.out, "export path (default stdout)");

  ExportArgs xp;
  auto* s_export = app.add_subcommand("export", "render a diagram");
  s_export->add_option("file", xp.file, "diagram JSON or Pauli-sum file")
      ->required();
  s_export->add_option("--format", xp.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  s_export->add_option("--out", xp.out, "output path (default stdout)");

  ExtractArgs xt;
  auto* s_extract =
      app.add_subcommand("extract-demo", "circuit for exp(-i(aX+bZ)t/2)");
  s_extract->add_option("--a", xt.a, "X coefficient");
  s_extract->add_option("--b", xt.b, "Z coefficient");
  s_extract->add_option("--t", xt.t, "time");
  s_extract->add_option("--count", xt.count, "random instances");
  s_extract->add_option("--seed", g.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (s_ctrl->parsed() && ct.matrix.empty() && ct.state.empty()) {
    std::cerr << "controlled: one of --matrix or --state is required\n"
              << s_ctrl->help();
    return kUsage;
  }

  try {
    const Config cfg = resolve(g);
    if (s_rules->parsed()) return run_check_rules(cr, cfg);
    if (s_eval->parsed()) return run_eval(ev, cfg);
    if (s_ctrl->parsed()) return run_controlled(ct, cfg);
    if (s_build->parsed()) return run_ham_build(hm, cfg);
    if (s_expm->parsed()) return run_expm(ex, cfg);
    if (s_export->parsed()) return run_export(xp, cfg);
    if (s_extract->parsed()) return run_extract(xt, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
