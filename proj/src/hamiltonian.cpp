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

#include "zxw/hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "build_util.hpp"
#include "zxw/eval.hpp"
#include "zxw/expm.hpp"
#include "zxw/generators.hpp"

namespace zxw {
namespace {

using detail::add_scalar;
using detail::and_gate;
using detail::copy;
using detail::effect;
using detail::w_fan;
using detail::zbox_on;

constexpr double kPi = std::numbers::pi;

Port apply_diagram(Diagram& d, const Diagram& gate, Port in) {
  const Port ends[] = {in};
  return d.splice(gate, ends)[0];
}

Port apply_change(Diagram& d, BasisChange c, Port in, bool inverse) {
  switch (c) {
    case BasisChange::I:
      return in;
    case BasisChange::H:
      return detail::apply_hadamard(d, in, "basis");
    case BasisChange::V:
      return apply_diagram(d, inverse ? v_dagger() : v_gate(), in);
  }
  return in;
}

void check_cap(std::size_t m, std::size_t cap) {
  if (m > cap)
    throw CapExceeded(std::to_string(m) + " qubits exceed the cap of " +
                      std::to_string(cap));
}

}  // namespace

BasisChange basis_change_for(Pauli p) {
  switch (p) {
    case Pauli::X:
      return BasisChange::H;
    case Pauli::Y:
      return BasisChange::V;
    case Pauli::I:
    case Pauli::Z:
      break;
  }
  return BasisChange::I;
}

Matrix basis_change_matrix(BasisChange c) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  switch (c) {
    case BasisChange::I:
      m << 1, 0, 0, 1;
      break;
    case BasisChange::H:
      m << r, r, r, -r;
      break;
    case BasisChange::V:
      m << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5),
          Complex(0.5, 0.5);
      break;
  }
  return m;
}

HamiltonianDiagram build_hamiltonian_diagram(const PauliSum& h,
                                             std::size_t qubit_cap) {
  check_cap(h.m, qubit_cap);
  if (h.terms.empty()) throw ArityError("Hamiltonian without terms");
  Diagram d;
  Port ctrl = d.add_input();
  std::vector<Port> x;
  for (std::size_t q = 0; q < h.m; ++q) x.push_back(d.add_input());
  auto branches = w_fan(d, ctrl, h.terms.size(), WTree::LeftComb, "sum");
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    const auto& term = h.terms[i];
    if (term.string.size() != h.m)
      throw ArityError("term " + std::to_string(i) + " has the wrong length");
    Port c = zbox_on(d, {branches[i]}, 1, term.alpha, "weight")[0];
    const std::size_t legs = term.string.weight();
    auto copies = copy(d, c, legs, "control");
    std::size_t next = 0;
    for (std::size_t q = 0; q < h.m; ++q) {
      const Pauli p = term.string.ops[q];
      if (p == Pauli::I) continue;
      const BasisChange bc = basis_change_for(p);
      x[q] = apply_change(d, bc, x[q], false);
      // Controlled Z as a Hadamard edge between two copy spiders.
      auto data = copy(d, x[q], 2, "cz");
      x[q] = data[0];
      Port hp = detail::apply_hadamard(d, data[1], "cz");
      d.link(hp, copies[next++]);
      x[q] = apply_change(d, bc, x[q], true);
    }
    add_scalar(d, std::pow(2.0, static_cast<double>(legs) / 2.0), "cz");
  }
  for (Port p : x) d.add_output(p);
  HamiltonianDiagram out;
  out.controlled = {std::move(d), ControlledKind::Matrix, h.m};
  out.discharged = discharge(out.controlled);
  return out;
}

Diagram pauli_string_diagram(const PauliString& p) {
  Diagram acc;
  for (Pauli op : p.ops) {
    Diagram f;
    switch (op) {
      case Pauli::I:
        f = identity(1);
        break;
      case Pauli::X:
        f = pauli_x();
        break;
      case Pauli::Z:
        f = green(kPi, 1, 1);
        break;
      case Pauli::Y: {
        const Diagram parts[] = {v_gate(), green(kPi, 1, 1), v_dagger()};
        f = compose_seq(parts);
        break;
      }
    }
    acc = compose_par(acc, f);
  }
  return acc;
}

ControlledDiagram build_diagonal_sum_diagram(const DiagonalFactorSum& ds,
                                             std::size_t qubit_cap) {
  check_cap(ds.m, qubit_cap);
  if (ds.terms.empty()) throw ArityError("diagonal sum without terms");
  Diagram d;
  Port ctrl = d.add_input();
  std::vector<Port> x;
  for (std::size_t q = 0; q < ds.m; ++q) x.push_back(d.add_input());
  auto branches = w_fan(d, ctrl, ds.terms.size(), WTree::LeftComb, "sum");
  for (std::size_t i = 0; i < ds.terms.size(); ++i) {
    const auto& term = ds.terms[i];
    if (term.labels.size() != ds.m || term.conj.size() != ds.m)
      throw ArityError("term " + std::to_string(i) + " has the wrong length");
    Port c = zbox_on(d, {branches[i]}, 1, term.alpha, "weight")[0];
    std::vector<std::size_t> active;
    for (std::size_t q = 0; q < ds.m; ++q)
      if (term.labels[q] != Complex(1.0, 0.0)) active.push_back(q);
    auto copies = copy(d, c, active.size(), "control");
    for (std::size_t r = 0; r < active.size(); ++r) {
      const std::size_t q = active[r];
      x[q] = apply_change(d, term.conj[q], x[q], false);
      auto data = copy(d, x[q], 2, "literal");
      x[q] = data[0];
      effect(d, and_gate(d, {copies[r], data[1]}), term.labels[q], "diag");
      x[q] = apply_change(d, term.conj[q], x[q], true);
    }
  }
  for (Port p : x) d.add_output(p);
  return {std::move(d), ControlledKind::Matrix, ds.m};
}

Matrix diagonal_sum_oracle(const DiagonalFactorSum& ds) {
  const Eigen::Index dim = Eigen::Index{1} << ds.m;
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& term : ds.terms) {
    Matrix diag = Matrix::Identity(1, 1), conj = Matrix::Identity(1, 1);
    for (std::size_t q = 0; q < ds.m; ++q) {
      Matrix dq = Matrix::Identity(2, 2);
      dq(1, 1) = term.labels[q];
      diag = Eigen::kroneckerProduct(diag, dq).eval();
      conj = Eigen::kroneckerProduct(conj, basis_change_matrix(term.conj[q]))
                 .eval();
    }
    sum += term.alpha * conj.adjoint() * diag * conj;
  }
  return sum;
}

CommutativityVerdict check_sum_commutativity(const PauliSum& h,
                                             std::span<const std::size_t> perm,
                                             double tol) {
  if (perm.size() != h.terms.size())
    throw ArityError("permutation length differs from the term count");
  PauliSum g = h;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= perm.size() || seen[perm[k]])
      throw ParameterError("not a permutation of the term indices");
    seen[perm[k]] = true;
    g.terms[k] = h.terms[perm[k]];
  }
  auto a = build_hamiltonian_diagram(h).controlled;
  auto b = build_hamiltonian_diagram(g).controlled;
  CommutativityVerdict v;
  v.discharged_residual =
      max_abs_diff(eval(discharge(a)), eval(discharge(b)));
  v.idle_residual = max_abs_diff(eval(idle(a)), eval(idle(b)));
  v.equal = v.discharged_residual <= tol && v.idle_residual <= tol;
  return v;
}

SchrodingerReport verify_schrodinger_linearity(
    const PauliSum& h, const Vector& psi0, const Vector& phi0, Complex a,
    Complex b, std::span<const double> t_grid, double dt) {
  const Matrix H = oracle_matrix(h);
  if (psi0.size() != H.rows() || phi0.size() != H.rows())
    throw ArityError("initial states do not match the Hamiltonian dimension");
  if (!(dt > 0.0)) throw ParameterError("dt must be positive");
  const double h_norm = operator_norm(H);
  const Complex minus_i(0.0, -1.0);
  auto chi = [&](double t, double& comb_res) {
    const Matrix U = matrix_exp(minus_i * t * H);
    const Vector psi = U * psi0, phi = U * phi0;
    Matrix e = eval(sum_normal_forms(psi, phi, a, b));
    const Vector direct = a * psi + b * phi;
    comb_res = std::max(comb_res, max_abs_diff(e, direct));
    return Vector(e.col(0));
  };
  SchrodingerReport r;
  r.ok = true;
  for (double t : t_grid) {
    const Vector c = chi(t, r.combination_residual);
    const Vector cp = chi(t + dt, r.combination_residual);
    const Vector cm = chi(t - dt, r.combination_residual);
    const Vector deriv = (cp - cm) / (2.0 * dt);
    const double res = (Complex(0.0, 1.0) * deriv - H * c).norm();
    const double bound = 1e-5 * h_norm * c.norm();
    r.times.push_back(t);
    r.residuals.push_back(res);
    r.bounds.push_back(bound);
    if (res > bound + 1e-12) r.ok = false;
  }
  if (r.combination_residual > 1e-9) r.ok = false;
  return r;
}

}  // namespace zxw
