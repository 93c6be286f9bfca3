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

#include "zxw/expm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "build_util.hpp"
#include "zxw/eval.hpp"
#include "zxw/generators.hpp"
#include "zxw/hamiltonian.hpp"

namespace zxw {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Port apply_change(Diagram& d, Pauli p, Port in, bool undo) {
  switch (p) {
    case Pauli::X:
      return detail::apply_hadamard(d, in, "basis");
    case Pauli::Y: {
      const Port ends[] = {in};
      return d.splice(undo ? v_dagger() : v_gate(), ends)[0];
    }
    case Pauli::I:
    case Pauli::Z:
      break;
  }
  return in;
}

void require_real(const PauliSum& h, const char* who) {
  for (std::size_t i = 0; i < h.terms.size(); ++i)
    if (h.terms[i].alpha.imag() != 0.0)
      throw ParameterError(std::string(who) + ": term " + std::to_string(i) +
                           " has a non-real coefficient");
}

// Terms as gadgets with coefficient alpha * scale; identity terms only move
// the phase.
std::vector<PhasedDiagram> term_gadgets(const PauliSum& h, double scale) {
  std::vector<PhasedDiagram> out;
  for (const auto& term : h.terms) {
    const double c = term.alpha.real() * scale;
    if (term.string.is_identity()) {
      out.push_back({identity(h.m), c / 2.0, 0.0});
    } else {
      out.push_back(pauli_gadget(term.string, c));
    }
  }
  return out;
}

ControlledDiagram power_of(const ControlledDiagram& c, std::size_t k) {
  if (k == 0) return controlled_identity(c.m);
  std::vector<ControlledDiagram> parts(k, c);
  return controlled_product(parts);
}

Diagram weighted_powers(const PauliSum& h, const std::vector<Complex>& w,
                        std::size_t qubit_cap) {
  auto ch = build_hamiltonian_diagram(h, qubit_cap).controlled;
  std::vector<ControlledDiagram> powers;
  for (std::size_t k = 0; k < w.size(); ++k) powers.push_back(power_of(ch, k));
  return discharge(controlled_sum_matrices(powers, w));
}

// Groups numerically equal eigenvalues and makes each group contiguous.
std::vector<Complex> clustered(std::vector<Complex> ev) {
  double scale = 1.0;
  for (Complex z : ev) scale = std::max(scale, std::abs(z));
  const double tol = 1e-7 * scale;
  std::vector<std::vector<Complex>> groups;
  for (Complex z : ev) {
    bool placed = false;
    for (auto& g : groups)
      if (std::abs(g.front() - z) <= tol) {
        g.push_back(z);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({z});
  }
  std::vector<Complex> out;
  for (const auto& g : groups) {
    Complex mean = 0.0;
    for (Complex z : g) mean += z;
    mean /= static_cast<double>(g.size());
    out.insert(out.end(), g.size(), mean);
  }
  return out;
}

}  // namespace

Matrix matrix_exp(const Matrix& A) { return A.exp(); }

Matrix expm_oracle(const Matrix& H, double t) {
  return matrix_exp(Complex(0.0, -t / 2.0) * H);
}

double operator_norm(const Matrix& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(A);
  return svd.singularValues()(0);
}

PhaseDistance phase_aligned_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ArityError("phase_aligned_distance: shape mismatch");
  const Complex overlap = (b.adjoint() * a).trace();
  PhaseDistance r;
  if (std::abs(overlap) > 0.0) r.phase = overlap / std::abs(overlap);
  r.distance = operator_norm(a - r.phase * b);
  return r;
}

Matrix PhasedDiagram::unitary(double t, std::size_t qubit_cap) const {
  return std::exp(Complex(0.0, -phase(t))) * eval_at(diagram, t, qubit_cap);
}

Diagram PhasedDiagram::at(double t) const {
  Diagram d = resolve_time(diagram, t);
  detail::add_scalar(d, std::exp(Complex(0.0, -phase(t))), "phase");
  return d;
}

PhasedDiagram pauli_gadget(const PauliString& p, double theta_coeff) {
  if (p.is_identity())
    throw ParameterError("pauli_gadget: all-identity string is a global phase");
  Diagram d;
  std::vector<Port> x;
  for (std::size_t q = 0; q < p.size(); ++q) x.push_back(d.add_input());
  std::vector<Port> legs;
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (p.ops[q] == Pauli::I) continue;
    x[q] = apply_change(d, p.ops[q], x[q], false);
    auto c = detail::copy(d, x[q], 2, "gadget");
    x[q] = c[0];
    legs.push_back(c[1]);
  }
  NodeId phase = d.add_node(NodeKind::zbox_t(1.0, theta_coeff), 0, 1, "phase");
  legs.push_back({phase, 0});
  detail::pink_node(d, legs, 0, false, "parity");
  for (std::size_t q = 0; q < p.size(); ++q)
    if (p.ops[q] != Pauli::I) x[q] = apply_change(d, p.ops[q], x[q], true);
  for (Port o : x) d.add_output(o);
  return {std::move(d), theta_coeff / 2.0, 0.0};
}

PhasedDiagram compose_phased(std::span<const PhasedDiagram> parts) {
  if (parts.empty()) throw ArityError("compose_phased: nothing to compose");
  PhasedDiagram acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc.diagram = compose_seq(acc.diagram, parts[i].diagram);
    acc.phase_rate += parts[i].phase_rate;
    acc.phase_offset += parts[i].phase_offset;
  }
  return acc;
}

PhasedDiagram commuting_exponential(const PauliSum& h) {
  require_real(h, "commuting_exponential");
  for (std::size_t i = 0; i < h.terms.size(); ++i)
    for (std::size_t j = i + 1; j < h.terms.size(); ++j)
      if (!commutes(h.terms[i].string, h.terms[j].string))
        throw ParameterError("non-commuting terms " + std::to_string(i) +
                             " (" + h.terms[i].string.str() + ") and " +
                             std::to_string(j) + " (" +
                             h.terms[j].string.str() + ")");
  return compose_phased(term_gadgets(h, 1.0));
}

DerivativeReport derivative_at_zero(const PhasedDiagram& d,
                                    const Matrix& h_ref, double tol) {
  const double h1 = 1e-3, h2 = 5e-4;
  auto central = [&](double h) {
    return Matrix((d.unitary(h) - d.unitary(-h)) / (2.0 * h));
  };
  const Matrix target = Complex(0.0, -0.5) * h_ref;
  DerivativeReport r;
  r.coarse = central(h1);
  r.fine = central(h2);
  r.richardson = (4.0 * r.fine - r.coarse) / 3.0;
  r.err_coarse = max_abs_diff(r.coarse, target);
  r.err_fine = max_abs_diff(r.fine, target);
  r.err_richardson = max_abs_diff(r.richardson, target);
  r.slope = r.err_fine > 0.0 && r.err_coarse > 0.0
                ? std::log2(r.err_coarse / r.err_fine)
                : std::numeric_limits<double>::quiet_NaN();
  const double scale = std::max(1.0, operator_norm(h_ref));
  r.ok = r.err_richardson <= tol * scale;
  return r;
}

Diagram taylor_diagram(const PauliSum& h, std::size_t order, double t,
                       std::size_t qubit_cap) {
  std::vector<Complex> w;
  Complex term = 1.0;
  for (std::size_t k = 0; k <= order; ++k) {
    w.push_back(term);
    term *= Complex(0.0, -t / 2.0) / static_cast<double>(k + 1);
  }
  return weighted_powers(h, w, qubit_cap);
}

Matrix taylor_oracle(const Matrix& H, std::size_t order, double t) {
  Matrix sum = Matrix::Identity(H.rows(), H.cols());
  Matrix power = sum;
  Complex w = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    power = power * H;
    w *= Complex(0.0, -t / 2.0) / static_cast<double>(k);
    sum += w * power;
  }
  return sum;
}

PhasedDiagram trotter_phased(const PauliSum& h, std::size_t steps) {
  if (steps == 0) throw ParameterError("trotter: steps must be >= 1");
  require_real(h, "trotter");
  auto step = term_gadgets(h, 1.0 / static_cast<double>(steps));
  std::vector<PhasedDiagram> all;
  for (std::size_t s = 0; s < steps; ++s)
    all.insert(all.end(), step.begin(), step.end());
  return compose_phased(all);
}

Diagram trotter_diagram(const PauliSum& h, std::size_t steps, double t) {
  return trotter_phased(h, steps).at(t);
}

Matrix trotter_oracle(const PauliSum& h, std::size_t steps, double t) {
  if (steps == 0) throw ParameterError("trotter: steps must be >= 1");
  const Eigen::Index dim = Eigen::Index{1} << h.m;
  Matrix step = Matrix::Identity(dim, dim);
  for (const auto& term : h.terms)
    step = expm_oracle(term.alpha * oracle_matrix(term.string),
                       t / static_cast<double>(steps)) *
           step;
  Matrix u = Matrix::Identity(dim, dim);
  for (std::size_t s = 0; s < steps; ++s) u = step * u;
  return u;
}

Circuit trotter_circuit(const PauliSum& h, std::size_t steps, double t) {
  if (steps == 0) throw ParameterError("trotter: steps must be >= 1");
  require_real(h, "trotter_circuit");
  Circuit c;
  c.n_qubits = h.m;
  const double dt = t / static_cast<double>(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    for (const auto& term : h.terms) {
      const double theta = term.alpha.real() * dt;
      if (term.string.is_identity()) {
        c.global_phase -= theta / 2.0;
        continue;
      }
      std::vector<std::size_t> support;
      for (std::size_t q = 0; q < h.m; ++q)
        if (term.string.ops[q] != Pauli::I) support.push_back(q);
      auto basis = [&](bool undo) {
        for (std::size_t q : support) {
          if (term.string.ops[q] == Pauli::X) c.add(GateKind::H, {q});
          if (term.string.ops[q] == Pauli::Y)
            c.add(GateKind::RX, {q}, undo ? -kPi / 2 : kPi / 2);
        }
      };
      basis(false);
      for (std::size_t k = 0; k + 1 < support.size(); ++k)
        c.add(GateKind::CNOT, {support[k], support[k + 1]});
      c.add(GateKind::RZ, {support.back()}, theta);
      for (std::size_t k = support.size() - 1; k-- > 0;)
        c.add(GateKind::CNOT, {support[k], support[k + 1]});
      basis(true);
    }
  }
  return c;
}

std::vector<Complex> putzer_at(const Matrix& H, double t) {
  if (H.rows() != H.cols() || H.rows() == 0)
    throw ArityError("putzer: expected a non-empty square matrix");
  const Eigen::Index d = H.rows();
  const Matrix A = Complex(0.0, -0.5) * H;
  Eigen::ComplexEigenSolver<Matrix> es(A, false);
  if (es.info() != Eigen::Success)
    throw Error("putzer: eigenvalue solve failed");
  std::vector<Complex> lam(d);
  for (Eigen::Index k = 0; k < d; ++k) lam[std::size_t(k)] = es.eigenvalues()(k);
  lam = clustered(std::move(lam));

  // dd[i][j]: divided difference of exp(z t) on lam[i..j].
  const std::size_t n = lam.size();
  std::vector<std::vector<Complex>> dd(n, std::vector<Complex>(n));
  for (std::size_t len = 0; len < n; ++len) {
    for (std::size_t i = 0; i + len < n; ++i) {
      const std::size_t j = i + len;
      if (lam[i] == lam[j]) {
        double f = 1.0;
        for (std::size_t k = 2; k <= len; ++k) f *= static_cast<double>(k);
        dd[i][j] = std::pow(t, double(len)) * std::exp(lam[i] * t) / f;
      } else {
        dd[i][j] = (dd[i + 1][j] - dd[i][j - 1]) / (lam[j] - lam[i]);
      }
    }
  }

  // P_k = prod_{j<k} (A - lam_j) as a polynomial in H.
  std::vector<Complex> poly{1.0};
  std::vector<Complex> c(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex r = dd[0][k];
    for (std::size_t p = 0; p < poly.size(); ++p) c[p] += r * poly[p];
    std::vector<Complex> next(poly.size() + 1, 0.0);
    for (std::size_t p = 0; p < poly.size(); ++p) {
      next[p] -= lam[k] * poly[p];
      next[p + 1] += Complex(0.0, -0.5) * poly[p];
    }
    poly = std::move(next);
  }
  return c;
}

CayleyCoeffs putzer_coefficients(const Matrix& H, std::span<const double> ts) {
  CayleyCoeffs out;
  for (double t : ts) {
    out.times.push_back(t);
    out.coeffs.push_back(putzer_at(H, t));
  }
  return out;
}

Matrix cayley_reconstruct(const Matrix& H, const std::vector<Complex>& c) {
  Matrix sum = Matrix::Zero(H.rows(), H.cols());
  Matrix power = Matrix::Identity(H.rows(), H.cols());
  for (Complex ck : c) {
    sum += ck * power;
    power = power * H;
  }
  return sum;
}

Diagram cayley_hamilton_diagram(const PauliSum& h, double t) {
  if (h.m > 2)
    throw CapExceeded("cayley_hamilton_diagram: limited to 2 qubits, got " +
                      std::to_string(h.m));
  return weighted_powers(h, putzer_at(oracle_matrix(h), t), 12);
}

std::pair<Complex, Complex> axz_coefficients(double a, double b, double t) {
  Matrix H = a * pauli_matrix(Pauli::X) + b * pauli_matrix(Pauli::Z);
  auto c = putzer_at(H, t);
  return {c[0], c[1]};
}

Circuit extract_axz_circuit(double a, double b, double t) {
  if (a == 0.0 && b == 0.0)
    throw ParameterError("extract_axz_circuit: a and b are both zero");
  Circuit c;
  c.n_qubits = 1;
  if (a == 0.0) {
    c.add(GateKind::RZ, {0}, b * t);
    return c;
  }
  if (b == 0.0) {
    c.add(GateKind::RX, {0}, a * t);
    return c;
  }
  // Rotation by lambda*t about the axis (a, 0, b)/lambda.
  const double beta = std::atan2(a, b);
  const double phi = std::hypot(a, b) * t;
  c.add(GateKind::RZ, {0}, -kPi / 2);
  c.add(GateKind::RX, {0}, -beta);
  c.add(GateKind::RZ, {0}, phi);
  c.add(GateKind::RX, {0}, beta);
  c.add(GateKind::RZ, {0}, kPi / 2);
  return c;
}

AnticommuteVerdict check_anticommuting_gadgets(const PauliString& p,
                                               const PauliString& q,
                                               double theta, double tol) {
  if (commutes(p, q))
    throw ParameterError("check_anticommuting_gadgets: " + p.str() + " and " +
                         q.str() + " commute");
  const PhasedDiagram g = pauli_gadget(p, 1.0);
  const Diagram qd = pauli_string_diagram(q);
  const Diagram lhs = compose_seq(g.at(theta), qd);
  const Diagram rhs = compose_seq(qd, g.at(-theta));
  auto eq = equal_up_to_scalar(eval(lhs), eval(rhs), tol);
  return {eq.equal, eq.scalar, eq.residual};
}

}  // namespace zxw
