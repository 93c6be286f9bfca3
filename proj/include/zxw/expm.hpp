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

#include <span>
#include <vector>

#include "zxw/circuit.hpp"
#include "zxw/controlled.hpp"
#include "zxw/pauli.hpp"

namespace zxw {

// All exponentials follow exp(-i H t / 2).

/// exp(A) for a square matrix.
Matrix matrix_exp(const Matrix& A);
/// exp(-i H t / 2).
Matrix expm_oracle(const Matrix& H, double t);
/// Largest singular value.
double operator_norm(const Matrix& A);

struct PhaseDistance {
  /// ||a - w b|| (operator norm) with w the unit phase of tr(b^H a).
  double distance = 0.0;
  Complex phase{1.0, 0.0};
};
PhaseDistance phase_aligned_distance(const Matrix& a, const Matrix& b);

/// A diagram in t together with the global phase it carries:
/// eval(diagram, t) = exp(i * phase(t)) * U(t).
struct PhasedDiagram {
  Diagram diagram;
  double phase_rate = 0.0;
  double phase_offset = 0.0;

  double phase(double t) const { return phase_offset + phase_rate * t; }
  /// U(t) with the recorded phase divided out.
  Matrix unitary(double t, std::size_t qubit_cap = 12) const;
  /// Concrete diagram at t with the phase compensated by a scalar node, so
  /// eval is exactly U(t).
  Diagram at(double t) const;
};

/// Gadget for exp(-i theta P / 2) with theta = theta_coeff * t. The diagram
/// carries the phase exp(i theta / 2). ParameterError for all-identity P.
PhasedDiagram pauli_gadget(const PauliString& p, double theta_coeff);

/// Sequential product of gadgets; the first factor acts first.
PhasedDiagram compose_phased(std::span<const PhasedDiagram> parts);

/// Product of the term gadgets. Requires pairwise commuting terms (the error
/// names the first offending pair) and real coefficients.
PhasedDiagram commuting_exponential(const PauliSum& h);

struct DerivativeReport {
  /// Central differences at h = 1e-3 and 5e-4 and their Richardson blend.
  Matrix coarse, fine, richardson;
  double err_coarse = 0.0;
  double err_fine = 0.0;
  double err_richardson = 0.0;
  /// log2(err_coarse / err_fine); NaN when both errors vanish.
  double slope = 0.0;
  bool ok = false;
};

/// Differentiates U(t) at t = 0 and compares with (-i/2) h_ref.
DerivativeReport derivative_at_zero(const PhasedDiagram& d,
                                    const Matrix& h_ref, double tol = 1e-6);

/// Discharged sum over k = 0..order of (-i t / 2)^k / k! times the k-fold
/// controlled product of the Hamiltonian diagram.
Diagram taylor_diagram(const PauliSum& h, std::size_t order, double t,
                       std::size_t qubit_cap = 12);
/// The partial sum as a matrix, for comparison.
Matrix taylor_oracle(const Matrix& H, std::size_t order, double t);

/// n repetitions of the gadget product at coefficients alpha_k / n.
PhasedDiagram trotter_phased(const PauliSum& h, std::size_t steps);
/// trotter_phased at t with the phase compensated, so eval equals
/// (prod_k exp(-i H_k t / 2n))^n.
Diagram trotter_diagram(const PauliSum& h, std::size_t steps, double t);
/// The same product as a matrix.
Matrix trotter_oracle(const PauliSum& h, std::size_t steps, double t);
/// Gate-level form: basis change, CNOT ladder, RZ, ladder, basis undo.
Circuit trotter_circuit(const PauliSum& h, std::size_t steps, double t);

struct CayleyCoeffs {
  std::vector<double> times;
  /// coeffs[s][k] multiplies H^k at times[s].
  std::vector<std::vector<Complex>> coeffs;
};

/// Putzer coefficients of exp(-i H t / 2) in powers H^0..H^{d-1}.
/// Repeated eigenvalues use confluent divided differences.
CayleyCoeffs putzer_coefficients(const Matrix& H, std::span<const double> ts);
std::vector<Complex> putzer_at(const Matrix& H, double t);
/// sum_k c_k H^k.
Matrix cayley_reconstruct(const Matrix& H, const std::vector<Complex>& c);

/// Discharged controlled sum of powers of the Hamiltonian diagram weighted by
/// the Putzer coefficients. CapExceeded for m > 2.
Diagram cayley_hamilton_diagram(const PauliSum& h, double t);

/// Rotation circuit for exp(-i (aX + bZ) t / 2) on one qubit (real a, b).
/// ParameterError when a = b = 0.
Circuit extract_axz_circuit(double a, double b, double t);

/// s0, s1 with exp(-i (aX + bZ) t / 2) = s0 I + s1 (aX + bZ), from Putzer.
std::pair<Complex, Complex> axz_coefficients(double a, double b, double t);

struct AnticommuteVerdict {
  bool equal = false;
  Complex scalar{0.0, 0.0};
  double residual = 0.0;
};

/// Checks Q Phi_P(theta) = Phi_P(-theta) Q up to a scalar by eval.
/// ParameterError when p and q commute.
AnticommuteVerdict check_anticommuting_gadgets(const PauliString& p,
                                               const PauliString& q,
                                               double theta = 0.7,
                                               double tol = 1e-9);

}  // namespace zxw
