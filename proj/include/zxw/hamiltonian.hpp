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

#include "zxw/controlled.hpp"
#include "zxw/pauli.hpp"

namespace zxw {

/// Single-qubit conjugations c with c^dagger Z c in {Z, X, Y}.
enum class BasisChange { I, H, V };

/// The change of basis taking Z to the given Pauli (I for I and Z).
BasisChange basis_change_for(Pauli p);
/// 2x2 matrix of the conjugation.
Matrix basis_change_matrix(BasisChange c);

struct HamiltonianDiagram {
  /// Control-1 gives H, control-0 the identity.
  ControlledDiagram controlled;
  Diagram discharged;
};

/// Weighted W-fan sum of controlled Pauli strings. A term touches qubit j
/// only when its j-th letter is not I. Throws CapExceeded when m > cap.
HamiltonianDiagram build_hamiltonian_diagram(const PauliSum& h,
                                             std::size_t qubit_cap = 12);

/// The Pauli string as a plain operator diagram (exact matrix).
Diagram pauli_string_diagram(const PauliString& p);

struct DiagonalTerm {
  Complex alpha{1.0, 0.0};
  /// a_ij per qubit; the factor on qubit j is diag(1, a_ij).
  std::vector<Complex> labels;
  /// Conjugation per qubit.
  std::vector<BasisChange> conj;
};

struct DiagonalFactorSum {
  std::vector<DiagonalTerm> terms;
  std::size_t m = 0;
};

/// Discharges to sum_i alpha_i C_i^dagger (x)_j diag(1, a_ij) C_i.
ControlledDiagram build_diagonal_sum_diagram(const DiagonalFactorSum& d,
                                             std::size_t qubit_cap = 12);
Matrix diagonal_sum_oracle(const DiagonalFactorSum& d);

struct CommutativityVerdict {
  bool equal = false;
  double discharged_residual = 0.0;
  double idle_residual = 0.0;
};

/// Builds the diagram for h and for h with its terms permuted by `perm`
/// (new term k is old term perm[k]) and compares both plug values.
CommutativityVerdict check_sum_commutativity(const PauliSum& h,
                                             std::span<const std::size_t> perm,
                                             double tol = 1e-9);

struct SchrodingerReport {
  std::vector<double> times;
  /// ||i dchi/dt - H chi|| at each time (central difference).
  std::vector<double> residuals;
  /// 1e-5 * ||H|| * ||chi|| at each time.
  std::vector<double> bounds;
  /// max over times of |eval(diagram) - (a psi + b phi)|.
  double combination_residual = 0.0;
  bool ok = false;
};

/// Evolves psi0 and phi0 under i d/dt psi = H psi with the exact exponential,
/// forms a psi + b phi as one normal-form diagram and checks that the
/// combination still solves the equation. ArityError on dimension mismatch.
SchrodingerReport verify_schrodinger_linearity(
    const PauliSum& h, const Vector& psi0, const Vector& phi0, Complex a,
    Complex b, std::span<const double> t_grid, double dt = 1e-3);

}  // namespace zxw
