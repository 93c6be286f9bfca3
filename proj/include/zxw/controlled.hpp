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
#include <string>
#include <vector>

#include "zxw/diagram.hpp"

namespace zxw {

enum class ControlledKind { Matrix, State };

/// A diagram with the control as input 0.
///
/// Matrix case: inputs [control, data_1..data_m], outputs [data_1..data_m].
/// State case: inputs [control], outputs [q_1..q_m]. Feeding |0> into the
/// control gives the identity (or |0..0>), feeding |1> gives the target.
struct ControlledDiagram {
  Diagram diagram;
  ControlledKind kind = ControlledKind::Matrix;
  std::size_t m = 0;
};

/// Elementary matrices acting on basis indices (row i is the basis state |i>,
/// first qubit most significant).
struct ElementaryMatrixSpec {
  enum class Kind { RowMult, RowAdd, RowSwitch };
  Kind kind = Kind::RowMult;
  std::size_t i = 0;
  std::size_t j = 0;
  Complex a{1.0, 0.0};

  /// Row i scaled by a.
  static ElementaryMatrixSpec row_mult(std::size_t i, Complex a);
  /// Row i += a * row j, i.e. I + a|i><j|.
  static ElementaryMatrixSpec row_add(std::size_t i, std::size_t j, Complex a);
  /// Rows i and j exchanged.
  static ElementaryMatrixSpec row_switch(std::size_t i, std::size_t j);

  /// Dense 2^m x 2^m matrix.
  Matrix matrix(std::size_t m) const;
  std::string describe() const;
};

/// Qubit count of a 2^m x 2^m matrix; ArityError otherwise.
std::size_t qubits_of_square(const Matrix& M);

/// Controlled elementary matrix built from And boxes over the index bits.
/// Throws ParameterError for out-of-range or coinciding indices.
ControlledDiagram controlled_elementary(const ElementaryMatrixSpec& spec,
                                        std::size_t m);

/// M = E_1 E_2 ... E_k. Gauss-Jordan with partial pivoting (ties go to the
/// lowest row); a singular M ends with row_mult(_, 0) factors.
std::vector<ElementaryMatrixSpec> decompose_elementary(const Matrix& M);

/// Product of the specs in order.
Matrix product_of(std::span<const ElementaryMatrixSpec> specs, std::size_t m);

/// Control discards itself; data wires pass through.
ControlledDiagram controlled_identity(std::size_t m);

ControlledDiagram controlled_matrix(const Matrix& M);

/// Discharges to M_1 M_2 ... M_k (the last factor acts first).
ControlledDiagram controlled_product(std::span<const ControlledDiagram> ctrls);

/// Discharges to sum_i c_i M_i.
ControlledDiagram controlled_sum_matrices(
    std::span<const ControlledDiagram> ctrls, std::span<const Complex> coeffs);

/// W fan over the 2^m amplitudes. v must have length 2^m with m >= 1.
ControlledDiagram controlled_state_normal_form(const Vector& v);

/// Discharges to sum_i c_i v_i.
ControlledDiagram controlled_sum_states(
    std::span<const ControlledDiagram> ctrls, std::span<const Complex> coeffs);

/// The discharged normal form of a*v1 + b*v2 (labels combined per branch).
Diagram sum_normal_forms(const Vector& v1, const Vector& v2, Complex a,
                         Complex b);

/// Control fed with |1>.
Diagram discharge(const ControlledDiagram& c);
/// Control fed with |0>.
Diagram idle(const ControlledDiagram& c);

struct ContractCheck {
  double idle_residual = 0.0;
  double discharge_residual = 0.0;
  bool ok = false;
};

/// Checks both plug conditions against `target` (a matrix, or a column
/// vector in the state case).
ContractCheck check_contract(const ControlledDiagram& c, const Matrix& target,
                             double tol = 1e-9);

}  // namespace zxw
