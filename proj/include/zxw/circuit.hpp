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

#include <string>
#include <string_view>
#include <vector>

#include "zxw/types.hpp"

namespace zxw {

/// Gate set of the extraction output.
///
/// RZ(theta) = exp(-i theta Z / 2), RX(theta) = exp(-i theta X / 2),
/// PHASE(gamma) = diag(1, exp(i gamma)). CNOT lists control then target.
enum class GateKind { H, RZ, RX, CNOT, CZ, PHASE };

std::string to_string(GateKind g);

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<std::size_t> qubits;
  double angle = 0.0;
};

/// Gates in time order on qubits 0..n-1 (qubit 0 most significant).
struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<Gate> gates;
  /// The circuit implements exp(i * global_phase) * (product of gates).
  double global_phase = 0.0;

  void add(GateKind kind, std::vector<std::size_t> qubits, double angle = 0.0);
  void append(const Circuit& other);
  /// Dense unitary including the global phase.
  Matrix unitary() const;
  /// One gate per line, `GATE q[,q] [angle]`; the phase as a `#` comment.
  std::string to_text() const;
};

/// Reads the text form back. Throws ParseError with line numbers.
Circuit parse_circuit(std::string_view text, std::size_t n_qubits);

/// 2x2 or 4x4 matrix of a single gate.
Matrix gate_matrix(const Gate& g);

}  // namespace zxw
