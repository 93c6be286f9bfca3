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

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/// Tensor product of single-qubit Paulis; ops[0] is qubit 1, the most
/// significant factor.
struct PauliString {
  std::vector<Pauli> ops;

  /// Throws ParseError on letters outside IXYZ or an empty string.
  static PauliString parse(std::string_view s);
  std::string str() const;
  std::size_t size() const { return ops.size(); }
  bool is_identity() const;
  /// Number of non-identity factors.
  std::size_t weight() const;

  bool operator==(const PauliString&) const = default;
};

/// True when the two strings commute (even number of anticommuting sites).
bool commutes(const PauliString& p, const PauliString& q);

struct PauliTerm {
  Complex alpha{1.0, 0.0};
  PauliString string;
};

struct PauliSum {
  std::vector<PauliTerm> terms;
  std::size_t m = 0;

  bool has_real_coefficients(double tol = 0.0) const;
};

/// Parses the line format `COEFF STRING`. COEFF is `re`, `re+imj`, `re-imj`,
/// `imj` or `(re,im)`. `#` starts a comment. Errors carry the 1-based line.
PauliSum parse_pauli_sum(std::string_view text);

/// Writes a sum in the format read by parse_pauli_sum.
std::string format_pauli_sum(const PauliSum& h);

/// Parses one coefficient token; throws ParseError (line 0) on bad input.
Complex parse_coefficient(std::string_view token);

Matrix pauli_matrix(Pauli p);
/// Kronecker product of the factors.
Matrix oracle_matrix(const PauliString& p);
/// sum_i alpha_i P_i. Throws CapExceeded when m > qubit_cap.
Matrix oracle_matrix(const PauliSum& h, std::size_t qubit_cap = 12);

}  // namespace zxw
