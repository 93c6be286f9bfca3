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

#include <optional>

#include "zxw/diagram.hpp"

namespace zxw {

enum class ContractionOrder {
  /// Cheapest pair first (smallest growth of the intermediate tensor).
  Greedy,
  /// Folds tensors into one accumulator in node order. Only meant for
  /// cross-checking the greedy order on small diagrams.
  Sequential,
};

struct EvalOptions {
  /// Value for the time parameter of symbolic labels.
  std::optional<double> t;
  /// Maximum number of boundary wires (inputs + outputs).
  std::size_t qubit_cap = 12;
  /// Largest intermediate tensor rank allowed during contraction.
  std::size_t max_rank = 24;
  ContractionOrder order = ContractionOrder::Greedy;
};

/// Contracts `d` to its 2^outputs x 2^inputs matrix. The first wire is the
/// most significant bit of the row/column index.
///
/// Throws CapExceeded when the boundary or an intermediate tensor is too
/// large, ParameterError for symbolic diagrams without `t`.
Matrix eval(const Diagram& d, const EvalOptions& opts = {});

/// eval at a given time.
Matrix eval_at(const Diagram& d, double t, std::size_t qubit_cap = 12);

struct ScalarEquivalence {
  bool equal = false;
  /// equal with scalar 1.
  bool exact = false;
  /// lambda with a = lambda * b.
  Complex scalar{0.0, 0.0};
  /// max |a - lambda * b|.
  double residual = 0.0;
};

/// Finds lambda from the largest-magnitude entry of `b` and tests
/// a = lambda * b entrywise. Throws ArityError on a shape mismatch.
ScalarEquivalence equal_up_to_scalar(const Matrix& a, const Matrix& b,
                                     double tol = kEvalTolerance);

/// max |a - b|; ArityError on a shape mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Feeds the basis state |bit> into input `wire`.
Diagram plug_basis(const Diagram& d, std::size_t wire, int bit);

/// Caps output `wire` with the basis effect <bit|.
Diagram plug_output(const Diagram& d, std::size_t wire, int bit);

/// Replaces every symbolic label by its value at `t`.
Diagram resolve_time(const Diagram& d, double t);

}  // namespace zxw
