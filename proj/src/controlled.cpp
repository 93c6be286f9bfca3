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

#include "zxw/controlled.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "build_util.hpp"
#include "zxw/eval.hpp"

namespace zxw {
namespace {

using detail::and_gate;
using detail::apply_not;
using detail::apply_triangle;
using detail::apply_xor;
using detail::copy;
using detail::effect;
using detail::w_fan;
using detail::w_merge;
using detail::zbox_on;

int bit_at(std::size_t index, std::size_t m, std::size_t q) {
  return static_cast<int>((index >> (m - 1 - q)) & 1u);
}

// Copies wire q and returns a literal that is 1 exactly when x_q == bit.
Port literal(Diagram& d, std::vector<Port>& x, std::size_t q, int bit) {
  auto c = copy(d, x[q], 2, "literal");
  x[q] = c[0];
  return bit ? c[1] : apply_not(d, c[1]);
}

// Starts a controlled matrix diagram: returns control and data ports.
struct Frame {
  Diagram d;
  Port ctrl;
  std::vector<Port> x;
};

Frame open_frame(std::size_t m) {
  Frame f;
  f.ctrl = f.d.add_input();
  for (std::size_t q = 0; q < m; ++q) f.x.push_back(f.d.add_input());
  return f;
}

ControlledDiagram close_frame(Frame f, std::size_t m) {
  for (Port p : f.x) f.d.add_output(p);
  return {std::move(f.d), ControlledKind::Matrix, m};
}

// x_k ^= [x_t == i_t] for every k in `targets`. An involution.
void apply_q(Diagram& d, std::vector<Port>& x, std::size_t t, int it,
             const std::vector<std::size_t>& targets) {
  if (targets.empty()) return;
  Port lit = literal(d, x, t, it);
  auto fan = copy(d, lit, targets.size(), "fanout");
  for (std::size_t r = 0; r < targets.size(); ++r)
    x[targets[r]] = apply_xor(d, x[targets[r]], fan[r]);
}

void check_index(std::size_t idx, std::size_t m) {
  if (idx >= (std::size_t{1} << m))
    throw ParameterError("elementary matrix index " + std::to_string(idx) +
                         " out of range for " + std::to_string(m) + " qubits");
}

void check_same_m(std::span<const ControlledDiagram> ctrls,
                  ControlledKind kind) {
  for (const auto& c : ctrls) {
    if (c.kind != kind)
      throw ArityError("controlled diagrams of mixed kinds");
    if (c.m != ctrls.front().m)
      throw ArityError("controlled diagrams act on different qubit counts");
  }
}

bool near_zero(Complex z, double eps) { return std::abs(z) <= eps; }

}  // namespace

ElementaryMatrixSpec ElementaryMatrixSpec::row_mult(std::size_t i, Complex a) {
  return {Kind::RowMult, i, i, a};
}

ElementaryMatrixSpec ElementaryMatrixSpec::row_add(std::size_t i,
                                                   std::size_t j, Complex a) {
  return {Kind::RowAdd, i, j, a};
}

ElementaryMatrixSpec ElementaryMatrixSpec::row_switch(std::size_t i,
                                                      std::size_t j) {
  return {Kind::RowSwitch, i, j, 1.0};
}

Matrix ElementaryMatrixSpec::matrix(std::size_t m) const {
  const Eigen::Index n = Eigen::Index{1} << m;
  check_index(i, m);
  check_index(j, m);
  Matrix e = Matrix::Identity(n, n);
  const auto ii = static_cast<Eigen::Index>(i);
  const auto jj = static_cast<Eigen::Index>(j);
  switch (kind) {
    case Kind::RowMult:
      e(ii, ii) = a;
      break;
    case Kind::RowAdd:
      e(ii, jj) += a;
      break;
    case Kind::RowSwitch:
      e(ii, ii) = e(jj, jj) = 0.0;
      e(ii, jj) = e(jj, ii) = 1.0;
      break;
  }
  return e;
}

std::string ElementaryMatrixSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::RowMult:
      os << "row_mult(" << i << ", " << a << ")";
      break;
    case Kind::RowAdd:
      os << "row_add(" << i << ", " << j << ", " << a << ")";
      break;
    case Kind::RowSwitch:
      os << "row_switch(" << i << ", " << j << ")";
      break;
  }
  return os.str();
}

std::size_t qubits_of_square(const Matrix& M) {
  if (M.rows() != M.cols() || M.rows() < 2 ||
      !std::has_single_bit(static_cast<std::size_t>(M.rows())))
    throw ArityError("expected a 2^m x 2^m matrix with m >= 1, got " +
                     std::to_string(M.rows()) + "x" +
                     std::to_string(M.cols()));
  return static_cast<std::size_t>(std::countr_zero(
      static_cast<std::size_t>(M.rows())));
}

ControlledDiagram controlled_elementary(const ElementaryMatrixSpec& spec,
                                        std::size_t m) {
  using Kind = ElementaryMatrixSpec::Kind;
  if (m == 0) throw ParameterError("controlled_elementary: m must be >= 1");
  check_index(spec.i, m);
  check_index(spec.j, m);
  if (spec.kind != Kind::RowMult && spec.i == spec.j)
    throw ParameterError("controlled_elementary: i and j must differ");

  Frame f = open_frame(m);
  Diagram& d = f.d;
  if (spec.kind == Kind::RowMult) {
    std::vector<Port> ins{f.ctrl};
    for (std::size_t q = 0; q < m; ++q)
      ins.push_back(literal(d, f.x, q, bit_at(spec.i, m, q)));
    effect(d, and_gate(d, ins), spec.a, "row_mult");
    return close_frame(std::move(f), m);
  }

  // Reduce to a single-qubit action on qubit t, where i and j first differ.
  std::vector<std::size_t> diff;
  for (std::size_t q = 0; q < m; ++q)
    if (bit_at(spec.i, m, q) != bit_at(spec.j, m, q)) diff.push_back(q);
  const std::size_t t = diff.front();
  const int it = bit_at(spec.i, m, t);
  const int jt = bit_at(spec.j, m, t);
  const std::vector<std::size_t> rest(diff.begin() + 1, diff.end());

  apply_q(d, f.x, t, it, rest);
  std::vector<Port> ins{f.ctrl};
  for (std::size_t q = 0; q < m; ++q)
    if (q != t) ins.push_back(literal(d, f.x, q, bit_at(spec.j, m, q)));
  Port fl = and_gate(d, ins);

  if (spec.kind == Kind::RowSwitch) {
    f.x[t] = apply_xor(d, f.x[t], fl);
  } else {
    // Controlled [[1,a],[0,1]] on qubit t, conjugated by X when j_t = 0.
    if (jt == 0) f.x[t] = apply_not(d, f.x[t]);
    NodeId w = d.add_node(NodeKind::w(), 1, 2, "row_add");
    d.link(f.x[t], {w, 0});
    f.x[t] = {w, 1};
    Port g = apply_triangle(d, fl, 1.0, "row_add");
    zbox_on(d, {Port{w, 2}, g}, 0, spec.a, "row_add");
    if (jt == 0) f.x[t] = apply_not(d, f.x[t]);
  }
  apply_q(d, f.x, t, it, rest);
  return close_frame(std::move(f), m);
}

Matrix product_of(std::span<const ElementaryMatrixSpec> specs, std::size_t m) {
  const Eigen::Index n = Eigen::Index{1} << m;
  Matrix p = Matrix::Identity(n, n);
  for (const auto& s : specs) p = p * s.matrix(m);
  return p;
}

std::vector<ElementaryMatrixSpec> decompose_elementary(const Matrix& M) {
  using Spec = ElementaryMatrixSpec;
  const std::size_t m = qubits_of_square(M);
  const Eigen::Index n = M.rows();
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  const double eps = 1e-12 * scale;

  Matrix A = M;
  std::vector<Spec> row_ops;  // applied on the left, in order
  std::vector<Spec> col_ops;  // applied on the right, in order
  std::vector<Eigen::Index> pivot_col;

  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < n; ++c) {
    Eigen::Index p = r;
    for (Eigen::Index q = r + 1; q < n; ++q)
      if (std::abs(A(q, c)) > std::abs(A(p, c))) p = q;
    if (std::abs(A(p, c)) <= eps) {
      A.block(r, c, n - r, 1).setZero();
      continue;
    }
    if (p != r) {
      A.row(p).swap(A.row(r));
      row_ops.push_back(Spec::row_switch(std::size_t(r), std::size_t(p)));
    }
    const Complex piv = A(r, c);
    if (piv != Complex(1.0, 0.0)) {
      A.row(r) /= piv;
      row_ops.push_back(Spec::row_mult(std::size_t(r), 1.0 / piv));
    }
    A(r, c) = 1.0;
    for (Eigen::Index q = 0; q < n; ++q) {
      if (q == r || A(q, c) == Complex(0.0, 0.0)) continue;
      const Complex f = -A(q, c);
      A.row(q) += f * A.row(r);
      A(q, c) = 0.0;
      row_ops.push_back(Spec::row_add(std::size_t(q), std::size_t(r), f));
    }
    pivot_col.push_back(c);
    ++r;
  }
  const Eigen::Index rank = r;

  // Column clean-up for singular input: A <- A * E.
  for (Eigen::Index k = 0; k < rank; ++k) {
    const Eigen::Index pc = pivot_col[std::size_t(k)];
    for (Eigen::Index c = 0; c < n; ++c) {
      if (c == pc || near_zero(A(k, c), 0.0)) continue;
      const Complex f = -A(k, c);
      A.col(c) += f * A.col(pc);
      A(k, c) = 0.0;
      col_ops.push_back(Spec::row_add(std::size_t(pc), std::size_t(c), f));
    }
  }
  for (Eigen::Index k = 0; k < rank; ++k) {
    const Eigen::Index pc = pivot_col[std::size_t(k)];
    if (pc == k) continue;
    A.col(pc).swap(A.col(k));
    col_ops.push_back(Spec::row_switch(std::size_t(k), std::size_t(pc)));
    for (auto& other : pivot_col)
      if (other == k) other = pc;
    pivot_col[std::size_t(k)] = k;
  }

  auto inverse = [](const Spec& s) {
    switch (s.kind) {
      case Spec::Kind::RowMult:
        return Spec::row_mult(s.i, 1.0 / s.a);
      case Spec::Kind::RowAdd:
        return Spec::row_add(s.i, s.j, -s.a);
      case Spec::Kind::RowSwitch:
        break;
    }
    return s;
  };

  // R_s ... R_1 M C_1 ... C_q = D, so M = R_1^-1 ... R_s^-1 D C_q^-1 ... C_1^-1.
  std::vector<Spec> out;
  for (const auto& s : row_ops) out.push_back(inverse(s));
  for (Eigen::Index k = rank; k < n; ++k)
    out.push_back(Spec::row_mult(std::size_t(k), 0.0));
  for (auto it = col_ops.rbegin(); it != col_ops.rend(); ++it)
    out.push_back(inverse(*it));
  (void)m;
  return out;
}

ControlledDiagram controlled_identity(std::size_t m) {
  Frame f = open_frame(m);
  effect(f.d, f.ctrl, 1.0, "discard");
  return close_frame(std::move(f), m);
}

ControlledDiagram controlled_matrix(const Matrix& M) {
  const std::size_t m = qubits_of_square(M);
  auto specs = decompose_elementary(M);
  if (specs.empty()) return controlled_identity(m);
  std::vector<ControlledDiagram> parts;
  parts.reserve(specs.size());
  for (const auto& s : specs) parts.push_back(controlled_elementary(s, m));
  return controlled_product(parts);
}

ControlledDiagram controlled_product(std::span<const ControlledDiagram> ctrls) {
  if (ctrls.empty())
    throw ArityError("controlled_product: needs at least one factor");
  check_same_m(ctrls, ControlledKind::Matrix);
  const std::size_t m = ctrls.front().m;
  Frame f = open_frame(m);
  auto copies = copy(f.d, f.ctrl, ctrls.size(), "control");
  for (std::size_t k = ctrls.size(); k-- > 0;) {
    std::vector<Port> ends{copies[k]};
    ends.insert(ends.end(), f.x.begin(), f.x.end());
    f.x = f.d.splice(ctrls[k].diagram, ends);
  }
  return close_frame(std::move(f), m);
}

ControlledDiagram controlled_sum_matrices(
    std::span<const ControlledDiagram> ctrls, std::span<const Complex> coeffs) {
  if (ctrls.size() != coeffs.size())
    throw ArityError("controlled_sum_matrices: " +
                     std::to_string(ctrls.size()) + " terms but " +
                     std::to_string(coeffs.size()) + " coefficients");
  if (ctrls.empty())
    throw ArityError("controlled_sum_matrices: needs at least one term");
  check_same_m(ctrls, ControlledKind::Matrix);
  const std::size_t m = ctrls.front().m;
  Frame f = open_frame(m);
  auto branches = w_fan(f.d, f.ctrl, ctrls.size(), WTree::LeftComb, "sum");
  for (std::size_t k = 0; k < ctrls.size(); ++k) {
    Port c = zbox_on(f.d, {branches[k]}, 1, coeffs[k], "weight")[0];
    std::vector<Port> ends{c};
    ends.insert(ends.end(), f.x.begin(), f.x.end());
    f.x = f.d.splice(ctrls[k].diagram, ends);
  }
  return close_frame(std::move(f), m);
}

ControlledDiagram controlled_state_normal_form(const Vector& v) {
  const auto len = static_cast<std::size_t>(v.size());
  if (len < 2 || !std::has_single_bit(len))
    throw ArityError("normal form needs a vector of length 2^m, m >= 1");
  const std::size_t m = static_cast<std::size_t>(std::countr_zero(len));
  Diagram d;
  Port ctrl = d.add_input();
  auto branches = w_fan(d, ctrl, len, WTree::LeftComb, "normal_form");
  std::vector<std::vector<Port>> per_qubit(m);
  for (std::size_t k = 0; k < len; ++k) {
    const auto ones = static_cast<std::size_t>(std::popcount(k));
    auto legs = zbox_on(d, {branches[k]}, ones, v(Eigen::Index(k)),
                        "amplitude");
    std::size_t next = 0;
    for (std::size_t q = 0; q < m; ++q)
      if (bit_at(k, m, q)) per_qubit[q].push_back(legs[next++]);
  }
  for (std::size_t q = 0; q < m; ++q)
    d.add_output(w_merge(d, per_qubit[q], "normal_form"));
  return {std::move(d), ControlledKind::State, m};
}

ControlledDiagram controlled_sum_states(
    std::span<const ControlledDiagram> ctrls, std::span<const Complex> coeffs) {
  if (ctrls.size() != coeffs.size())
    throw ArityError("controlled_sum_states: " + std::to_string(ctrls.size()) +
                     " terms but " + std::to_string(coeffs.size()) +
                     " coefficients");
  if (ctrls.empty())
    throw ArityError("controlled_sum_states: needs at least one term");
  check_same_m(ctrls, ControlledKind::State);
  const std::size_t m = ctrls.front().m;
  Diagram d;
  Port ctrl = d.add_input();
  auto branches = w_fan(d, ctrl, ctrls.size(), WTree::LeftComb, "sum");
  std::vector<std::vector<Port>> per_qubit(m);
  for (std::size_t k = 0; k < ctrls.size(); ++k) {
    Port c = zbox_on(d, {branches[k]}, 1, coeffs[k], "weight")[0];
    const Port ends[] = {c};
    auto outs = d.splice(ctrls[k].diagram, ends);
    for (std::size_t q = 0; q < m; ++q) per_qubit[q].push_back(outs[q]);
  }
  for (std::size_t q = 0; q < m; ++q)
    d.add_output(w_merge(d, per_qubit[q], "sum"));
  return {std::move(d), ControlledKind::State, m};
}

Diagram sum_normal_forms(const Vector& v1, const Vector& v2, Complex a,
                         Complex b) {
  if (v1.size() != v2.size())
    throw ArityError("sum_normal_forms: vectors of different lengths");
  return discharge(controlled_state_normal_form(a * v1 + b * v2));
}

Diagram discharge(const ControlledDiagram& c) {
  return plug_basis(c.diagram, 0, 1);
}

Diagram idle(const ControlledDiagram& c) { return plug_basis(c.diagram, 0, 0); }

ContractCheck check_contract(const ControlledDiagram& c, const Matrix& target,
                             double tol) {
  const Eigen::Index dim = Eigen::Index{1} << c.m;
  Matrix rest = c.kind == ControlledKind::Matrix
                    ? Matrix(Matrix::Identity(dim, dim))
                    : Matrix(Matrix::Zero(dim, 1));
  if (c.kind == ControlledKind::State) rest(0, 0) = 1.0;
  ContractCheck r;
  r.idle_residual = max_abs_diff(eval(idle(c)), rest);
  r.discharge_residual = max_abs_diff(eval(discharge(c)), target);
  r.ok = r.idle_residual <= tol && r.discharge_residual <= tol;
  return r;
}

}  // namespace zxw
