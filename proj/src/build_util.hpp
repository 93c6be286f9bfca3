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

// In-place wiring helpers. Each takes dangling ports of `d`, adds nodes and
// returns the new dangling ports.

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "zxw/diagram.hpp"
#include "zxw/generators.hpp"

namespace zxw::detail {

inline std::vector<Port> w_fan(Diagram& d, Port in, std::size_t m,
                               WTree shape, const std::string& tag = "w") {
  if (m == 1) return {in};
  std::size_t k = 1;
  switch (shape) {
    case WTree::LeftComb:
      k = m - 1;
      break;
    case WTree::RightComb:
      k = 1;
      break;
    case WTree::Balanced:
      k = m / 2;
      break;
  }
  NodeId w = d.add_node(NodeKind::w(), 1, 2, tag);
  d.link(in, {w, 0});
  auto left = w_fan(d, {w, 1}, k, shape, tag);
  auto right = w_fan(d, {w, 2}, m - k, shape, tag);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

/// Merges ports through an upside-down W spider (the transpose of w_fan).
inline Port w_merge(Diagram& d, const std::vector<Port>& ins,
                    const std::string& tag = "w") {
  if (ins.empty()) throw ArityError("w_merge: no legs");
  Port acc = ins[0];
  for (std::size_t i = 1; i < ins.size(); ++i) {
    NodeId w = d.add_node(NodeKind::w(), 2, 1, tag);
    d.link(acc, {w, 1});
    d.link(ins[i], {w, 2});
    acc = {w, 0};
  }
  return acc;
}

/// [[1,a],[0,1]] applied to the wire.
inline Port apply_triangle(Diagram& d, Port in, Complex a,
                           const std::string& tag = "triangle") {
  NodeId w = d.add_node(NodeKind::w(), 1, 2, tag);
  d.link(in, {w, 0});
  NodeId e = d.add_zbox(a, 1, 0, tag);
  d.link({w, 2}, {e, 0});
  return {w, 1};
}

/// Z-box with one leg per entry of `ins` and `n_out` fresh legs.
inline std::vector<Port> zbox_on(Diagram& d, const std::vector<Port>& ins,
                                 std::size_t n_out, Complex a,
                                 const std::string& tag = {}) {
  NodeId z = d.add_zbox(a, ins.size(), n_out, tag);
  for (std::size_t i = 0; i < ins.size(); ++i) d.link(ins[i], {z, i});
  std::vector<Port> out;
  for (std::size_t j = 0; j < n_out; ++j) out.push_back({z, ins.size() + j});
  return out;
}

inline std::vector<Port> copy(Diagram& d, Port in, std::size_t m,
                              const std::string& tag = "copy") {
  return zbox_on(d, {in}, m, 1.0, tag);
}

inline void effect(Diagram& d, Port in, Complex a,
                   const std::string& tag = {}) {
  zbox_on(d, {in}, 0, a, tag);
}

inline void add_scalar(Diagram& d, Complex s, const std::string& tag) {
  if (s == Complex(1.0, 0.0)) return;
  d.add_zbox(s - 1.0, 0, 0, tag);
}

inline Port apply_hadamard(Diagram& d, Port in, const std::string& tag = {}) {
  NodeId h = d.add_node(NodeKind::hadamard(), 1, 1, tag);
  d.link(in, {h, 0});
  return {h, 1};
}

/// Pink spider (parity 0 or 1) on the given input legs with n_out fresh legs.
inline std::vector<Port> pink_node(Diagram& d, const std::vector<Port>& ins,
                                   std::size_t n_out, bool pi,
                                   const std::string& tag = "pink") {
  std::vector<Port> hin;
  for (Port p : ins) hin.push_back(apply_hadamard(d, p, tag));
  auto zout = zbox_on(d, hin, n_out, pi ? Complex(-1.0, 0.0) : Complex(1.0),
                      tag);
  std::vector<Port> out;
  for (Port p : zout) {
    NodeId h = d.add_node(NodeKind::hadamard(), 1, 1, tag);
    d.link(p, {h, 0});
    out.push_back({h, 1});
  }
  const double legs = static_cast<double>(ins.size() + n_out);
  add_scalar(d, std::pow(2.0, legs / 2.0 - 1.0), tag);
  return out;
}

inline Port basis_state(Diagram& d, int bit) {
  if (bit == 0) return zbox_on(d, {}, 1, 0.0, "ket0")[0];
  Port one = zbox_on(d, {}, 1, 1.0, "ket1")[0];
  return apply_triangle(d, one, -1.0, "ket1");
}

inline Port apply_not(Diagram& d, Port in) {
  return pink_node(d, {in}, 1, true, "X")[0];
}

/// XOR of two wires (pink 2 -> 1).
inline Port apply_xor(Diagram& d, Port a, Port b) {
  return pink_node(d, {a, b}, 1, false, "xor")[0];
}

/// And of the given wires: T^{-1} Z_{n->1} T^{(x)n}.
inline Port and_gate(Diagram& d, const std::vector<Port>& ins,
                     const std::string& tag = "and") {
  std::vector<Port> tri;
  for (Port p : ins) tri.push_back(apply_triangle(d, p, 1.0, tag));
  Port z = zbox_on(d, tri, 1, 1.0, tag)[0];
  return apply_triangle(d, z, -1.0, tag);
}

}  // namespace zxw::detail
