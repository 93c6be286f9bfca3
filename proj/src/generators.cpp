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

#include "zxw/generators.hpp"

#include <cmath>
#include <numbers>

#include "build_util.hpp"

namespace zxw {

Diagram make_generator(const NodeKind& kind, std::size_t n_in,
                       std::size_t n_out) {
  Diagram d;
  std::vector<Port> ins;
  for (std::size_t i = 0; i < n_in; ++i) ins.push_back(d.add_input());
  switch (kind.type) {
    case NodeType::Hadamard: {
      if (n_in != 1 || n_out != 1)
        throw ArityError("Hadamard is a 1 -> 1 generator");
      NodeId h = d.add_node(kind, 1, 1);
      d.link(ins[0], {h, 0});
      d.add_output({h, 1});
      return d;
    }
    case NodeType::W: {
      NodeId w;
      if (n_in == 1 && n_out == 2) {
        w = d.add_node(kind, 1, 2);
        d.link(ins[0], {w, 0});
        d.add_output({w, 1});
        d.add_output({w, 2});
      } else if (n_in == 2 && n_out == 1) {
        w = d.add_node(kind, 2, 1);
        d.link(ins[0], {w, 1});
        d.link(ins[1], {w, 2});
        d.add_output({w, 0});
      } else {
        throw ArityError("W is a 1 -> 2 generator (2 -> 1 when flipped)");
      }
      return d;
    }
    case NodeType::ZBox: {
      if (n_in + n_out == 0)
        throw ArityError("make_generator: Z-box needs at least one leg");
      NodeId z = d.add_node(kind, n_in, n_out);
      for (std::size_t i = 0; i < n_in; ++i) d.link(ins[i], {z, i});
      for (std::size_t j = 0; j < n_out; ++j) d.add_output({z, n_in + j});
      return d;
    }
    case NodeType::Input:
    case NodeType::Output:
      break;
  }
  throw ArityError("boundary nodes are not generators");
}

Diagram compose_seq(const Diagram& f, const Diagram& g) {
  if (f.n_outputs() != g.n_inputs())
    throw ArityError("compose_seq: " + std::to_string(f.n_outputs()) +
                     " outputs vs " + std::to_string(g.n_inputs()) +
                     " inputs");
  Diagram d;
  std::vector<Port> ends;
  for (std::size_t i = 0; i < f.n_inputs(); ++i) ends.push_back(d.add_input());
  ends = d.splice(f, ends);
  ends = d.splice(g, ends);
  for (Port p : ends) d.add_output(p);
  return d;
}

Diagram compose_seq(std::span<const Diagram> ds) {
  if (ds.empty()) return Diagram{};
  Diagram acc = ds.front();
  for (std::size_t i = 1; i < ds.size(); ++i) acc = compose_seq(acc, ds[i]);
  return acc;
}

Diagram compose_par(const Diagram& f, const Diagram& g) {
  Diagram d;
  std::vector<Port> fi, gi;
  for (std::size_t i = 0; i < f.n_inputs(); ++i) fi.push_back(d.add_input());
  for (std::size_t i = 0; i < g.n_inputs(); ++i) gi.push_back(d.add_input());
  auto fo = d.splice(f, fi);
  auto go = d.splice(g, gi);
  for (Port p : fo) d.add_output(p);
  for (Port p : go) d.add_output(p);
  return d;
}

Diagram compose_par(std::span<const Diagram> ds) {
  Diagram acc;
  for (const auto& d : ds) acc = compose_par(acc, d);
  return acc;
}

Diagram transpose(const Diagram& d) {
  std::map<NodeId, Node> nodes;
  auto remap_slot = [&](const Node& n, std::size_t s) -> std::size_t {
    if (n.kind.type == NodeType::ZBox || n.kind.type == NodeType::Hadamard)
      return s < n.n_in ? n.n_out + s : s - n.n_in;
    return s;
  };
  for (const auto& [id, n] : d.nodes()) {
    Node m = n;
    std::swap(m.n_in, m.n_out);
    if (n.kind.type == NodeType::Input) m.kind.type = NodeType::Output;
    if (n.kind.type == NodeType::Output) m.kind.type = NodeType::Input;
    nodes.emplace(id, m);
  }
  std::vector<std::pair<Port, Port>> edges;
  for (const auto& [a, b] : d.edges()) {
    edges.push_back({{a.node, remap_slot(d.node(a.node), a.slot)},
                     {b.node, remap_slot(d.node(b.node), b.slot)}});
  }
  return diagram_from_parts(std::move(nodes), std::move(edges), d.outputs(),
                            d.inputs());
}

Diagram identity(std::size_t n) {
  Diagram d;
  for (std::size_t i = 0; i < n; ++i) d.add_output(d.add_input());
  return d;
}

Diagram permutation(std::span<const std::size_t> perm) {
  Diagram d;
  std::vector<Port> ins, outs;
  for (std::size_t i = 0; i < perm.size(); ++i) ins.push_back(d.add_input());
  for (std::size_t i = 0; i < perm.size(); ++i)
    outs.push_back(d.add_open_output());
  std::vector<bool> used(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || used[perm[i]])
      throw ParameterError("permutation: not a permutation");
    used[perm[i]] = true;
    d.link(ins[i], outs[perm[i]]);
  }
  return d;
}

Diagram swap() {
  const std::size_t perm[] = {1, 0};
  return permutation(perm);
}

Diagram cap() {
  Diagram d;
  Port a = d.add_open_output();
  Port b = d.add_open_output();
  d.link(a, b);
  return d;
}

Diagram cup() { return transpose(cap()); }

Diagram zbox(Complex a, std::size_t n_in, std::size_t n_out) {
  if (n_in + n_out == 0) return scalar(1.0 + a);
  return make_generator(NodeKind::zbox(a), n_in, n_out);
}

Diagram green(double alpha, std::size_t n_in, std::size_t n_out) {
  return tagged(zbox(std::polar(1.0, alpha), n_in, n_out), "green");
}

Diagram scalar(Complex s) {
  Diagram d;
  d.add_zbox(s - 1.0, 0, 0, "scalar");
  return d;
}

Diagram hadamard() { return make_generator(NodeKind::hadamard(), 1, 1); }

Diagram w_node() { return make_generator(NodeKind::w(), 1, 2); }

Diagram w_spider(std::size_t m, WTree shape) {
  if (m == 0) throw ArityError("w_spider: needs at least one output leg");
  Diagram d;
  Port in = d.add_input();
  for (Port p : detail::w_fan(d, in, m, shape)) d.add_output(p);
  return d;
}

Diagram weighted_triangle(Complex a) {
  Diagram d;
  Port in = d.add_input();
  d.add_output(detail::apply_triangle(d, in, a));
  return d;
}

Diagram triangle() { return tagged(weighted_triangle(1.0), "triangle"); }

Diagram inverse_triangle() {
  return tagged(weighted_triangle(-1.0), "triangle_inv");
}

Diagram pink(double tau, std::size_t n_in, std::size_t n_out) {
  const bool is_zero = std::abs(tau) < 1e-12;
  const bool is_pi = std::abs(tau - std::numbers::pi) < 1e-12;
  if (!is_zero && !is_pi)
    throw ParameterError("pink spider is only defined for tau in {0, pi}");
  Diagram d;
  std::vector<Port> ins;
  for (std::size_t i = 0; i < n_in; ++i) ins.push_back(d.add_input());
  auto outs = detail::pink_node(d, ins, n_out, is_pi);
  for (Port p : outs) d.add_output(p);
  return d;
}

Diagram ket(int bit) {
  if (bit != 0 && bit != 1) throw ParameterError("ket: bit must be 0 or 1");
  Diagram d;
  d.add_output(detail::basis_state(d, bit));
  return d;
}

Diagram bra(int bit) { return transpose(ket(bit)); }

Diagram pauli_x() { return tagged(pink(std::numbers::pi, 1, 1), "X"); }

Diagram v_gate() {
  const Diagram parts[] = {hadamard(), green(std::numbers::pi / 2, 1, 1),
                           hadamard()};
  return tagged(compose_seq(parts), "V");
}

Diagram v_dagger() {
  const Diagram parts[] = {hadamard(), green(-std::numbers::pi / 2, 1, 1),
                           hadamard()};
  return tagged(compose_seq(parts), "Vdg");
}

Diagram and_box(std::size_t n) {
  Diagram d;
  std::vector<Port> ins;
  for (std::size_t i = 0; i < n; ++i) ins.push_back(d.add_input());
  d.add_output(detail::and_gate(d, ins));
  return d;
}

Diagram tagged(Diagram d, const std::string& tag) {
  std::vector<NodeId> ids;
  for (const auto& [id, n] : d.nodes())
    if (!n.kind.is_boundary()) ids.push_back(id);
  for (NodeId id : ids) d.node(id).tag = tag;
  return d;
}

}  // namespace zxw
