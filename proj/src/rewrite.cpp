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

// Local rewrites. Every match is anchored at one node and looks at most two
// hops away.

#include <algorithm>
#include <optional>
#include <string>

#include "zxw/rules.hpp"

namespace zxw {
namespace {

bool is_type(const Diagram& d, NodeId id, NodeType t) {
  return d.has_node(id) && d.node(id).kind.type == t;
}

bool is_zbox(const Diagram& d, NodeId id) {
  return is_type(d, id, NodeType::ZBox);
}

std::vector<Port> ports_of(const Diagram& d, NodeId id) {
  std::vector<Port> out;
  for (std::size_t s = 0; s < d.node(id).arity(); ++s) out.push_back({id, s});
  return out;
}

Port other_end(const Diagram& d, Port p) {
  auto nb = d.neighbour(p);
  if (!nb) throw Error("rewrite: dangling port");
  return *nb;
}

// Replaces the Z-boxes in `olds` by one Z-box with the given payload, wired to
// every outside neighbour. Edges among `olds` disappear.
NodeId replace_zboxes(Diagram& d, const std::vector<NodeId>& olds,
                      NodeKind kind, const std::vector<Port>& dropped = {}) {
  std::vector<Port> outside;
  std::size_t n_in = 0;
  std::string tag;
  for (NodeId id : olds) {
    const Node& n = d.node(id);
    if (tag.empty()) tag = n.tag;
    for (std::size_t s = 0; s < n.arity(); ++s) {
      Port p{id, s};
      if (std::find(dropped.begin(), dropped.end(), p) != dropped.end())
        continue;
      Port nb = other_end(d, p);
      if (std::find(olds.begin(), olds.end(), nb.node) != olds.end()) continue;
      outside.push_back(nb);
      if (s < n.n_in) ++n_in;
    }
  }
  for (NodeId id : olds) d.remove_node(id);
  NodeId z = d.add_node(kind, n_in, outside.size() - n_in, tag);
  for (std::size_t i = 0; i < outside.size(); ++i) d.link(outside[i], {z, i});
  return z;
}

bool has_self_loop(const Diagram& d, NodeId id) {
  for (Port p : ports_of(d, id))
    if (other_end(d, p).node == id) return true;
  return false;
}

// Rewrites one occurrence; returns a trace line, or nothing when no rule
// applies.
using Step = std::optional<std::string>;

Step fuse_once(Diagram& d) {
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind.type != NodeType::ZBox) continue;
    for (Port p : ports_of(d, id)) {
      Port nb = other_end(d, p);
      if (nb.node == id || !is_zbox(d, nb.node)) continue;
      const Node& m = d.node(nb.node);
      NodeKind k = NodeKind::zbox_t(n.kind.label * m.kind.label,
                                    n.kind.t_rate + m.kind.t_rate);
      const std::string line = "S1 fuse " + std::to_string(id) + "+" +
                               std::to_string(nb.node);
      replace_zboxes(d, {id, nb.node}, k);
      return line;
    }
    if (has_self_loop(d, id)) {
      const std::string line = "S1 loop " + std::to_string(id);
      replace_zboxes(d, {id}, n.kind);
      return line;
    }
  }
  return std::nullopt;
}

// Label-1 two-legged Z-box becomes a plain wire.
Step identity_once(Diagram& d) {
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind.type != NodeType::ZBox || n.arity() != 2) continue;
    if (n.kind.is_symbolic() || n.kind.label != Complex(1.0, 0.0)) continue;
    Port a = other_end(d, {id, 0});
    Port b = other_end(d, {id, 1});
    if (a.node == id) continue;  // closed loop, left for the scalar pass
    const NodeId gone = id;
    d.remove_node(gone);
    d.link(a, b);
    return "S2 wire " + std::to_string(gone);
  }
  return std::nullopt;
}

Step empty_pair_once(Diagram& d, Complex& scalar) {
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind.type != NodeType::ZBox || n.arity() != 1) continue;
    if (n.kind.is_symbolic() || n.kind.label != Complex(0.0, 0.0)) continue;
    Port nb = other_end(d, {id, 0});
    if (!is_zbox(d, nb.node) || d.node(nb.node).arity() != 1) continue;
    // <0| (1, a)^T = 1 for the pair, nothing to absorb.
    const NodeId other = nb.node;
    d.remove_node(id);
    d.remove_node(other);
    (void)scalar;
    return "Ept pair " + std::to_string(id) + "," + std::to_string(other);
  }
  return std::nullopt;
}

Step scalar_once(Diagram& d, Complex& scalar) {
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind.type != NodeType::ZBox || n.kind.is_symbolic()) continue;
    if (n.arity() != 0) continue;
    scalar *= 1.0 + n.kind.label;
    const NodeId gone = id;
    d.remove_node(gone);
    return "Ept scalar " + std::to_string(gone);
  }
  return std::nullopt;
}

Step hadamard_pair_once(Diagram& d) {
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind.type != NodeType::Hadamard) continue;
    for (std::size_t s = 0; s < 2; ++s) {
      Port nb = other_end(d, {id, s});
      if (nb.node == id || !is_type(d, nb.node, NodeType::Hadamard)) continue;
      Port outer_a = other_end(d, {id, 1 - s});
      Port outer_b = other_end(d, {nb.node, 1 - nb.slot});
      if (outer_a.node == nb.node) continue;  // H ring, no open ends
      const NodeId h1 = id, h2 = nb.node;
      d.remove_node(h1);
      d.remove_node(h2);
      d.link(outer_a, outer_b);
      return "H2 " + std::to_string(h1) + "," + std::to_string(h2);
    }
  }
  return std::nullopt;
}

// A triangle is a 1 -> 2 W whose slot 2 ends in a one-legged Z-box. Returns
// that Z-box when `w` is a triangle.
std::optional<NodeId> triangle_weight(const Diagram& d, NodeId w) {
  if (!is_type(d, w, NodeType::W)) return std::nullopt;
  Port e = other_end(d, {w, 2});
  if (!is_zbox(d, e.node) || d.node(e.node).arity() != 1) return std::nullopt;
  if (d.node(e.node).kind.is_symbolic()) return std::nullopt;
  return e.node;
}

Step triangle_inverse_once(Diagram& d) {
  for (const auto& [id, n] : d.nodes()) {
    auto e1 = triangle_weight(d, id);
    if (!e1) continue;
    Port next = other_end(d, {id, 1});
    if (next.slot != 0) continue;
    auto e2 = triangle_weight(d, next.node);
    if (!e2 || next.node == id) continue;
    const Complex sum = d.node(*e1).kind.label + d.node(*e2).kind.label;
    if (std::abs(sum) > 1e-14) continue;
    Port in = other_end(d, {id, 0});
    Port out = other_end(d, {next.node, 1});
    if (in.node == next.node || out.node == id) continue;
    const NodeId w1 = id, w2 = next.node, z1 = *e1, z2 = *e2;
    for (NodeId x : {w1, w2, z1, z2}) d.remove_node(x);
    d.link(in, out);
    return "Inv " + std::to_string(w1) + "," + std::to_string(w2);
  }
  return std::nullopt;
}

// Two Z-boxes joined by two Hadamard edges: both edges go, factor 1/2.
Step hopf_once(Diagram& d, Complex& scalar) {
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind.type != NodeType::ZBox) continue;
    std::map<NodeId, std::vector<std::pair<Port, NodeId>>> via;
    for (Port p : ports_of(d, id)) {
      Port h = other_end(d, p);
      if (!is_type(d, h.node, NodeType::Hadamard)) continue;
      Port far = other_end(d, {h.node, 1 - h.slot});
      if (far.node == id || !is_zbox(d, far.node)) continue;
      via[far.node].push_back({p, h.node});
    }
    for (const auto& [other, paths] : via) {
      if (paths.size() < 2) continue;
      const NodeId h1 = paths[0].second, h2 = paths[1].second;
      if (h1 == h2) continue;
      std::vector<Port> dropped_a = {paths[0].first, paths[1].first};
      std::vector<Port> dropped_b;
      for (NodeId h : {h1, h2})
        for (std::size_t s = 0; s < 2; ++s) {
          Port q = other_end(d, {h, s});
          if (q.node == other) dropped_b.push_back(q);
        }
      const NodeKind ka = n.kind, kb = d.node(other).kind;
      d.remove_node(h1);
      d.remove_node(h2);
      replace_zboxes(d, {id}, ka, dropped_a);
      replace_zboxes(d, {other}, kb, dropped_b);
      scalar *= 0.5;
      return "Hopf " + std::to_string(id) + "," + std::to_string(other);
    }
  }
  return std::nullopt;
}

}  // namespace

Diagram apply_fusion(const Diagram& input) {
  Diagram d = input;
  for (;;) {
    if (fuse_once(d)) continue;
    if (identity_once(d)) continue;
    return d;
  }
}

SimplifyResult simplify_basic(const Diagram& input) {
  SimplifyResult res{input, 1.0, {}};
  Diagram& d = res.diagram;
  for (;;) {
    Step s = fuse_once(d);
    if (!s) s = identity_once(d);
    if (!s) s = empty_pair_once(d, res.scalar);
    if (!s) s = scalar_once(d, res.scalar);
    if (!s) s = hadamard_pair_once(d);
    if (!s) s = triangle_inverse_once(d);
    if (!s) s = hopf_once(d, res.scalar);
    if (!s) return res;
    res.trace.push_back(*s);
  }
}

}  // namespace zxw
