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

#include "zxw/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace zxw {

std::string to_string(NodeType type) {
  switch (type) {
    case NodeType::ZBox:
      return "zbox";
    case NodeType::Hadamard:
      return "had";
    case NodeType::W:
      return "w";
    case NodeType::Input:
      return "in";
    case NodeType::Output:
      return "out";
  }
  return "?";
}

Complex NodeKind::label_at(double t) const {
  if (t_rate == 0.0) return label;
  return label * std::exp(Complex(0.0, t_rate * t));
}

NodeId Diagram::add_node(const NodeKind& kind, std::size_t n_in,
                         std::size_t n_out, std::string tag) {
  switch (kind.type) {
    case NodeType::Hadamard:
      if (n_in + n_out != 2)
        throw ArityError("Hadamard node must have two ports");
      break;
    case NodeType::W:
      if (n_in + n_out != 3)
        throw ArityError("W node must have three ports");
      break;
    case NodeType::Input:
    case NodeType::Output:
      if (n_in + n_out != 1)
        throw ArityError("boundary node must have one port");
      break;
    case NodeType::ZBox:
      break;
  }
  NodeId id = next_id_++;
  nodes_.emplace(id, Node{id, kind, n_in, n_out, std::move(tag)});
  return id;
}

NodeId Diagram::add_zbox(Complex a, std::size_t n_in, std::size_t n_out,
                         std::string tag) {
  return add_node(NodeKind::zbox(a), n_in, n_out, std::move(tag));
}

void Diagram::link(Port a, Port b) {
  auto check = [this](Port p) {
    auto it = nodes_.find(p.node);
    if (it == nodes_.end())
      throw Error("link to unknown node " + std::to_string(p.node));
    if (p.slot >= it->second.arity())
      throw Error("link to missing slot " + std::to_string(p.slot) +
                  " of node " + std::to_string(p.node));
    if (links_.count(p))
      throw Error("port (" + std::to_string(p.node) + "," +
                  std::to_string(p.slot) + ") is already linked");
  };
  check(a);
  check(b);
  if (a == b) throw Error("cannot link a port to itself");
  links_[a] = b;
  links_[b] = a;
}

void Diagram::unlink(Port a) {
  auto it = links_.find(a);
  if (it == links_.end()) return;
  Port b = it->second;
  links_.erase(it);
  links_.erase(b);
}

void Diagram::remove_node(NodeId id) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) return;
  for (std::size_t s = 0; s < it->second.arity(); ++s) unlink({id, s});
  nodes_.erase(it);
  std::erase(inputs_, id);
  std::erase(outputs_, id);
}

Port Diagram::add_input() {
  NodeId id = add_node(NodeKind::input(), 0, 1);
  inputs_.push_back(id);
  return {id, 0};
}

void Diagram::add_output(Port end) {
  Port p = add_open_output();
  link(end, p);
}

Port Diagram::add_open_output() {
  NodeId id = add_node(NodeKind::output(), 1, 0);
  outputs_.push_back(id);
  return {id, 0};
}

std::vector<Port> Diagram::splice(const Diagram& sub,
                                  std::span<const Port> ends) {
  if (ends.size() != sub.n_inputs())
    throw ArityError("splice: " + std::to_string(ends.size()) +
                     " wire ends for " + std::to_string(sub.n_inputs()) +
                     " inputs");
  std::map<NodeId, NodeId> copied;
  std::map<NodeId, std::size_t> in_pos, out_pos;
  for (std::size_t i = 0; i < sub.inputs_.size(); ++i)
    in_pos[sub.inputs_[i]] = i;
  for (std::size_t i = 0; i < sub.outputs_.size(); ++i)
    out_pos[sub.outputs_[i]] = i;
  for (const auto& [id, n] : sub.nodes_) {
    if (n.kind.is_boundary()) continue;
    copied[id] = add_node(n.kind, n.n_in, n.n_out, n.tag);
  }
  std::vector<std::optional<Port>> result(sub.n_outputs());
  auto map_port = [&](Port p) { return Port{copied.at(p.node), p.slot}; };
  for (const auto& [a, b] : sub.edges()) {
    bool a_in = in_pos.count(a.node), b_in = in_pos.count(b.node);
    bool a_out = out_pos.count(a.node), b_out = out_pos.count(b.node);
    bool a_int = !a_in && !a_out, b_int = !b_in && !b_out;
    if (a_int && b_int) {
      link(map_port(a), map_port(b));
    } else if (a_int || b_int) {
      Port inner = a_int ? a : b;
      NodeId bnd = a_int ? b.node : a.node;
      if (in_pos.count(bnd))
        link(map_port(inner), ends[in_pos[bnd]]);
      else
        result[out_pos[bnd]] = map_port(inner);
    } else if ((a_in && b_out) || (a_out && b_in)) {
      NodeId i = a_in ? a.node : b.node;
      NodeId o = a_in ? b.node : a.node;
      result[out_pos[o]] = ends[in_pos[i]];
    } else if (a_in && b_in) {
      link(ends[in_pos[a.node]], ends[in_pos[b.node]]);
    } else {
      NodeId z = add_zbox(1.0, 0, 2, "cap");
      result[out_pos[a.node]] = Port{z, 0};
      result[out_pos[b.node]] = Port{z, 1};
    }
  }
  std::vector<Port> out;
  out.reserve(result.size());
  for (std::size_t i = 0; i < result.size(); ++i) {
    if (!result[i])
      throw Error("splice: output " + std::to_string(i) + " is not connected");
    out.push_back(*result[i]);
  }
  return out;
}

const Node& Diagram::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw Error("unknown node " + std::to_string(id));
  return it->second;
}

Node& Diagram::node(NodeId id) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw Error("unknown node " + std::to_string(id));
  return it->second;
}

std::optional<Port> Diagram::neighbour(Port p) const {
  auto it = links_.find(p);
  if (it == links_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Port, Port>> Diagram::edges() const {
  std::vector<std::pair<Port, Port>> out;
  out.reserve(links_.size() / 2);
  for (const auto& [a, b] : links_)
    if (a < b) out.emplace_back(a, b);
  return out;
}

std::size_t Diagram::n_generators() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const auto& kv) {
        return !kv.second.kind.is_boundary();
      }));
}

bool Diagram::is_symbolic() const {
  return std::any_of(nodes_.begin(), nodes_.end(), [](const auto& kv) {
    return kv.second.kind.is_symbolic();
  });
}

bool Diagram::operator==(const Diagram& other) const {
  return nodes_ == other.nodes_ && links_ == other.links_ &&
         inputs_ == other.inputs_ && outputs_ == other.outputs_;
}

Diagram Diagram::compacted() const {
  std::map<NodeId, NodeId> remap;
  NodeId next = 0;
  for (const auto& [id, n] : nodes_) remap[id] = next++;
  std::map<NodeId, Node> nodes;
  for (const auto& [id, n] : nodes_) {
    Node copy = n;
    copy.id = remap[id];
    nodes.emplace(copy.id, copy);
  }
  std::vector<std::pair<Port, Port>> edges;
  for (const auto& [a, b] : this->edges())
    edges.push_back({{remap[a.node], a.slot}, {remap[b.node], b.slot}});
  std::vector<NodeId> ins, outs;
  for (NodeId i : inputs_) ins.push_back(remap[i]);
  for (NodeId o : outputs_) outs.push_back(remap[o]);
  return diagram_from_parts(std::move(nodes), std::move(edges), std::move(ins),
                            std::move(outs));
}

Diagram diagram_from_parts(std::map<NodeId, Node> nodes,
                           std::vector<std::pair<Port, Port>> edges,
                           std::vector<NodeId> inputs,
                           std::vector<NodeId> outputs) {
  Diagram d;
  for (auto& [id, n] : nodes) {
    if (n.id != id) throw ParseError("node id mismatch", 0);
    d.next_id_ = std::max(d.next_id_, id + 1);
  }
  d.nodes_ = std::move(nodes);
  for (const auto& [a, b] : edges) {
    try {
      d.link(a, b);
    } catch (const Error& e) {
      throw ParseError(e.what(), 0);
    }
  }
  for (NodeId i : inputs)
    if (!d.nodes_.count(i)) throw ParseError("unknown input node", 0);
  for (NodeId o : outputs)
    if (!d.nodes_.count(o)) throw ParseError("unknown output node", 0);
  d.inputs_ = std::move(inputs);
  d.outputs_ = std::move(outputs);
  return d;
}

std::vector<Defect> validate(const Diagram& d) {
  std::vector<Defect> defects;
  auto add = [&](std::string code, std::string msg) {
    defects.push_back({std::move(code), std::move(msg)});
  };
  for (const auto& [id, n] : d.nodes()) {
    const std::string where = "node " + std::to_string(id);
    switch (n.kind.type) {
      case NodeType::Hadamard:
        if (n.arity() != 2) add("bad arity", where + ": Hadamard needs 1+1");
        break;
      case NodeType::W:
        if (n.arity() != 3) add("bad arity", where + ": W needs three ports");
        break;
      case NodeType::Input:
      case NodeType::Output:
        if (n.arity() != 1) add("bad arity", where + ": boundary needs one");
        break;
      case NodeType::ZBox:
        if (!std::isfinite(n.kind.label.real()) ||
            !std::isfinite(n.kind.label.imag()) ||
            !std::isfinite(n.kind.t_rate))
          add("bad parameter", where + ": non-finite label");
        break;
    }
    for (std::size_t s = 0; s < n.arity(); ++s) {
      auto nb = d.neighbour({id, s});
      if (!nb) {
        add("unconnected port",
            where + " slot " + std::to_string(s) + " is unconnected");
        continue;
      }
      auto back = d.neighbour(*nb);
      if (!back || *back != Port{id, s})
        add("asymmetric link", where + " slot " + std::to_string(s));
    }
  }
  std::set<NodeId> seen_in, seen_out;
  for (NodeId i : d.inputs()) {
    if (!d.has_node(i) || d.node(i).kind.type != NodeType::Input)
      add("boundary", "input list entry " + std::to_string(i) +
                          " is not an input node");
    else if (!seen_in.insert(i).second)
      add("boundary", "input " + std::to_string(i) + " listed twice");
  }
  for (NodeId o : d.outputs()) {
    if (!d.has_node(o) || d.node(o).kind.type != NodeType::Output)
      add("boundary", "output list entry " + std::to_string(o) +
                          " is not an output node");
    else if (!seen_out.insert(o).second)
      add("boundary", "output " + std::to_string(o) + " listed twice");
  }
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind.type == NodeType::Input && !seen_in.count(id))
      add("boundary", "input node " + std::to_string(id) + " not listed");
    if (n.kind.type == NodeType::Output && !seen_out.count(id))
      add("boundary", "output node " + std::to_string(id) + " not listed");
  }
  return defects;
}

void require_valid(const Diagram& d) {
  auto defects = validate(d);
  if (defects.empty()) return;
  std::ostringstream os;
  os << "invalid diagram:";
  for (const auto& df : defects) os << "\n  " << df.code << ": " << df.message;
  throw Error(os.str());
}

}  // namespace zxw
