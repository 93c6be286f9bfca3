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

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zxw/types.hpp"

namespace zxw {

/// The primitive generators. Everything else (triangles, pink spiders, And
/// boxes, ...) is expanded into these at construction time.
enum class NodeType { ZBox, Hadamard, W, Input, Output };

std::string to_string(NodeType type);

/// Tagged generator payload.
///
/// A Z-box carries a complex label. The label may depend on the evolution
/// parameter t as `label * exp(i * t_rate * t)`; a non-zero `t_rate` makes the
/// node symbolic and it must be resolved before evaluation.
struct NodeKind {
  NodeType type = NodeType::ZBox;
  Complex label{1.0, 0.0};
  double t_rate = 0.0;

  static NodeKind zbox(Complex a) { return {NodeType::ZBox, a, 0.0}; }
  static NodeKind zbox_t(Complex a, double rate) {
    return {NodeType::ZBox, a, rate};
  }
  static NodeKind hadamard() { return {NodeType::Hadamard, 1.0, 0.0}; }
  static NodeKind w() { return {NodeType::W, 1.0, 0.0}; }
  static NodeKind input() { return {NodeType::Input, 1.0, 0.0}; }
  static NodeKind output() { return {NodeType::Output, 1.0, 0.0}; }

  bool is_boundary() const {
    return type == NodeType::Input || type == NodeType::Output;
  }
  bool is_symbolic() const { return t_rate != 0.0; }
  Complex label_at(double t) const;

  bool operator==(const NodeKind&) const = default;
};

using NodeId = std::size_t;

/// One port slot of one node.
struct Port {
  NodeId node = 0;
  std::size_t slot = 0;
  auto operator<=>(const Port&) const = default;
};

/// A generator instance.
///
/// Port layout: Z-box slots [0, n_in) face the inputs and [n_in, n_in+n_out)
/// face the outputs (the tensor is symmetric, so this only matters for
/// display). Hadamard: 0 = in, 1 = out. W: slot 0 is the apex, slots 1 and 2
/// the pair; n_in/n_out is (1,2) for the usual orientation and (2,1) when the
/// node is drawn upside down. Boundary nodes have a single slot 0.
struct Node {
  NodeId id = 0;
  NodeKind kind;
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  /// Provenance label of the derived generator this node was expanded from.
  std::string tag;

  std::size_t arity() const { return n_in + n_out; }
  bool operator==(const Node&) const = default;
};

/// A structural defect reported by `validate`.
struct Defect {
  std::string code;
  std::string message;
};

/// An open graph of generator nodes with ordered input and output boundaries.
///
/// Edges are undirected links between port slots. Cups, caps and swaps are
/// pure wiring. While a diagram is being built, ports may be left dangling;
/// `validate` reports any that remain.
class Diagram {
 public:
  Diagram() = default;

  NodeId add_node(const NodeKind& kind, std::size_t n_in, std::size_t n_out,
                  std::string tag = {});
  /// Adds a Z-box with the given arity; returns its id.
  NodeId add_zbox(Complex a, std::size_t n_in, std::size_t n_out,
                  std::string tag = {});
  void link(Port a, Port b);
  void unlink(Port a);
  /// Removes a node and every link touching it. Boundary lists are updated.
  void remove_node(NodeId id);

  /// Appends an input boundary; returns its (dangling) port.
  Port add_input();
  /// Appends an output boundary attached to `end`.
  void add_output(Port end);
  /// Appends an output boundary with a dangling port and returns that port.
  Port add_open_output();

  /// Copies `sub` into this diagram, attaching its inputs to `ends` (one
  /// dangling port per input) and returning one dangling port per output.
  std::vector<Port> splice(const Diagram& sub, std::span<const Port> ends);

  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const Node& node(NodeId id) const;
  Node& node(NodeId id);
  bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
  const std::vector<NodeId>& inputs() const { return inputs_; }
  const std::vector<NodeId>& outputs() const { return outputs_; }
  std::size_t n_inputs() const { return inputs_.size(); }
  std::size_t n_outputs() const { return outputs_.size(); }

  /// The port linked to `p`, if any.
  std::optional<Port> neighbour(Port p) const;
  /// Every edge once, as (smaller port, larger port), sorted.
  std::vector<std::pair<Port, Port>> edges() const;
  std::size_t n_edges() const { return links_.size() / 2; }

  /// Number of non-boundary nodes.
  std::size_t n_generators() const;
  bool is_symbolic() const;

  /// Renumbers nodes 0..N-1 in current id order.
  Diagram compacted() const;

  /// Structural equality: same nodes, links and boundary lists.
  bool operator==(const Diagram& other) const;

 private:
  std::map<NodeId, Node> nodes_;
  std::map<Port, Port> links_;
  std::vector<NodeId> inputs_;
  std::vector<NodeId> outputs_;
  NodeId next_id_ = 0;

  friend Diagram diagram_from_parts(std::map<NodeId, Node>,
                                    std::vector<std::pair<Port, Port>>,
                                    std::vector<NodeId>, std::vector<NodeId>);
};

/// Reassembles a diagram from serialized parts (ids are kept). Throws
/// ParseError on links that reference unknown nodes or reuse a port.
Diagram diagram_from_parts(std::map<NodeId, Node> nodes,
                           std::vector<std::pair<Port, Port>> edges,
                           std::vector<NodeId> inputs,
                           std::vector<NodeId> outputs);

/// Checks the port/edge bijection, boundary bookkeeping, fixed arities and
/// label finiteness. An empty result means the diagram is well formed.
std::vector<Defect> validate(const Diagram& d);

/// Throws Error listing the defects when `validate` is non-empty.
void require_valid(const Diagram& d);

}  // namespace zxw
