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

#include "zxw/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zxw/pauli.hpp"

namespace zxw {
namespace {

using nlohmann::json;

const char* kind_name(NodeType t) {
  switch (t) {
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

NodeType kind_from(const std::string& s) {
  if (s == "zbox") return NodeType::ZBox;
  if (s == "had") return NodeType::Hadamard;
  if (s == "w") return NodeType::W;
  if (s == "in") return NodeType::Input;
  if (s == "out") return NodeType::Output;
  throw ParseError("unknown node kind '" + s + "'", 0);
}

Port port_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("edge end must be [id, port]", 0);
  return {j[0].get<NodeId>(), j[1].get<std::size_t>()};
}

std::string complex_text(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
  return buf;
}

std::string short_complex(Complex z) {
  char buf[64];
  if (z.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.4g", z.real());
  else
    std::snprintf(buf, sizeof buf, "%.4g%+.4gi", z.real(), z.imag());
  return buf;
}

}  // namespace

std::string to_json(const Diagram& d, int indent) {
  json nodes = json::array();
  for (const auto& [id, n] : d.nodes()) {
    json j = {{"id", id}, {"kind", kind_name(n.kind.type)}};
    if (n.kind.type == NodeType::ZBox)
      j["a"] = {n.kind.label.real(), n.kind.label.imag()};
    if (!n.kind.is_boundary()) j["arity"] = {n.n_in, n.n_out};
    if (n.kind.t_rate != 0.0) j["t"] = n.kind.t_rate;
    if (!n.tag.empty()) j["tag"] = n.tag;
    nodes.push_back(std::move(j));
  }
  json edges = json::array();
  for (const auto& [a, b] : d.edges())
    edges.push_back({{a.node, a.slot}, {b.node, b.slot}});
  json root = {{"nodes", std::move(nodes)},
               {"edges", std::move(edges)},
               {"inputs", d.inputs()},
               {"outputs", d.outputs()}};
  return root.dump(indent);
}

Diagram diagram_from_json(std::string_view text) {
  try {
    const json root = json::parse(text);
    std::map<NodeId, Node> nodes;
    for (const auto& j : root.at("nodes")) {
      Node n;
      n.id = j.at("id").get<NodeId>();
      n.kind.type = kind_from(j.at("kind").get<std::string>());
      if (j.contains("a")) {
        const auto& a = j["a"];
        if (!a.is_array() || a.size() != 2)
          throw ParseError("node " + std::to_string(n.id) + ": \"a\" must be [re, im]", 0);
        n.kind.label = {a[0].get<double>(), a[1].get<double>()};
      }
      if (j.contains("t")) n.kind.t_rate = j["t"].get<double>();
      if (j.contains("tag")) n.tag = j["tag"].get<std::string>();
      if (n.kind.type == NodeType::Input) {
        n.n_out = 1;
      } else if (n.kind.type == NodeType::Output) {
        n.n_in = 1;
      } else {
        const auto& ar = j.at("arity");
        if (!ar.is_array() || ar.size() != 2)
          throw ParseError("node " + std::to_string(n.id) + ": \"arity\" must be [n_in, n_out]", 0);
        n.n_in = ar[0].get<std::size_t>();
        n.n_out = ar[1].get<std::size_t>();
      }
      if (!nodes.emplace(n.id, n).second)
        throw ParseError("duplicate node id " + std::to_string(n.id), 0);
    }
    std::vector<std::pair<Port, Port>> edges;
    for (const auto& e : root.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("edge must have two ends", 0);
      edges.emplace_back(port_from(e[0]), port_from(e[1]));
    }
    return diagram_from_parts(std::move(nodes), std::move(edges),
                              root.at("inputs").get<std::vector<NodeId>>(),
                              root.at("outputs").get<std::vector<NodeId>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("json: ") + e.what(), 0);
  }
}

std::string to_dot(const Diagram& d) {
  std::ostringstream os;
  os << "graph zxw {\n  rankdir=LR;\n";
  for (const auto& [id, n] : d.nodes()) {
    os << "  n" << id << " [";
    switch (n.kind.type) {
      case NodeType::ZBox: {
        std::string label = short_complex(n.kind.label);
        if (n.kind.is_symbolic()) label += " e^{i" + short_complex(n.kind.t_rate) + "t}";
        os << "shape=box, style=filled, fillcolor=palegreen, label=\"" << label
           << "\"";
        break;
      }
      case NodeType::Hadamard:
        os << "shape=square, style=filled, fillcolor=yellow, label=\"\", "
              "width=0.2";
        break;
      case NodeType::W:
        os << "shape=triangle, style=filled, fillcolor=black, label=\"\", "
              "width=0.3";
        break;
      case NodeType::Input:
      case NodeType::Output: {
        const auto& list = n.kind.type == NodeType::Input ? d.inputs() : d.outputs();
        std::size_t k = 0;
        while (k < list.size() && list[k] != id) ++k;
        os << "shape=plaintext, label=\""
           << (n.kind.type == NodeType::Input ? "in" : "out") << k << "\"";
        break;
      }
    }
    if (!n.tag.empty()) os << ", tooltip=\"" << n.tag << "\"";
    os << "];\n";
  }
  for (const auto& [a, b] : d.edges())
    os << "  n" << a.node << " -- n" << b.node << " [taillabel=\"" << a.slot
       << "\", headlabel=\"" << b.slot << "\", fontsize=8];\n";
  os << "}\n";
  return os.str();
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += '\t';
      out += complex_text(m(r, c));
    }
    out += '\n';
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<Complex> row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.push_back(parse_coefficient(tok));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("row has " + std::to_string(row.size()) +
                           " entries, expected " +
                           std::to_string(rows.front().size()),
                       line_no);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix", 0);
  Matrix m(Eigen::Index(rows.size()), Eigen::Index(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m(Eigen::Index(r), Eigen::Index(c)) = rows[r][c];
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Config Config::from_env(Config base) {
  if (const char* cap = std::getenv("ZXW_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end == cap || *end != '\0' || v < 1)
      throw ParameterError(std::string("ZXW_CAP: bad value '") + cap + "'");
    base.qubit_cap = static_cast<std::size_t>(v);
  }
  if (const char* tol = std::getenv("ZXW_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(tol, &end);
    if (end == tol || *end != '\0' || !(v > 0.0))
      throw ParameterError(std::string("ZXW_TOL: bad value '") + tol + "'");
    base.tolerance = v;
  }
  return base;
}

void Config::check() const {
  if (qubit_cap < 1) throw ParameterError("qubit cap must be at least 1");
  if (!(tolerance > 0.0)) throw ParameterError("tolerance must be positive");
}

}  // namespace zxw
