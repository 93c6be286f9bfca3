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

#include "zxw/circuit.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace zxw {
namespace {

std::size_t arity_of(GateKind k) {
  return k == GateKind::CNOT || k == GateKind::CZ ? 2 : 1;
}

bool has_angle(GateKind k) {
  return k == GateKind::RZ || k == GateKind::RX || k == GateKind::PHASE;
}

// Applies a 1- or 2-qubit matrix to the given qubits of an n-qubit operator
// (from the left).
Matrix lift(const Matrix& g, const std::vector<std::size_t>& qubits,
            std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t k = qubits.size();
  Matrix out = Matrix::Zero(Eigen::Index(dim), Eigen::Index(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t sub_in = 0;
    for (std::size_t q : qubits) sub_in = (sub_in << 1) | ((col >> (n - 1 - q)) & 1u);
    for (std::size_t sub_out = 0; sub_out < (std::size_t{1} << k); ++sub_out) {
      const Complex v = g(Eigen::Index(sub_out), Eigen::Index(sub_in));
      if (v == Complex(0.0, 0.0)) continue;
      std::size_t row = col;
      for (std::size_t r = 0; r < k; ++r) {
        const std::size_t bit = (sub_out >> (k - 1 - r)) & 1u;
        const std::size_t shift = n - 1 - qubits[r];
        row = (row & ~(std::size_t{1} << shift)) | (bit << shift);
      }
      out(Eigen::Index(row), Eigen::Index(col)) += v;
    }
  }
  return out;
}

}  // namespace

std::string to_string(GateKind g) {
  switch (g) {
    case GateKind::H:
      return "H";
    case GateKind::RZ:
      return "RZ";
    case GateKind::RX:
      return "RX";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::CZ:
      return "CZ";
    case GateKind::PHASE:
      return "PHASE";
  }
  return "?";
}

Matrix gate_matrix(const Gate& g) {
  const Complex i(0.0, 1.0);
  const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
  const double r = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H: {
      Matrix m(2, 2);
      m << r, r, r, -r;
      return m;
    }
    case GateKind::RZ: {
      Matrix m = Matrix::Zero(2, 2);
      m(0, 0) = std::exp(-i * (g.angle / 2));
      m(1, 1) = std::exp(i * (g.angle / 2));
      return m;
    }
    case GateKind::RX: {
      Matrix m(2, 2);
      m << c, -i * s, -i * s, c;
      return m;
    }
    case GateKind::PHASE: {
      Matrix m = Matrix::Identity(2, 2);
      m(1, 1) = std::exp(i * g.angle);
      return m;
    }
    case GateKind::CNOT: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      return m;
    }
    case GateKind::CZ: {
      Matrix m = Matrix::Identity(4, 4);
      m(3, 3) = -1.0;
      return m;
    }
  }
  return Matrix::Identity(2, 2);
}

void Circuit::add(GateKind kind, std::vector<std::size_t> qubits,
                  double angle) {
  if (qubits.size() != arity_of(kind))
    throw ArityError(to_string(kind) + " acts on " +
                     std::to_string(arity_of(kind)) + " qubit(s)");
  for (std::size_t q : qubits)
    if (q >= n_qubits)
      throw ArityError("qubit " + std::to_string(q) + " out of range");
  if (qubits.size() == 2 && qubits[0] == qubits[1])
    throw ArityError("two-qubit gate on a single wire");
  gates.push_back({kind, std::move(qubits), angle});
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits != n_qubits)
    throw ArityError("append: circuits of different widths");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  global_phase += other.global_phase;
}

Matrix Circuit::unitary() const {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& g : gates) u = lift(gate_matrix(g), g.qubits, n_qubits) * u;
  return std::exp(Complex(0.0, global_phase)) * u;
}

std::string Circuit::to_text() const {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "# qubits " << n_qubits << "\n";
  os << "# global_phase " << global_phase << "\n";
  for (const auto& g : gates) {
    os << to_string(g.kind) << ' ';
    for (std::size_t k = 0; k < g.qubits.size(); ++k)
      os << (k ? "," : "") << g.qubits[k];
    if (has_angle(g.kind)) os << ' ' << g.angle;
    os << '\n';
  }
  return os.str();
}

Circuit parse_circuit(std::string_view text, std::size_t n_qubits) {
  Circuit c;
  c.n_qubits = n_qubits;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("# global_phase", 0) == 0) {
      c.global_phase = std::stod(line.substr(14));
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string name, qs;
    if (!(ls >> name)) continue;
    if (!(ls >> qs)) throw ParseError("missing qubit list", line_no);
    GateKind kind;
    if (name == "H") kind = GateKind::H;
    else if (name == "RZ") kind = GateKind::RZ;
    else if (name == "RX") kind = GateKind::RX;
    else if (name == "CNOT") kind = GateKind::CNOT;
    else if (name == "CZ") kind = GateKind::CZ;
    else if (name == "PHASE") kind = GateKind::PHASE;
    else throw ParseError("unknown gate '" + name + "'", line_no);
    std::vector<std::size_t> qubits;
    std::istringstream qss(qs);
    std::string tok;
    while (std::getline(qss, tok, ',')) {
      try {
        qubits.push_back(std::stoul(tok));
      } catch (const std::exception&) {
        throw ParseError("bad qubit index '" + tok + "'", line_no);
      }
    }
    double angle = 0.0;
    if (has_angle(kind) && !(ls >> angle))
      throw ParseError("missing angle", line_no);
    try {
      c.add(kind, std::move(qubits), angle);
    } catch (const ArityError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return c;
}

}  // namespace zxw
