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

#include "zxw/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "build_util.hpp"

namespace zxw {
namespace {

using Label = std::size_t;

// Dense tensor over qubit legs. labels[0] is the most significant bit of the
// flat index.
struct Tensor {
  std::vector<Label> labels;
  std::vector<Complex> data;

  std::size_t rank() const { return labels.size(); }
};

std::size_t bit_of(std::size_t index, std::size_t rank, std::size_t pos) {
  return (index >> (rank - 1 - pos)) & 1u;
}

// Reorders the legs of `t` to `order` (a permutation of t.labels).
Tensor permuted(const Tensor& t, const std::vector<Label>& order) {
  if (order == t.labels) return t;
  const std::size_t r = t.rank();
  std::vector<std::size_t> src_pos(r);
  for (std::size_t k = 0; k < r; ++k) {
    auto it = std::find(t.labels.begin(), t.labels.end(), order[k]);
    src_pos[k] = static_cast<std::size_t>(it - t.labels.begin());
  }
  Tensor out{order, std::vector<Complex>(t.data.size())};
  for (std::size_t idx = 0; idx < out.data.size(); ++idx) {
    std::size_t src = 0;
    for (std::size_t k = 0; k < r; ++k)
      src |= bit_of(idx, r, k) << (r - 1 - src_pos[k]);
    out.data[idx] = t.data[src];
  }
  return out;
}

// Sums over repeated labels (self-loops).
Tensor traced(Tensor t) {
  for (;;) {
    std::size_t p = 0, q = 0;
    bool found = false;
    for (std::size_t i = 0; i < t.rank() && !found; ++i)
      for (std::size_t j = i + 1; j < t.rank() && !found; ++j)
        if (t.labels[i] == t.labels[j]) p = i, q = j, found = true;
    if (!found) return t;
    const std::size_t r = t.rank();
    Tensor out;
    for (std::size_t k = 0; k < r; ++k)
      if (k != p && k != q) out.labels.push_back(t.labels[k]);
    out.data.assign(std::size_t{1} << out.rank(), Complex(0.0));
    for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
      if (bit_of(idx, r, p) != bit_of(idx, r, q)) continue;
      std::size_t o = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (k != p && k != q) o = (o << 1) | bit_of(idx, r, k);
      out.data[o] += t.data[idx];
    }
    t = std::move(out);
  }
}

Tensor contract(const Tensor& a, const Tensor& b) {
  std::vector<Label> shared, a_free, b_free;
  for (Label l : a.labels) {
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end())
      shared.push_back(l);
    else
      a_free.push_back(l);
  }
  for (Label l : b.labels)
    if (std::find(shared.begin(), shared.end(), l) == shared.end())
      b_free.push_back(l);

  std::vector<Label> a_order = a_free, b_order = shared;
  a_order.insert(a_order.end(), shared.begin(), shared.end());
  b_order.insert(b_order.end(), b_free.begin(), b_free.end());
  Tensor ap = permuted(a, a_order);
  Tensor bp = permuted(b, b_order);

  using RowMat =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Index rows = Eigen::Index{1} << a_free.size();
  const Eigen::Index inner = Eigen::Index{1} << shared.size();
  const Eigen::Index cols = Eigen::Index{1} << b_free.size();
  Eigen::Map<const RowMat> am(ap.data.data(), rows, inner);
  Eigen::Map<const RowMat> bm(bp.data.data(), inner, cols);

  Tensor out;
  out.labels = a_free;
  out.labels.insert(out.labels.end(), b_free.begin(), b_free.end());
  out.data.resize(static_cast<std::size_t>(rows * cols));
  Eigen::Map<RowMat> om(out.data.data(), rows, cols);
  om.noalias() = am * bm;
  return out;
}

std::size_t result_rank(const Tensor& a, const Tensor& b) {
  std::size_t shared = 0;
  for (Label l : a.labels)
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end())
      ++shared;
  return a.rank() + b.rank() - 2 * shared;
}

Tensor zbox_tensor(Complex a, std::vector<Label> legs) {
  Tensor t{std::move(legs), {}};
  const std::size_t size = std::size_t{1} << t.rank();
  t.data.assign(size, Complex(0.0));
  if (t.rank() == 0) {
    t.data[0] = 1.0 + a;
  } else {
    t.data[0] = 1.0;
    t.data[size - 1] = a;
  }
  return t;
}

class Network {
 public:
  Network(const Diagram& d, const EvalOptions& opts) : opts_(opts) {
    std::map<Port, Label> port_label;
    for (const auto& [p, q] : d.edges()) {
      const bool pb = d.node(p.node).kind.is_boundary();
      const bool qb = d.node(q.node).kind.is_boundary();
      if (pb && qb) {
        Label lp = fresh(), lq = fresh();
        port_label[p] = lp;
        port_label[q] = lq;
        tensors_.push_back(zbox_tensor(1.0, {lp, lq}));
      } else {
        Label l = fresh();
        port_label[p] = l;
        port_label[q] = l;
      }
    }
    auto label_of = [&](Port p) {
      auto it = port_label.find(p);
      if (it == port_label.end())
        throw Error("eval: port (" + std::to_string(p.node) + "," +
                    std::to_string(p.slot) + ") is unconnected");
      return it->second;
    };
    for (NodeId id : d.outputs()) open_.push_back(label_of({id, 0}));
    for (NodeId id : d.inputs()) open_.push_back(label_of({id, 0}));

    for (const auto& [id, n] : d.nodes()) {
      std::vector<Label> legs;
      for (std::size_t s = 0; s < n.arity(); ++s)
        legs.push_back(label_of({id, s}));
      switch (n.kind.type) {
        case NodeType::Input:
        case NodeType::Output:
          break;
        case NodeType::Hadamard: {
          const double r = 1.0 / std::sqrt(2.0);
          tensors_.push_back(traced(Tensor{legs, {r, r, r, -r}}));
          break;
        }
        case NodeType::W: {
          Tensor t{legs, std::vector<Complex>(8, Complex(0.0))};
          t.data[0b000] = 1.0;
          t.data[0b101] = 1.0;
          t.data[0b110] = 1.0;
          tensors_.push_back(traced(std::move(t)));
          break;
        }
        case NodeType::ZBox:
          add_zbox(zbox_label(n.kind), legs);
          break;
      }
    }
  }

  Matrix contract_all(std::size_t n_out, std::size_t n_in) {
    Tensor result = opts_.order == ContractionOrder::Greedy ? greedy()
                                                            : sequential();
    result = permuted(result, open_);
    Matrix m(Eigen::Index{1} << n_out, Eigen::Index{1} << n_in);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        m(r, c) = result.data[static_cast<std::size_t>(r * m.cols() + c)];
    return m;
  }

 private:
  Label fresh() { return next_label_++; }

  Complex zbox_label(const NodeKind& k) const {
    if (!k.is_symbolic()) return k.label;
    if (!opts_.t)
      throw ParameterError("eval: diagram depends on t but no t was given");
    return k.label_at(*opts_.t);
  }

  // Large spiders are split into a chain of rank-3 pieces.
  void add_zbox(Complex a, const std::vector<Label>& legs) {
    if (legs.size() <= 3) {
      tensors_.push_back(traced(zbox_tensor(a, legs)));
      return;
    }
    Label link = fresh();
    tensors_.push_back(traced(zbox_tensor(a, {legs[0], legs[1], link})));
    for (std::size_t i = 2; i + 2 < legs.size(); ++i) {
      Label next = fresh();
      tensors_.push_back(traced(zbox_tensor(1.0, {link, legs[i], next})));
      link = next;
    }
    tensors_.push_back(traced(
        zbox_tensor(1.0, {link, legs[legs.size() - 2], legs.back()})));
  }

  void check_rank(std::size_t r) const {
    if (r > opts_.max_rank)
      throw CapExceeded("eval: intermediate tensor of rank " +
                        std::to_string(r) + " exceeds the limit of " +
                        std::to_string(opts_.max_rank));
  }

  Tensor greedy() {
    std::vector<std::optional<Tensor>> ts(tensors_.begin(), tensors_.end());
    std::map<Label, std::vector<std::size_t>> owners;
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (Label l : ts[i]->labels) owners[l].push_back(i);
    for (;;) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t bi = 0, bj = 0;
      for (const auto& [l, who] : owners) {
        if (who.size() != 2) continue;
        std::size_t i = std::min(who[0], who[1]), j = std::max(who[0], who[1]);
        const double cost = std::ldexp(1.0, int(result_rank(*ts[i], *ts[j]))) -
                            std::ldexp(1.0, int(ts[i]->rank())) -
                            std::ldexp(1.0, int(ts[j]->rank()));
        if (cost < best || (cost == best && std::pair(i, j) < std::pair(bi, bj)))
          best = cost, bi = i, bj = j;
      }
      if (!std::isfinite(best)) break;
      check_rank(result_rank(*ts[bi], *ts[bj]));
      Tensor c = contract(*ts[bi], *ts[bj]);
      for (std::size_t k : {bi, bj}) {
        for (Label l : ts[k]->labels) {
          auto& who = owners[l];
          std::erase(who, k);
          if (who.empty()) owners.erase(l);
        }
      }
      ts[bi].reset();
      ts[bj].reset();
      ts.push_back(std::move(c));
      for (Label l : ts.back()->labels) owners[l].push_back(ts.size() - 1);
    }
    // Disconnected pieces: outer products, smallest first.
    std::vector<Tensor> rest;
    for (auto& t : ts)
      if (t) rest.push_back(std::move(*t));
    std::stable_sort(rest.begin(), rest.end(),
                     [](const Tensor& a, const Tensor& b) {
                       return a.rank() < b.rank();
                     });
    Tensor acc{{}, {Complex(1.0)}};
    for (const auto& t : rest) {
      check_rank(acc.rank() + t.rank());
      acc = contract(acc, t);
    }
    return acc;
  }

  Tensor sequential() {
    std::vector<Tensor> ts = tensors_;
    std::vector<bool> used(ts.size(), false);
    Tensor acc{{}, {Complex(1.0)}};
    for (std::size_t done = 0; done < ts.size(); ++done) {
      std::size_t pick = ts.size();
      for (std::size_t i = 0; i < ts.size() && pick == ts.size(); ++i) {
        if (used[i]) continue;
        for (Label l : ts[i].labels)
          if (std::find(acc.labels.begin(), acc.labels.end(), l) !=
              acc.labels.end()) {
            pick = i;
            break;
          }
      }
      if (pick == ts.size())
        pick = static_cast<std::size_t>(
            std::find(used.begin(), used.end(), false) - used.begin());
      used[pick] = true;
      check_rank(result_rank(acc, ts[pick]));
      acc = contract(acc, ts[pick]);
    }
    return acc;
  }

  EvalOptions opts_;
  std::vector<Tensor> tensors_;
  std::vector<Label> open_;
  Label next_label_ = 0;
};

}  // namespace

Matrix eval(const Diagram& d, const EvalOptions& opts) {
  const std::size_t boundary = d.n_inputs() + d.n_outputs();
  if (boundary > opts.qubit_cap)
    throw CapExceeded("eval: " + std::to_string(boundary) +
                      " boundary wires exceed the cap of " +
                      std::to_string(opts.qubit_cap));
  Network net(d, opts);
  return net.contract_all(d.n_outputs(), d.n_inputs());
}

Matrix eval_at(const Diagram& d, double t, std::size_t qubit_cap) {
  EvalOptions o;
  o.t = t;
  o.qubit_cap = qubit_cap;
  return eval(d, o);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ArityError("shape mismatch: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

ScalarEquivalence equal_up_to_scalar(const Matrix& a, const Matrix& b,
                                     double tol) {
  ScalarEquivalence r;
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ArityError("equal_up_to_scalar: shape mismatch");
  Eigen::Index br = 0, bc = 0;
  const double bmax = b.size() ? b.cwiseAbs().maxCoeff(&br, &bc) : 0.0;
  if (bmax <= tol) {
    r.scalar = 1.0;
    r.residual = a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
    r.equal = r.exact = r.residual <= tol;
    return r;
  }
  r.scalar = a(br, bc) / b(br, bc);
  r.residual = (a - r.scalar * b).cwiseAbs().maxCoeff();
  r.equal = r.residual <= tol && std::abs(r.scalar) > tol;
  r.exact = r.equal && std::abs(r.scalar - 1.0) <= tol;
  return r;
}

Diagram plug_basis(const Diagram& d, std::size_t wire, int bit) {
  if (wire >= d.n_inputs())
    throw ArityError("plug_basis: input " + std::to_string(wire) +
                     " out of range");
  if (bit != 0 && bit != 1) throw ParameterError("plug_basis: bit must be 0/1");
  Diagram out;
  std::vector<Port> ends;
  for (std::size_t i = 0; i < d.n_inputs(); ++i)
    ends.push_back(i == wire ? detail::basis_state(out, bit)
                             : out.add_input());
  for (Port p : out.splice(d, ends)) out.add_output(p);
  return out;
}

Diagram plug_output(const Diagram& d, std::size_t wire, int bit) {
  if (wire >= d.n_outputs())
    throw ArityError("plug_output: output " + std::to_string(wire) +
                     " out of range");
  return transpose(plug_basis(transpose(d), wire, bit));
}

Diagram resolve_time(const Diagram& d, double t) {
  Diagram out = d;
  std::vector<NodeId> ids;
  for (const auto& [id, n] : out.nodes())
    if (n.kind.is_symbolic()) ids.push_back(id);
  for (NodeId id : ids) {
    Node& n = out.node(id);
    n.kind = NodeKind::zbox(n.kind.label_at(t));
  }
  return out;
}

}  // namespace zxw
