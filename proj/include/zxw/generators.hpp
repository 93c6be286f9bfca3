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

#include <span>

#include "zxw/diagram.hpp"

namespace zxw {

/// Single-generator diagram with boundary nodes attached.
///
/// Legal arities: Hadamard 1->1, W 1->2 (or 2->1 for the flipped node), Z-box
/// any n->m with n+m >= 1. Throws ArityError otherwise.
Diagram make_generator(const NodeKind& kind, std::size_t n_in,
                       std::size_t n_out);

/// `f` then `g`: eval(compose_seq(f, g)) = eval(g) * eval(f).
Diagram compose_seq(const Diagram& f, const Diagram& g);
/// Left-to-right sequential composition of several diagrams.
Diagram compose_seq(std::span<const Diagram> ds);
/// Side by side; eval is the Kronecker product with `f` as the major factor.
Diagram compose_par(const Diagram& f, const Diagram& g);
Diagram compose_par(std::span<const Diagram> ds);
/// Exchanges inputs and outputs (the vertically flipped diagram).
Diagram transpose(const Diagram& d);

// Plain wiring.
Diagram identity(std::size_t n = 1);
Diagram swap();
Diagram cap();  // 0 -> 2
Diagram cup();  // 2 -> 0
/// Permutation of n wires: input i is routed to output perm[i].
Diagram permutation(std::span<const std::size_t> perm);

// Z-boxes and derived green notation.
Diagram zbox(Complex a, std::size_t n_in, std::size_t n_out);
/// Green phase spider: Z-box labelled exp(i*alpha).
Diagram green(double alpha, std::size_t n_in, std::size_t n_out);
/// The zero-legged diagram with value s.
Diagram scalar(Complex s);

/// Hadamard 1 -> 1.
Diagram hadamard();
/// The W generator 1 -> 2.
Diagram w_node();

/// Association shapes for building the n-ary W spider from binary W nodes.
enum class WTree { LeftComb, RightComb, Balanced };

/// 1 -> m W spider, |0> -> |0..0>, |1> -> sum of one-hot states.
/// Throws ArityError for m = 0.
Diagram w_spider(std::size_t m, WTree shape = WTree::LeftComb);

/// Triangle [[1,1],[0,1]] and its inverse [[1,-1],[0,1]].
Diagram triangle();
Diagram inverse_triangle();
/// [[1,a],[0,1]]; a = 1 is the triangle and a = -1 its inverse.
Diagram weighted_triangle(Complex a);

/// Pink spider, the integer-rescaled X spider: sum over basis states whose
/// total Hamming weight is congruent to tau/pi mod 2. Only tau in {0, pi}.
Diagram pink(double tau, std::size_t n_in, std::size_t n_out);

/// Computational basis states and effects.
Diagram ket(int bit);
Diagram bra(int bit);

/// Pauli X as the pink pi spider.
Diagram pauli_x();
/// V = HSH and V^dagger = HS^daggerH.
Diagram v_gate();
Diagram v_dagger();

/// n -> 1 And box: |x> -> |x_1 & ... & x_n>. n = 0 yields |1>.
Diagram and_box(std::size_t n = 2);

/// Tags every node of `d` with `tag` (used to keep provenance readable).
Diagram tagged(Diagram d, const std::string& tag);

}  // namespace zxw
