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

#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "zxw/controlled.hpp"
#include "zxw/eval.hpp"

using namespace zxw;
using oracle::C;
using oracle::M;
using Spec = ElementaryMatrixSpec;

namespace {

M plug_value(const Diagram& d) { return eval(d); }

M basis(int dim, int k) {
  M v = M::Zero(dim, 1);
  v(k, 0) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("elementary specs produce the textbook matrices") {
  const C a(0.5, -2.0);
  CHECK(oracle::maxabs(Spec::row_mult(2, a).matrix(2) - oracle::row_mult(4, 2, a)) == 0.0);
  CHECK(oracle::maxabs(Spec::row_add(1, 3, a).matrix(2) - oracle::row_add(4, 1, 3, a)) == 0.0);
  CHECK(oracle::maxabs(Spec::row_switch(0, 2).matrix(2) - oracle::row_switch(4, 0, 2)) == 0.0);
}

TEST_CASE("every controlled elementary matrix on two qubits honours the contract") {
  oracle::Rng rng(41);
  const int d = 4;
  for (int i = 0; i < d; ++i) {
    const C a = rng.complex();
    auto c = controlled_elementary(Spec::row_mult(std::size_t(i), a), 2);
    CHECK(oracle::maxabs(plug_value(discharge(c)) - oracle::row_mult(d, i, a)) <= 1e-10);
    CHECK(oracle::maxabs(plug_value(idle(c)) - oracle::eye(d)) <= 1e-10);
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      INFO("i=" << i << " j=" << j);
      auto add = controlled_elementary(Spec::row_add(std::size_t(i), std::size_t(j), a), 2);
      CHECK(oracle::maxabs(plug_value(discharge(add)) - oracle::row_add(d, i, j, a)) <= 1e-10);
      CHECK(oracle::maxabs(plug_value(idle(add)) - oracle::eye(d)) <= 1e-10);
      auto sw = controlled_elementary(Spec::row_switch(std::size_t(i), std::size_t(j)), 2);
      CHECK(oracle::maxabs(plug_value(discharge(sw)) - oracle::row_switch(d, i, j)) <= 1e-10);
      CHECK(oracle::maxabs(plug_value(idle(sw)) - oracle::eye(d)) <= 1e-10);
    }
  }
}

TEST_CASE("controlled elementary matrices on three qubits") {
  oracle::Rng rng(42);
  for (int k = 0; k < 8; ++k) {
    const int i = rng.integer(0, 7);
    int j = rng.integer(0, 7);
    if (j == i) j = (j + 3) % 8;
    const C a = rng.complex();
    auto add = controlled_elementary(Spec::row_add(std::size_t(i), std::size_t(j), a), 3);
    CHECK(oracle::maxabs(eval(discharge(add)) - oracle::row_add(8, i, j, a)) <= 1e-10);
    auto sw = controlled_elementary(Spec::row_switch(std::size_t(i), std::size_t(j)), 3);
    CHECK(oracle::maxabs(eval(discharge(sw)) - oracle::row_switch(8, i, j)) <= 1e-10);
  }
}

TEST_CASE("bad elementary specs are rejected") {
  CHECK_THROWS_AS(controlled_elementary(Spec::row_add(1, 1, 2.0), 2), ParameterError);
  CHECK_THROWS_AS(controlled_elementary(Spec::row_mult(4, 2.0), 2), ParameterError);
  CHECK_THROWS_AS(controlled_elementary(Spec::row_switch(0, 9), 3), ParameterError);
}

TEST_CASE("decomposition reproduces random and singular matrices") {
  oracle::Rng rng(43);
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k < 4; ++k) {
      M mat = rng.matrix(1 << m, 1 << m);
      if (k == 1) mat.row(0) = 2.0 * mat.row(1 % (1 << m));       // rank deficient
      if (k == 2) mat.col(0).setZero();                            // zero column
      if (k == 3) mat = M::Zero(1 << m, 1 << m);                   // zero matrix
      const auto specs = decompose_elementary(mat);
      INFO("m=" << m << " case " << k << " factors " << specs.size());
      // Test-side product of the factors.
      M prod = oracle::eye(1 << m);
      for (const auto& s : specs) prod = prod * s.matrix(std::size_t(m));
      CHECK(oracle::maxabs(prod - mat) <= 1e-9);
      CHECK(oracle::maxabs(product_of(specs, std::size_t(m)) - mat) <= 1e-9);
    }
  }
  const M d = M(Eigen::Vector2cd(1.0, 5.0).asDiagonal());
  const auto specs = decompose_elementary(d);
  REQUIRE(specs.size() == 1);
  CHECK(specs[0].kind == Spec::Kind::RowMult);
  CHECK(specs[0].i == 1);
  CHECK(std::abs(specs[0].a - C(5.0)) <= 1e-12);
  CHECK(decompose_elementary(oracle::eye(4)).empty());
}

TEST_CASE("non power-of-two shapes are rejected") {
  CHECK_THROWS_AS(qubits_of_square(M::Zero(3, 3)), ArityError);
  CHECK_THROWS_AS(controlled_matrix(M::Zero(2, 4)), ArityError);
  CHECK(qubits_of_square(M::Zero(8, 8)) == 3);
}

TEST_CASE("controlled matrices honour both plug conditions") {
  oracle::Rng rng(44);
  for (int m = 1; m <= 3; ++m) {
    const M mat = rng.matrix(1 << m, 1 << m);
    auto c = controlled_matrix(mat);
    CHECK(c.kind == ControlledKind::Matrix);
    CHECK(c.m == std::size_t(m));
    CHECK(c.diagram.n_inputs() == std::size_t(m) + 1);
    CHECK(oracle::maxabs(eval(discharge(c)) - mat) <= 1e-9);
    CHECK(oracle::maxabs(eval(idle(c)) - oracle::eye(1 << m)) <= 1e-9);
    auto r = check_contract(c, mat);
    CHECK(r.ok);
  }
}

TEST_CASE("controlled normal form states") {
  oracle::Rng rng(45);
  for (int m = 1; m <= 3; ++m) {
    const M v = rng.matrix(1 << m, 1);
    auto c = controlled_state_normal_form(v.col(0));
    CHECK(c.kind == ControlledKind::State);
    CHECK(c.diagram.n_inputs() == 1);
    CHECK(oracle::maxabs(eval(discharge(c)) - v) <= 1e-10);
    CHECK(oracle::maxabs(eval(idle(c)) - basis(1 << m, 0)) <= 1e-10);
  }
  CHECK_THROWS_AS(controlled_state_normal_form(Eigen::VectorXcd::Zero(3)), ArityError);
}

TEST_CASE("controlled product applies the last factor first") {
  oracle::Rng rng(46);
  const M a = rng.matrix(2, 2), b = rng.matrix(2, 2), c = rng.matrix(2, 2);
  const ControlledDiagram parts[] = {controlled_matrix(a), controlled_matrix(b),
                                     controlled_matrix(c)};
  auto p = controlled_product(parts);
  CHECK(oracle::maxabs(eval(discharge(p)) - a * b * c) <= 1e-9);
  CHECK(oracle::maxabs(eval(idle(p)) - oracle::eye(2)) <= 1e-9);
}

TEST_CASE("controlled identity") {
  auto c = controlled_identity(2);
  CHECK(oracle::maxabs(eval(discharge(c)) - oracle::eye(4)) <= 1e-12);
  CHECK(oracle::maxabs(eval(idle(c)) - oracle::eye(4)) <= 1e-12);
}

TEST_CASE("controlled sums of matrices and states") {
  oracle::Rng rng(47);
  for (int k = 1; k <= 4; ++k) {
    std::vector<ControlledDiagram> cm, cs;
    std::vector<Complex> w;
    M ms = M::Zero(4, 4), vs = M::Zero(4, 1);
    for (int i = 0; i < k; ++i) {
      const M mat = rng.matrix(4, 4), v = rng.matrix(4, 1);
      const C c = rng.complex();
      cm.push_back(controlled_matrix(mat));
      cs.push_back(controlled_state_normal_form(v.col(0)));
      w.push_back(c);
      ms += c * mat;
      vs += c * v;
    }
    auto sm = controlled_sum_matrices(cm, w);
    auto ss = controlled_sum_states(cs, w);
    CHECK(oracle::maxabs(eval(discharge(sm)) - ms) <= 1e-9);
    CHECK(oracle::maxabs(eval(idle(sm)) - oracle::eye(4)) <= 1e-9);
    CHECK(oracle::maxabs(eval(discharge(ss)) - vs) <= 1e-9);
    CHECK(oracle::maxabs(eval(idle(ss)) - basis(4, 0)) <= 1e-9);
  }
}

TEST_CASE("sum arguments are validated") {
  const ControlledDiagram one[] = {controlled_identity(1)};
  const Complex two[] = {1.0, 2.0};
  CHECK_THROWS_AS(controlled_sum_matrices(one, two), ArityError);
  const ControlledDiagram mixed[] = {controlled_identity(1), controlled_identity(2)};
  CHECK_THROWS_AS(controlled_sum_matrices(mixed, two), ArityError);
}

TEST_CASE("sum of two normal forms") {
  oracle::Rng rng(48);
  const M v1 = rng.matrix(8, 1), v2 = rng.matrix(8, 1);
  const C a = rng.complex(), b = rng.complex();
  CHECK(oracle::maxabs(eval(sum_normal_forms(v1.col(0), v2.col(0), a, b)) - (a * v1 + b * v2)) <=
        1e-10);
}

TEST_CASE("contract check detects a wrong target") {
  oracle::Rng rng(49);
  const M mat = rng.matrix(2, 2);
  auto c = controlled_matrix(mat);
  auto r = check_contract(c, mat + M::Identity(2, 2));
  CHECK_FALSE(r.ok);
  CHECK(r.discharge_residual > 0.5);
  CHECK(r.idle_residual <= 1e-9);
}
