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
#include "random_diagram.hpp"
#include "zxw/eval.hpp"
#include "zxw/generators.hpp"

using namespace zxw;
using oracle::C;
using oracle::M;

TEST_CASE("sequential composition is the matrix product") {
  oracle::Rng rng(21);
  const C a = rng.complex(), b = rng.complex();
  const Diagram d = compose_seq(compose_seq(zbox(a, 1, 1), hadamard()), zbox(b, 1, 1));
  const M want = oracle::zbox(b, 1, 1) * oracle::hadamard() * oracle::zbox(a, 1, 1);
  CHECK(oracle::maxabs(eval(d) - want) <= 1e-12);
}

TEST_CASE("parallel composition is the Kronecker product") {
  const C a(0.3, 0.9);
  const M want = oracle::kron(oracle::hadamard(), oracle::zbox(a, 1, 2));
  CHECK(oracle::maxabs(eval(compose_par(hadamard(), zbox(a, 1, 2))) - want) <= 1e-12);
}

TEST_CASE("greedy and sequential contraction agree") {
  oracle::Rng rng(22);
  for (int k = 0; k < 25; ++k) {
    const Diagram d = testutil::random_diagram(rng, false);
    EvalOptions seq;
    seq.order = ContractionOrder::Sequential;
    CHECK(oracle::maxabs(eval(d) - eval(d, seq)) <= 1e-10);
  }
}

TEST_CASE("transpose evaluates to the matrix transpose") {
  oracle::Rng rng(23);
  for (int k = 0; k < 10; ++k) {
    const Diagram d = testutil::random_diagram(rng, false);
    CHECK(oracle::maxabs(eval(transpose(d)) - eval(d).transpose()) <= 1e-10);
  }
}

TEST_CASE("snake equation: cap then cup is the identity wire") {
  const Diagram left = compose_par(identity(1), cap());
  const Diagram right = compose_par(cup(), identity(1));
  CHECK(oracle::maxabs(eval(compose_seq(left, right)) - oracle::eye(2)) <= 1e-12);
}

TEST_CASE("closed loops are traced") {
  // cap followed by cup is the loop value 2.
  const M v = eval(compose_seq(cap(), cup()));
  REQUIRE(v.size() == 1);
  CHECK(std::abs(v(0, 0) - C(2.0)) <= 1e-12);
  // A Z-box whose two legs are joined: trace of diag(1, a) = 1 + a.
  Diagram d;
  NodeId z = d.add_zbox(C(0.5, 2.0), 1, 1);
  d.link({z, 0}, {z, 1});
  CHECK(std::abs(eval(d)(0, 0) - C(1.5, 2.0)) <= 1e-12);
}

TEST_CASE("high-arity Z-boxes are split without changing the value") {
  const C a(-0.7, 0.2);
  CHECK(oracle::maxabs(eval(zbox(a, 3, 3)) - oracle::zbox(a, 3, 3)) <= 1e-12);
  CHECK(oracle::maxabs(eval(zbox(a, 0, 5)) - oracle::zbox(a, 0, 5)) <= 1e-12);
}

TEST_CASE("symbolic labels need a time value") {
  const Diagram d = make_generator(NodeKind::zbox_t(1.0, 2.0), 1, 1);
  CHECK(d.is_symbolic());
  CHECK_THROWS_AS(eval(d), ParameterError);
  const M at = eval_at(d, 0.3);
  CHECK(std::abs(at(1, 1) - std::exp(C(0.0, 0.6))) <= 1e-12);
  CHECK_FALSE(resolve_time(d, 0.3).is_symbolic());
  CHECK(oracle::maxabs(eval(resolve_time(d, 0.3)) - at) <= 1e-15);
}

TEST_CASE("boundary cap is enforced") {
  EvalOptions small;
  small.qubit_cap = 3;
  CHECK_THROWS_AS(eval(identity(2), small), CapExceeded);
  CHECK_NOTHROW(eval(compose_par(identity(1), hadamard()), EvalOptions{}));
}

TEST_CASE("intermediate rank guard") {
  EvalOptions tight;
  tight.max_rank = 2;
  CHECK_THROWS_AS(eval(zbox(1.0, 2, 2), tight), CapExceeded);
}

TEST_CASE("equal_up_to_scalar classification") {
  oracle::Rng rng(24);
  const M b = rng.matrix(4, 4);
  const C lambda(0.3, -1.2);
  auto same = equal_up_to_scalar(b, b);
  CHECK(same.equal);
  CHECK(same.exact);
  auto scaled = equal_up_to_scalar(lambda * b, b);
  CHECK(scaled.equal);
  CHECK_FALSE(scaled.exact);
  CHECK(std::abs(scaled.scalar - lambda) <= 1e-12);
  M other = b;
  other(0, 1) += 0.5;
  CHECK_FALSE(equal_up_to_scalar(other, b).equal);
  CHECK_FALSE(equal_up_to_scalar(M::Zero(4, 4), b).equal);
  CHECK_THROWS_AS(equal_up_to_scalar(b, M::Zero(2, 2)), ArityError);
}

TEST_CASE("plugging basis states selects columns and rows") {
  oracle::Rng rng(25);
  const C a = rng.complex();
  const Diagram d = compose_par(zbox(a, 1, 1), hadamard());
  const M full = eval(d);
  for (int bit = 0; bit < 2; ++bit) {
    const M plugged = eval(plug_basis(d, 0, bit));
    M want(4, 2);
    for (int c = 0; c < 2; ++c) want.col(c) = full.col(bit * 2 + c);
    CHECK(oracle::maxabs(plugged - want) <= 1e-12);
    const M capped = eval(plug_output(d, 1, bit));
    M rows(2, 4);
    for (int r = 0; r < 2; ++r) rows.row(r) = full.row(r * 2 + bit);
    CHECK(oracle::maxabs(capped - rows) <= 1e-12);
  }
  CHECK_THROWS_AS(plug_basis(d, 5, 0), ArityError);
  CHECK_THROWS_AS(plug_basis(d, 0, 3), ParameterError);
}

TEST_CASE("scalars multiply through") {
  const Diagram d = compose_par(hadamard(), scalar(C(0.0, 2.0)));
  CHECK(oracle::maxabs(eval(d) - C(0.0, 2.0) * oracle::hadamard()) <= 1e-12);
}
