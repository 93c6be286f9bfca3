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

// Test-side reference values. Everything here is written against plain
// Eigen, without calling the library, so that library results are checked
// against an independent computation.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline const C kI{0.0, 1.0};

inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline M eye(Eigen::Index n) { return M::Identity(n, n); }

// |0..0><0..0| + a |1..1><1..1| with 2^out rows and 2^in columns.
inline M zbox(C a, int n_in, int n_out) {
  M z = M::Zero(Eigen::Index(1) << n_out, Eigen::Index(1) << n_in);
  z(0, 0) += 1.0;
  z(z.rows() - 1, z.cols() - 1) += a;
  return z;
}

inline M hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  M h(2, 2);
  h << r, r, r, -r;
  return h;
}

// W with one input and two outputs: |0> -> |00>, |1> -> |01> + |10>.
inline M w12() {
  M w = M::Zero(4, 2);
  w(0, 0) = 1.0;
  w(1, 1) = 1.0;
  w(2, 1) = 1.0;
  return w;
}

inline M cap() {
  M c = M::Zero(4, 1);
  c(0, 0) = c(3, 0) = 1.0;
  return c;
}

inline M swap() {
  M s = M::Zero(4, 4);
  s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
  return s;
}

inline M pauli(char p) {
  M m = M::Zero(2, 2);
  switch (p) {
    case 'I':
      m(0, 0) = m(1, 1) = 1.0;
      break;
    case 'X':
      m(0, 1) = m(1, 0) = 1.0;
      break;
    case 'Y':
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 'Z':
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

inline M pauli_string(const std::string& s) {
  M acc = M::Identity(1, 1);
  for (char c : s) acc = kron(acc, pauli(c));
  return acc;
}

struct Term {
  C alpha;
  std::string ops;
};

inline M hamiltonian(const std::vector<Term>& terms) {
  M acc = M::Zero(Eigen::Index(1) << terms.front().ops.size(),
                  Eigen::Index(1) << terms.front().ops.size());
  for (const auto& t : terms) acc += t.alpha * pauli_string(t.ops);
  return acc;
}

// exp(-i H t / 2) for Hermitian H by spectral decomposition.
inline M expm_h(const M& H, double t) {
  Eigen::SelfAdjointEigenSolver<M> es(H);
  const auto& ev = es.eigenvalues();
  V phases(ev.size());
  for (Eigen::Index k = 0; k < ev.size(); ++k)
    phases(k) = std::exp(C(0.0, -ev(k) * t / 2.0));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Sum of (-i t / 2)^k H^k / k! for k <= order.
inline M taylor(const M& H, int order, double t) {
  M sum = eye(H.rows()), p = eye(H.rows());
  C w = 1.0;
  for (int k = 1; k <= order; ++k) {
    p = p * H;
    w *= C(0.0, -t / 2.0) / double(k);
    sum += w * p;
  }
  return sum;
}

// First-order product formula, term 0 acting first within a step.
inline M trotter(const std::vector<Term>& terms, int steps, double t) {
  const Eigen::Index d = Eigen::Index(1) << terms.front().ops.size();
  M step = eye(d);
  for (const auto& term : terms)
    step = expm_h(term.alpha.real() * pauli_string(term.ops), t / steps) * step;
  M u = eye(d);
  for (int s = 0; s < steps; ++s) u = step * u;
  return u;
}

inline double opnorm(const M& a) {
  Eigen::JacobiSVD<M> svd(a);
  return svd.singularValues()(0);
}

inline double maxabs(const M& a) { return a.cwiseAbs().maxCoeff(); }

// min over unit phases of the Frobenius distance, reported in operator norm.
inline double dist_up_to_phase(const M& a, const M& b) {
  const C ov = (b.adjoint() * a).trace();
  const C w = std::abs(ov) > 0.0 ? ov / std::abs(ov) : C(1.0);
  return opnorm(a - w * b);
}

// a = lambda b for some lambda != 0 (or both sides zero)?
inline bool proportional(const M& a, const M& b, double tol, C* lambda = nullptr) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) {
    // 0 = 0 holds exactly; a zero and a non-zero side are not proportional.
    if (lambda) *lambda = 1.0;
    return maxabs(a) <= tol;
  }
  const C l = a(r, c) / b(r, c);
  if (lambda) *lambda = l;
  return std::abs(l) > tol && maxabs(a - l * b) <= tol;
}

// I + a |i><j| (i != j), row i scaled (i == j), or rows swapped.
inline M row_add(int d, int i, int j, C a) {
  M e = eye(d);
  e(i, j) += a;
  return e;
}
inline M row_mult(int d, int i, C a) {
  M e = eye(d);
  e(i, i) = a;
  return e;
}
inline M row_switch(int d, int i, int j) {
  M e = eye(d);
  e(i, i) = e(j, j) = 0.0;
  e(i, j) = e(j, i) = 1.0;
  return e;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }
  C complex(double r = 2.0) { return {uniform(-r, r), uniform(-r, r)}; }
  M matrix(Eigen::Index rows, Eigen::Index cols) {
    M m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex(1.0);
    return m;
  }
  M hermitian(Eigen::Index n) {
    M a = matrix(n, n);
    return (a + a.adjoint()) / 2.0;
  }
  std::string pauli_word(int m, bool allow_identity = true) {
    static const char letters[] = "IXYZ";
    for (;;) {
      std::string s;
      for (int q = 0; q < m; ++q) s += letters[integer(0, 3)];
      if (allow_identity || s.find_first_not_of('I') != std::string::npos)
        return s;
    }
  }
};

// Pauli-sum text in the `COEFF STRING` line format.
inline std::string to_text(const std::vector<Term>& terms) {
  std::string out;
  char buf[96];
  for (const auto& t : terms) {
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g) %s\n", t.alpha.real(),
                  t.alpha.imag(), t.ops.c_str());
    out += buf;
  }
  return out;
}

}  // namespace oracle
