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

#include "zxw/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace zxw {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Parses a leading real number; advances `s`. Returns false when none.
bool take_number(std::string_view& s, double& out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (begin != end && *begin == '+') ++begin;  // from_chars rejects '+'
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr == begin) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

PauliString PauliString::parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty Pauli string", 0);
  PauliString p;
  for (char c : s) {
    switch (c) {
      case 'I':
      case 'X':
      case 'Y':
      case 'Z':
        p.ops.push_back(static_cast<Pauli>(c));
        break;
      default:
        throw ParseError(std::string("bad Pauli letter '") + c + "'", 0);
    }
  }
  return p;
}

std::string PauliString::str() const {
  std::string s;
  for (Pauli p : ops) s.push_back(static_cast<char>(p));
  return s;
}

bool PauliString::is_identity() const {
  return std::all_of(ops.begin(), ops.end(),
                     [](Pauli p) { return p == Pauli::I; });
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::count_if(
      ops.begin(), ops.end(), [](Pauli p) { return p != Pauli::I; }));
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size())
    throw ArityError("commutes: strings of different length");
  std::size_t anti = 0;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p.ops[k] != Pauli::I && q.ops[k] != Pauli::I && p.ops[k] != q.ops[k])
      ++anti;
  return anti % 2 == 0;
}

bool PauliSum::has_real_coefficients(double tol) const {
  return std::all_of(terms.begin(), terms.end(), [tol](const PauliTerm& t) {
    return std::abs(t.alpha.imag()) <= tol;
  });
}

Complex parse_coefficient(std::string_view token) {
  std::string_view s = trim(token);
  auto bad = [&] {
    return ParseError("bad coefficient '" + std::string(token) + "'", 0);
  };
  if (s.empty()) throw bad();
  if (s.front() == '(') {
    if (s.back() != ')') throw bad();
    s = s.substr(1, s.size() - 2);
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) throw bad();
    std::string_view re_s = trim(s.substr(0, comma));
    std::string_view im_s = trim(s.substr(comma + 1));
    double re = 0, im = 0;
    if (!take_number(re_s, re) || !re_s.empty()) throw bad();
    if (!take_number(im_s, im) || !im_s.empty()) throw bad();
    return {re, im};
  }
  double first = 0;
  if (!take_number(s, first)) throw bad();
  if (s.empty()) return {first, 0.0};
  if (s == "j") return {0.0, first};
  if (s.front() != '+' && s.front() != '-') throw bad();
  const double sign = s.front() == '-' ? -1.0 : 1.0;
  s.remove_prefix(1);
  double second = 0;
  if (s == "j") return {first, sign};
  if (!take_number(s, second) || s != "j") throw bad();
  return {first, sign * second};
}

PauliSum parse_pauli_sum(std::string_view text) {
  PauliSum h;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? std::string_view::npos
                                            : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      if (j > i) fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (fields.size() != 2)
      throw ParseError("expected 'COEFF STRING', got '" + std::string(line) +
                           "'",
                       line_no);
    PauliTerm term;
    try {
      term.alpha = parse_coefficient(fields[0]);
      term.string = PauliString::parse(fields[1]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (h.terms.empty()) {
      h.m = term.string.size();
    } else if (term.string.size() != h.m) {
      throw ParseError("inconsistent length: expected " + std::to_string(h.m) +
                           " letters, got " +
                           std::to_string(term.string.size()),
                       line_no);
    }
    h.terms.push_back(std::move(term));
  }
  if (h.terms.empty()) throw ParseError("no terms", 0);
  return h;
}

std::string format_pauli_sum(const PauliSum& h) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (const auto& t : h.terms)
    os << '(' << t.alpha.real() << ',' << t.alpha.imag() << ") "
       << t.string.str() << '\n';
  return os.str();
}

Matrix pauli_matrix(Pauli p) {
  Matrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -i, i, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Matrix oracle_matrix(const PauliString& p) {
  Matrix acc = Matrix::Identity(1, 1);
  for (Pauli op : p.ops) {
    Matrix next = Eigen::kroneckerProduct(acc, pauli_matrix(op)).eval();
    acc = std::move(next);
  }
  return acc;
}

Matrix oracle_matrix(const PauliSum& h, std::size_t qubit_cap) {
  if (h.m > qubit_cap)
    throw CapExceeded("oracle_matrix: " + std::to_string(h.m) +
                      " qubits exceed the cap of " + std::to_string(qubit_cap));
  const Eigen::Index dim = Eigen::Index{1} << h.m;
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& t : h.terms) sum += t.alpha * oracle_matrix(t.string);
  return sum;
}

}  // namespace zxw
