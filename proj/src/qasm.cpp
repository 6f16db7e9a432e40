// Copyright 2026 The GASP Authors
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

#include "gasp/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <vector>

namespace gasp {

namespace {

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Recursive-descent evaluator for angle expressions: + - * / ( ) pi numbers.
class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  double parse() {
    const double v = sum();
    skip_ws();
    if (pos_ != s_.size()) fail();
    return v;
  }

 private:
  double sum() {
    double v = product();
    for (;;) {
      skip_ws();
      if (accept('+')) v += product();
      else if (accept('-')) v -= product();
      else return v;
    }
  }
  double product() {
    double v = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) v *= unary();
      else if (accept('/')) v /= unary();
      else return v;
    }
  }
  double unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }
  double primary() {
    skip_ws();
    if (accept('(')) {
      const double v = sum();
      skip_ws();
      if (!accept(')')) fail();
      return v;
    }
    if (s_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return kPi;
    }
    const std::string rest(s_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail();
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail() const {
    throw QasmError("malformed angle expression '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

struct RegisterRef {
  std::string name;
  int index;
};

RegisterRef parse_operand(std::string_view s) {
  s = trim(s);
  const auto open = s.find('[');
  const auto close = s.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      trim(s.substr(close + 1)).size() != 0) {
    throw QasmError("malformed qubit operand '" + std::string(s) + "'");
  }
  const std::string idx(trim(s.substr(open + 1, close - open - 1)));
  char* end = nullptr;
  const long v = std::strtol(idx.c_str(), &end, 10);
  if (idx.empty() || *end != '\0' || v < 0) {
    throw QasmError("malformed qubit index '" + idx + "'");
  }
  return {std::string(trim(s.substr(0, open))), static_cast<int>(v)};
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.substr(i, 2) == "//") {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

}  // namespace

std::string to_qasm(const Individual& ind) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "// little-endian: q[k] is bit k of the basis index\n";
  out += "qreg q[" + std::to_string(ind.n_qubits()) + "];\n";
  for (const Gene& g : ind.genes()) {
    if (g.kind == GateKind::CNOT) {
      out += "cx q[" + std::to_string(*g.control) + "],q[" + std::to_string(g.target) + "];\n";
    } else {
      out += std::string(gate_name(g.kind)) + "(" + format_angle(*g.angle) + ") q[" +
             std::to_string(g.target) + "];\n";
    }
  }
  return out;
}

Individual parse_qasm(std::string_view text) {
  const std::string clean = strip_comments(text);
  std::optional<std::string> reg_name;
  int n_qubits = 0;
  bool saw_header = false;
  std::vector<Gene> genes;

  std::size_t start = 0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    if (clean[i] != ';') continue;
    const std::string_view stmt = trim(std::string_view(clean).substr(start, i - start));
    start = i + 1;
    if (stmt.empty()) continue;

    std::size_t name_end = 0;
    while (name_end < stmt.size() &&
           (std::isalnum(static_cast<unsigned char>(stmt[name_end])) || stmt[name_end] == '_')) {
      ++name_end;
    }
    const std::string name(stmt.substr(0, name_end));
    std::string_view rest = trim(stmt.substr(name_end));

    if (name == "OPENQASM") {
      if (trim(rest) != "2.0") throw QasmError("unsupported OpenQASM version '" + std::string(rest) + "'");
      saw_header = true;
      continue;
    }
    if (name == "include" || name == "creg" || name == "barrier" || name == "measure") continue;
    if (name == "qreg") {
      if (reg_name) throw QasmError("only one quantum register is supported");
      const RegisterRef r = parse_operand(rest);
      if (r.index < 1) throw QasmError("quantum register must have at least one qubit");
      reg_name = r.name;
      n_qubits = r.index;
      continue;
    }

    std::optional<double> angle;
    if (!rest.empty() && rest.front() == '(') {
      std::size_t close = 0;
      for (int level = 0; close < rest.size(); ++close) {
        if (rest[close] == '(') ++level;
        if (rest[close] == ')' && --level == 0) break;
      }
      if (close == rest.size()) throw QasmError("unbalanced parenthesis in '" + std::string(stmt) + "'");
      angle = ExprParser(rest.substr(1, close - 1)).parse();
      rest = trim(rest.substr(close + 1));
    }

    GateKind kind;
    if (name == "rx") kind = GateKind::RX;
    else if (name == "ry") kind = GateKind::RY;
    else if (name == "rz") kind = GateKind::RZ;
    else if (name == "cx" || name == "CX") kind = GateKind::CNOT;
    else throw QasmError("unsupported gate '" + name + "'");

    if (!reg_name) throw QasmError("gate '" + name + "' before qreg declaration");
    std::vector<int> qubits;
    for (std::string_view op : split_commas(rest)) {
      const RegisterRef r = parse_operand(op);
      if (r.name != *reg_name) throw QasmError("unknown register '" + r.name + "'");
      if (r.index >= n_qubits) throw QasmError("qubit index " + std::to_string(r.index) + " out of range");
      qubits.push_back(r.index);
    }

    if (kind == GateKind::CNOT) {
      if (angle || qubits.size() != 2) throw QasmError("cx takes two qubits and no parameter");
      if (qubits[0] == qubits[1]) throw QasmError("cx control equals target");
      genes.push_back(Gene::cnot(qubits[0], qubits[1]));
    } else {
      if (!angle || qubits.size() != 1) throw QasmError(name + " takes one angle and one qubit");
      if (!std::isfinite(*angle)) throw QasmError("non-finite angle in '" + std::string(stmt) + "'");
      genes.push_back(Gene::rotation(kind, qubits[0], wrap_angle(*angle)));
    }
  }
  if (!trim(std::string_view(clean).substr(start)).empty()) {
    throw QasmError("trailing statement without ';'");
  }
  if (!saw_header) throw QasmError("missing OPENQASM 2.0 header");
  if (!reg_name) throw QasmError("missing qreg declaration");
  return Individual(n_qubits, std::move(genes));
}

}  // namespace gasp
