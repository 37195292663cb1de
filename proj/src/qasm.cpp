// Copyright 2026 The qadapt Authors
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

#include "qadapt/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace qadapt {

QasmError::QasmError(const std::string& what, std::size_t line,
                     std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
      line_(line), column_(column) {}

namespace {

enum class Tok { Ident, Number, String, Symbol, Arrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        t.kind = Tok::Number;
        lex_number(t.text);
      } else if (c == '"') {
        t.kind = Tok::String;
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"') {
          t.text += advance();
        }
        if (pos_ >= src_.size()) {
          throw QasmError("unterminated string literal", t.line, t.column);
        }
        advance();
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        t.kind = Tok::Arrow;
        t.text = "->";
        advance();
        advance();
      } else if (std::string_view(";,[](){}+-*/^").find(c) !=
                 std::string_view::npos) {
        t.kind = Tok::Symbol;
        t.text = std::string(1, advance());
      } else {
        throw QasmError(std::string("unexpected character '") + c + "'",
                        t.line, t.column);
      }
      out.push_back(std::move(t));
    }
  }

private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          advance();
        }
      } else {
        return;
      }
    }
  }

  void lex_number(std::string& text) {
    const auto digits = [&] {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        text += advance();
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      text += advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      text += advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
        text += advance();
      }
      digits();
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct Register {
  std::string name;
  std::size_t size = 0;
};

/// A register operand: `q[3]` (index set) or a whole register `q`.
struct Operand {
  std::optional<std::size_t> index;
  const Token* at = nullptr;
};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Circuit run() {
    if (peek_ident("OPENQASM")) {
      next();
      const Token& version = expect(Tok::Number, "version number");
      if (version.text != "2.0" && version.text != "2") {
        throw QasmError("unsupported OPENQASM version " + version.text,
                        version.line, version.column);
      }
      expect_symbol(";");
    }
    while (cur().kind != Tok::End) {
      statement();
    }
    if (!qreg_) {
      throw QasmError("program declares no qreg", cur().line, cur().column);
    }
    Circuit circuit(qreg_->size, creg_ ? creg_->size : 0);
    for (auto& g : gates_) {
      circuit.add(std::move(g));
    }
    return circuit;
  }

private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool peek_ident(std::string_view name) const {
    return cur().kind == Tok::Ident && cur().text == name;
  }
  bool peek_symbol(std::string_view s) const {
    return cur().kind == Tok::Symbol && cur().text == s;
  }

  [[noreturn]] void fail(const std::string& what, const Token& at) const {
    throw QasmError(what, at.line, at.column);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (cur().kind != kind) {
      fail("expected " + what + ", found '" + cur().text + "'", cur());
    }
    return next();
  }

  void expect_symbol(std::string_view s) {
    if (!peek_symbol(s)) {
      fail("expected '" + std::string(s) + "', found '" + cur().text + "'",
           cur());
    }
    next();
  }

  std::size_t expect_uint() {
    const Token& t = expect(Tok::Number, "integer");
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      fail("expected integer, found '" + t.text + "'", t);
    }
    return value;
  }

  void statement() {
    const Token& head = expect(Tok::Ident, "statement");
    const std::string& name = head.text;
    if (name == "include") {
      expect(Tok::String, "file name");
      expect_symbol(";");
    } else if (name == "qreg" || name == "creg") {
      declare(name == "qreg" ? qreg_ : creg_, head);
    } else if (name == "measure") {
      measure(head);
    } else if (name == "barrier") {
      barrier();
    } else if (name == "u1" || name == "u2" || name == "u3" || name == "h" ||
               name == "cx" || name == "CX") {
      gate_call(head);
    } else {
      fail("unsupported gate or statement '" + name + "'", head);
    }
  }

  void declare(std::optional<Register>& slot, const Token& head) {
    const Token& id = expect(Tok::Ident, "register name");
    expect_symbol("[");
    const Token& size_tok = cur();
    const std::size_t size = expect_uint();
    expect_symbol("]");
    expect_symbol(";");
    if (slot) {
      fail("only one " + head.text + " is supported", head);
    }
    if (size == 0) {
      fail("register size must be positive", size_tok);
    }
    slot = Register{id.text, size};
  }

  Operand operand(const std::optional<Register>& reg, const char* kind) {
    const Token& id = expect(Tok::Ident, std::string(kind) + " operand");
    if (!reg || reg->name != id.text) {
      fail("undeclared " + std::string(kind) + " register '" + id.text + "'",
           id);
    }
    Operand op;
    op.at = &id;
    if (peek_symbol("[")) {
      next();
      const Token& idx_tok = cur();
      op.index = expect_uint();
      expect_symbol("]");
      if (*op.index >= reg->size) {
        fail("index " + std::to_string(*op.index) + " out of range for " +
                 id.text + "[" + std::to_string(reg->size) + "]",
             idx_tok);
      }
    }
    return op;
  }

  Qubit single_qubit(const Token& head) {
    const Operand op = operand(qreg_, "qubit");
    if (!op.index) {
      fail("register broadcast is not supported for '" + head.text + "'",
           *op.at);
    }
    return static_cast<Qubit>(*op.index);
  }

  void gate_call(const Token& head) {
    const std::string& name = head.text;
    std::vector<double> params;
    if (peek_symbol("(")) {
      next();
      if (!peek_symbol(")")) {
        params.push_back(expr());
        while (peek_symbol(",")) {
          next();
          params.push_back(expr());
        }
      }
      expect_symbol(")");
    }
    const std::size_t want = name == "u1" ? 1 : name == "u2" ? 2 : name == "u3" ? 3 : 0;
    if (params.size() != want) {
      fail("'" + name + "' expects " + std::to_string(want) + " parameters",
           head);
    }
    if (name == "cx" || name == "CX") {
      const Qubit c = single_qubit(head);
      expect_symbol(",");
      const Token& tpos = cur();
      const Qubit t = single_qubit(head);
      if (c == t) {
        fail("cx control and target coincide", tpos);
      }
      expect_symbol(";");
      gates_.push_back(Gate::cnot(c, t));
      return;
    }
    const Qubit q = single_qubit(head);
    expect_symbol(";");
    if (name == "u1") {
      gates_.push_back(Gate::u1(params[0], q));
    } else if (name == "u2") {
      gates_.push_back(Gate::u2(params[0], params[1], q));
    } else if (name == "u3") {
      gates_.push_back(Gate::u3(params[0], params[1], params[2], q));
    } else {
      gates_.push_back(Gate::h(q));
    }
  }

  void measure(const Token& head) {
    const Operand q = operand(qreg_, "qubit");
    expect(Tok::Arrow, "'->'");
    const Operand c = operand(creg_, "classical");
    expect_symbol(";");
    if (q.index.has_value() != c.index.has_value()) {
      fail("measure mixes indexed and whole-register operands", head);
    }
    if (q.index) {
      gates_.push_back(Gate::measure(static_cast<Qubit>(*q.index),
                                     static_cast<Clbit>(*c.index)));
      return;
    }
    if (qreg_->size != creg_->size) {
      fail("register size mismatch in measure: " +
               std::to_string(qreg_->size) + " qubits vs " +
               std::to_string(creg_->size) + " clbits",
           head);
    }
    for (std::size_t i = 0; i < qreg_->size; ++i) {
      gates_.push_back(
          Gate::measure(static_cast<Qubit>(i), static_cast<Clbit>(i)));
    }
  }

  void barrier() {
    std::vector<Qubit> qubits;
    while (true) {
      const Operand op = operand(qreg_, "qubit");
      if (op.index) {
        qubits.push_back(static_cast<Qubit>(*op.index));
      } else {
        for (std::size_t i = 0; i < qreg_->size; ++i) {
          qubits.push_back(static_cast<Qubit>(i));
        }
      }
      if (!peek_symbol(",")) {
        break;
      }
      next();
    }
    expect_symbol(";");
    gates_.push_back(Gate::barrier(std::move(qubits)));
  }

  // expr := term (('+'|'-') term)*
  double expr() {
    double v = term();
    while (peek_symbol("+") || peek_symbol("-")) {
      const bool plus = next().text == "+";
      const double rhs = term();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  double term() {
    double v = unary();
    while (peek_symbol("*") || peek_symbol("/")) {
      const bool mul = next().text == "*";
      const Token& at = cur();
      const double rhs = unary();
      if (!mul && rhs == 0.0) {
        fail("division by zero in angle expression", at);
      }
      v = mul ? v * rhs : v / rhs;
    }
    return v;
  }

  double unary() {
    if (peek_symbol("-")) {
      next();
      return -unary();
    }
    if (peek_symbol("+")) {
      next();
      return unary();
    }
    return primary();
  }

  double primary() {
    const Token& t = cur();
    if (peek_symbol("(")) {
      next();
      const double v = expr();
      expect_symbol(")");
      return v;
    }
    if (peek_ident("pi")) {
      next();
      return std::numbers::pi;
    }
    if (t.kind == Tok::Number) {
      next();
      double v = 0.0;
      const auto [ptr, ec] =
          std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        fail("malformed number '" + t.text + "'", t);
      }
      return v;
    }
    fail("expected angle expression, found '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<Register> qreg_;
  std::optional<Register> creg_;
  std::vector<Gate> gates_;
};

std::string format_angle(double v) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

std::string emit_qasm(const Circuit& circuit) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << circuit.num_qubits() << "];\n";
  if (circuit.num_clbits() > 0) {
    os << "creg c[" << circuit.num_clbits() << "];\n";
  }
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
    case GateKind::Measure:
      os << "measure q[" << g.qubits[0] << "] -> c[" << *g.clbit << "];\n";
      continue;
    case GateKind::Barrier:
      os << "barrier ";
      for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        os << (i ? "," : "") << "q[" << g.qubits[i] << ']';
      }
      os << ";\n";
      continue;
    default:
      break;
    }
    os << to_string(g.kind);
    if (!g.params.empty()) {
      os << '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        os << (i ? "," : "") << format_angle(g.params[i]);
      }
      os << ')';
    }
    os << ' ';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      os << (i ? "," : "") << "q[" << g.qubits[i] << ']';
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace qadapt
