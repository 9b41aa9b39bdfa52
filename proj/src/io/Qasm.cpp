// Copyright 2026 The qcc Authors
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

#include "io/Qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "ir/Errors.hpp"

namespace qcc {

namespace {

enum class Tok { Ident, Int, Real, String, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  unsigned line = 1;
  unsigned col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        t.text += advance();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      t.kind = Tok::Int;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
      if (pos_ < src_.size() && src_[pos_] == '.') {
        t.kind = Tok::Real;
        t.text += advance();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        std::size_t save = pos_;
        std::string exp;
        exp += src_[pos_++];
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) exp += src_[pos_++];
        if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) exp += src_[pos_++];
          col_ += static_cast<unsigned>(exp.size());
          t.text += exp;
          t.kind = Tok::Real;
        } else {
          pos_ = save;
        }
      }
      return t;
    }
    if (c == '"') {
      t.kind = Tok::String;
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"') t.text += advance();
      if (pos_ >= src_.size()) throw ParseError("unterminated string", t.line, t.col);
      advance();
      return t;
    }
    t.kind = Tok::Symbol;
    if (src_.substr(pos_, 2) == "->" || src_.substr(pos_, 2) == "==") {
      t.text = std::string(src_.substr(pos_, 2));
      advance();
      advance();
      return t;
    }
    if (std::string_view(";,()[]{}+-*/^<>").find(c) == std::string_view::npos) {
      throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.col);
    }
    t.text = std::string(1, advance());
    return t;
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  unsigned line_ = 1;
  unsigned col_ = 1;
};

// Exact rational or double.
struct Num {
  bool exact = true;
  Rational r = 0;
  double d = 0;

  double value() const { return exact ? boost::rational_cast<double>(r) : d; }
  bool is_zero() const { return exact ? r.numerator() == 0 : d == 0.; }
};

Num num_op(const Num& a, const Num& b, char op) {
  if (a.exact && b.exact && !(op == '/' && b.r.numerator() == 0)) {
    Num n;
    switch (op) {
      case '+': n.r = a.r + b.r; break;
      case '-': n.r = a.r - b.r; break;
      case '*': n.r = a.r * b.r; break;
      default: n.r = a.r / b.r; break;
    }
    return n;
  }
  Num n;
  n.exact = false;
  double x = a.value(), y = b.value();
  switch (op) {
    case '+': n.d = x + y; break;
    case '-': n.d = x - y; break;
    case '*': n.d = x * y; break;
    default: n.d = x / y; break;
  }
  return n;
}

// value = pi * h + r, kept split so pi multiples stay exact.
struct Val {
  Num h;
  Num r;

  double radians() const { return h.value() * std::numbers::pi + r.value(); }
  static Val real(double x) {
    Val v;
    v.r.exact = false;
    v.r.d = x;
    return v;
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  Circuit parse() {
    expect_ident("OPENQASM");
    Token ver = tok_;
    if (ver.kind != Tok::Real || ver.text != "2.0") error("expected version 2.0", ver);
    advance();
    expect_symbol(";");
    while (tok_.kind != Tok::End) statement();
    return std::move(circ_);
  }

 private:
  [[noreturn]] void error(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col);
  }
  [[noreturn]] void unsupported(const std::string& what) {
    fail(ErrorCode::UnsupportedConstruct,
         "unsupported construct '" + what + "' at line " + std::to_string(tok_.line));
  }

  void advance() { tok_ = lex_.next(); }

  bool at_symbol(const char* s) const { return tok_.kind == Tok::Symbol && tok_.text == s; }

  void expect_symbol(const char* s) {
    if (!at_symbol(s)) error(std::string("expected '") + s + "'", tok_);
    advance();
  }

  void expect_ident(const char* s) {
    if (tok_.kind != Tok::Ident || tok_.text != s) error(std::string("expected '") + s + "'", tok_);
    advance();
  }

  std::string ident() {
    if (tok_.kind != Tok::Ident) error("expected identifier", tok_);
    std::string s = tok_.text;
    advance();
    return s;
  }

  unsigned integer() {
    if (tok_.kind != Tok::Int) error("expected integer", tok_);
    unsigned v = static_cast<unsigned>(std::stoul(tok_.text));
    advance();
    return v;
  }

  void statement() {
    Token start = tok_;
    if (tok_.kind != Tok::Ident) error("expected statement", tok_);
    const std::string kw = tok_.text;
    if (kw == "include") {
      advance();
      if (tok_.kind != Tok::String) error("expected file name", tok_);
      if (tok_.text != "qelib1.inc") unsupported("include \"" + tok_.text + "\"");
      advance();
      expect_symbol(";");
      return;
    }
    if (kw == "gate" || kw == "opaque" || kw == "if" || kw == "reset") unsupported(kw);
    if (kw == "qreg" || kw == "creg") {
      advance();
      std::string name = ident();
      expect_symbol("[");
      unsigned size = integer();
      expect_symbol("]");
      expect_symbol(";");
      if (qregs_.count(name) || cregs_.count(name)) error("register redeclared: " + name, start);
      if (kw == "qreg") {
        qregs_[name] = size;
        circ_.add_q_register(name, size);
      } else {
        cregs_[name] = size;
        circ_.add_c_register(name, size);
      }
      return;
    }
    if (kw == "measure") {
      advance();
      auto q = argument(true);
      expect_symbol("->");
      auto b = argument(false);
      expect_symbol(";");
      if (q.size() != b.size()) error("measure register sizes differ", start);
      for (std::size_t i = 0; i < q.size(); ++i) circ_.add_op(Op(OpType::Measure), {q[i]}, {b[i]});
      return;
    }
    if (kw == "barrier") {
      advance();
      std::vector<UnitID> all;
      do {
        auto a = argument(true);
        all.insert(all.end(), a.begin(), a.end());
      } while (at_symbol(",") && (advance(), true));
      expect_symbol(";");
      circ_.add_op(Op::barrier(static_cast<unsigned>(all.size())), all);
      return;
    }
    gate_application(start);
  }

  std::vector<UnitID> argument(bool quantum) {
    Token t = tok_;
    std::string name = ident();
    auto& regs = quantum ? qregs_ : cregs_;
    auto it = regs.find(name);
    if (it == regs.end()) error(std::string("undeclared ") + (quantum ? "qreg " : "creg ") + name, t);
    if (at_symbol("[")) {
      advance();
      Token it_tok = tok_;
      unsigned idx = integer();
      expect_symbol("]");
      if (idx >= it->second) error("index out of range for " + name, it_tok);
      return {UnitID(name, idx)};
    }
    std::vector<UnitID> out;
    for (unsigned i = 0; i < it->second; ++i) out.emplace_back(name, i);
    return out;
  }

  void gate_application(const Token& start) {
    std::string name = ident();
    static const std::map<std::string, OpType> kGates = {
        {"u1", OpType::U1}, {"u2", OpType::U2}, {"u3", OpType::U3}, {"rx", OpType::Rx},
        {"ry", OpType::Ry}, {"rz", OpType::Rz}, {"h", OpType::H},   {"x", OpType::X},
        {"y", OpType::Y},   {"z", OpType::Z},   {"s", OpType::S},   {"sdg", OpType::Sdg},
        {"t", OpType::T},   {"tdg", OpType::Tdg}, {"cx", OpType::CX}, {"CX", OpType::CX},
        {"cz", OpType::CZ}, {"swap", OpType::SWAP}, {"ccx", OpType::CCX}, {"crz", OpType::CRz},
        {"U", OpType::U3}};
    auto g = kGates.find(name);
    if (g == kGates.end()) unsupported("gate " + name);
    std::vector<Angle> params;
    if (at_symbol("(")) {
      advance();
      if (!at_symbol(")")) {
        params.push_back(to_angle(expr()));
        while (at_symbol(",")) {
          advance();
          params.push_back(to_angle(expr()));
        }
      }
      expect_symbol(")");
    }
    const OpInfo& info = op_info(g->second);
    if (params.size() != info.n_params) {
      error(name + " expects " + std::to_string(info.n_params) + " parameters", start);
    }
    std::vector<std::vector<UnitID>> args;
    args.push_back(argument(true));
    while (at_symbol(",")) {
      advance();
      args.push_back(argument(true));
    }
    expect_symbol(";");
    if (args.size() != info.n_qubits) {
      error(name + " expects " + std::to_string(info.n_qubits) + " qubit arguments", start);
    }
    std::size_t width = 1;
    for (const auto& a : args) {
      if (a.size() == 1) continue;
      if (width != 1 && a.size() != width) error("register sizes differ in broadcast", start);
      width = a.size();
    }
    Op op(g->second, params);
    for (std::size_t k = 0; k < width; ++k) {
      std::vector<UnitID> qs;
      for (const auto& a : args) qs.push_back(a.size() == 1 ? a[0] : a[k]);
      try {
        circ_.add_op(op, qs);
      } catch (const Error& e) {
        error(e.what(), start);
      }
    }
  }

  static Angle to_angle(const Val& v) {
    if (v.h.exact && v.r.exact && v.r.r.numerator() == 0) return Angle(v.h.r);
    double half_turns = v.h.value() + v.r.value() / std::numbers::pi;
    if (!std::isfinite(half_turns)) fail(ErrorCode::InvalidArgument, "non-finite angle");
    return Angle::real(half_turns).snapped();
  }

  // expr := term (('+'|'-') term)*
  Val expr() {
    Val v = term();
    while (at_symbol("+") || at_symbol("-")) {
      char op = tok_.text[0];
      advance();
      Val w = term();
      v.h = num_op(v.h, w.h, op);
      v.r = num_op(v.r, w.r, op);
    }
    return v;
  }

  // term := unary (('*'|'/') unary)*
  Val term() {
    Val v = unary();
    while (at_symbol("*") || at_symbol("/")) {
      char op = tok_.text[0];
      Token t = tok_;
      advance();
      Val w = unary();
      if (op == '*') {
        if (v.h.is_zero()) {
          v = Val{num_op(v.r, w.h, '*'), num_op(v.r, w.r, '*')};
        } else if (w.h.is_zero()) {
          v = Val{num_op(v.h, w.r, '*'), num_op(v.r, w.r, '*')};
        } else {
          v = Val::real(v.radians() * w.radians());
        }
      } else {
        if (w.h.is_zero()) {
          if (w.r.is_zero()) error("division by zero", t);
          v = Val{num_op(v.h, w.r, '/'), num_op(v.r, w.r, '/')};
        } else {
          v = Val::real(v.radians() / w.radians());
        }
      }
    }
    return v;
  }

  Val unary() {
    if (at_symbol("-")) {
      advance();
      Val v = unary();
      Num zero;
      return Val{num_op(zero, v.h, '-'), num_op(zero, v.r, '-')};
    }
    if (at_symbol("+")) {
      advance();
      return unary();
    }
    return power();
  }

  Val power() {
    Val base = primary();
    if (at_symbol("^")) {
      advance();
      Val e = unary();
      return Val::real(std::pow(base.radians(), e.radians()));
    }
    return base;
  }

  Val primary() {
    Token t = tok_;
    if (t.kind == Tok::Int) {
      advance();
      Val v;
      v.r.r = Rational(std::stoll(t.text));
      return v;
    }
    if (t.kind == Tok::Real) {
      advance();
      return Val::real(std::stod(t.text));
    }
    if (at_symbol("(")) {
      advance();
      Val v = expr();
      expect_symbol(")");
      return v;
    }
    if (t.kind == Tok::Ident) {
      advance();
      if (t.text == "pi") {
        Val v;
        v.h.r = 1;
        return v;
      }
      static const std::map<std::string, double (*)(double)> kFuncs = {
          {"sin", [](double x) { return std::sin(x); }},  {"cos", [](double x) { return std::cos(x); }},
          {"tan", [](double x) { return std::tan(x); }},  {"exp", [](double x) { return std::exp(x); }},
          {"ln", [](double x) { return std::log(x); }},   {"sqrt", [](double x) { return std::sqrt(x); }}};
      auto f = kFuncs.find(t.text);
      if (f == kFuncs.end()) error("unknown identifier in expression: " + t.text, t);
      expect_symbol("(");
      Val arg = expr();
      expect_symbol(")");
      return Val::real(f->second(arg.radians()));
    }
    error("expected expression", t);
  }

  Lexer lex_;
  Token tok_;
  Circuit circ_;
  std::map<std::string, unsigned> qregs_;
  std::map<std::string, unsigned> cregs_;
};

std::string qasm_angle(const Angle& a) {
  if (a.is_symbolic()) fail(ErrorCode::UnsupportedGate, "symbolic parameter " + a.to_string());
  if (a.is_exact()) return "pi*" + rational_to_string(a.exact());
  char buf[40];
  std::snprintf(buf, sizeof(buf), "pi*%.17g", a.value());
  return buf;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Parser p(text);
  return p.parse();
}

Circuit load_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_qasm(ss.str());
}

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  auto declare = [&](const std::vector<UnitID>& units, const char* kw) {
    std::vector<std::string> order;
    std::map<std::string, unsigned> size;
    for (const UnitID& u : units) {
      if (!size.count(u.reg)) order.push_back(u.reg);
      size[u.reg] = std::max(size[u.reg], u.index + 1);
    }
    for (const std::string& r : order) os << kw << " " << r << "[" << size[r] << "];\n";
  };
  declare(c.qubits(), "qreg");
  declare(c.bits(), "creg");
  for (const Command& cmd : c.commands()) {
    const OpInfo& info = op_info(cmd.op.type());
    if (cmd.op.type() == OpType::Measure) {
      os << "measure " << cmd.qubits[0].repr() << " -> " << cmd.bits[0].repr() << ";\n";
      continue;
    }
    if (info.qasm_name.empty()) fail(ErrorCode::UnsupportedGate, "cannot emit " + std::string(info.name));
    os << info.qasm_name;
    if (!cmd.op.params().empty()) {
      os << "(";
      for (std::size_t i = 0; i < cmd.op.params().size(); ++i) {
        if (i) os << ",";
        os << qasm_angle(cmd.op.params()[i]);
      }
      os << ")";
    }
    for (std::size_t i = 0; i < cmd.qubits.size(); ++i) os << (i ? "," : " ") << cmd.qubits[i].repr();
    os << ";\n";
  }
  return os.str();
}

}  // namespace qcc
