// Copyright 2026 The lcplearn Authors
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

#include "lcpl/qasm.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <vector>

#include "lcpl/errors.hpp"

namespace lcpl {

std::string to_qasm(const Circuit& circuit) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.width()) + "];\n";
  char buf[64];
  for (const auto& g : circuit.gates()) {
    out += gate_name(g.kind);
    if (g.kind == GateKind::RZ) {
      std::snprintf(buf, sizeof buf, "(%.17g)", canonical_angle(g.theta));
      out += buf;
    }
    out += " q[" + std::to_string(g.qubit - 1) + "]";
    if (g.is_two_qubit()) out += ",q[" + std::to_string(g.target - 1) + "]";
    out += ";\n";
  }
  return out;
}

namespace {

// Cursor over a single line with comment text already removed.
class LineCursor {
 public:
  LineCursor(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }
  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  long integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 6) fail("integer too large");
    return std::stol(std::string(digits));
  }
  double real() {
    skip_space();
    std::string rest(text_.substr(pos_));
    const char* begin = rest.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    if (end == begin || errno == ERANGE) fail("expected floating-point angle");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

std::optional<GateKind> kind_from_name(const std::string& name) {
  for (auto k : kAllGateKinds) {
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  enum class Stage { Header, Include, Qreg, Body } stage = Stage::Header;
  std::optional<Circuit> circuit;
  int width = 0;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (auto c = line.find("//"); c != std::string_view::npos) line = line.substr(0, c);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineCursor cur(line, line_no);
    if (cur.at_end()) {
      if (nl == text.size()) break;
      continue;
    }

    switch (stage) {
      case Stage::Header:
        cur.expect("OPENQASM");
        cur.expect("2.0");
        cur.expect(";");
        stage = Stage::Include;
        break;
      case Stage::Include:
        cur.expect("include");
        cur.expect("\"qelib1.inc\"");
        cur.expect(";");
        stage = Stage::Qreg;
        break;
      case Stage::Qreg: {
        cur.expect("qreg");
        if (cur.identifier() != "q") cur.fail("register must be named 'q'");
        cur.expect("[");
        std::size_t at = cur.pos();
        long w = cur.integer();
        if (w < 1) {
          cur.set_pos(at);
          cur.fail("register width must be >= 1");
        }
        cur.expect("]");
        cur.expect(";");
        width = static_cast<int>(w);
        circuit.emplace(width);
        stage = Stage::Body;
        break;
      }
      case Stage::Body: {
        std::size_t name_at = (cur.skip_space(), cur.pos());
        std::string name = cur.identifier();
        auto kind = kind_from_name(name);
        if (!kind) {
          cur.set_pos(name_at);
          cur.fail("unknown gate '" + name + "'");
        }
        double theta = 0.0;
        if (*kind == GateKind::RZ) {
          cur.expect("(");
          theta = cur.real();
          cur.expect(")");
        }
        auto operand = [&]() {
          if (cur.identifier() != "q") cur.fail("unknown register");
          cur.expect("[");
          std::size_t at = cur.pos();
          long idx = cur.integer();
          if (idx >= width) {
            cur.set_pos(at);
            cur.fail("qubit offset " + std::to_string(idx) + " out of range for qreg q[" +
                     std::to_string(width) + "]");
          }
          cur.expect("]");
          return static_cast<int>(idx) + 1;
        };
        Gate g{*kind, operand(), 0, theta};
        if (*kind == GateKind::CX) {
          cur.expect(",");
          std::size_t at = (cur.skip_space(), cur.pos());
          g.target = operand();
          if (g.target == g.qubit) {
            cur.set_pos(at);
            cur.fail("cx control equals target");
          }
        }
        cur.expect(";");
        circuit->add(g);
        break;
      }
    }
    if (!cur.at_end()) cur.fail("unexpected trailing text");
    if (nl == text.size()) break;
  }
  if (!circuit) throw ParseError("missing header or qreg declaration", line_no, 1);
  return *circuit;
}

}  // namespace lcpl
