#include "qaco/qsim/qasm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include "qaco/qsim/decompose.hpp"

namespace qaco::qsim {

namespace {

std::string format_angle(double angle) {
  if (angle == std::numbers::pi) return "pi";
  if (angle == -std::numbers::pi) return "-pi";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", angle);
  return buf;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

struct Statement {
  std::string text;
  std::size_t line;
};

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  std::string current;
  std::size_t line = 1;
  std::size_t start_line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) ++line;
      continue;
    }
    if (ch == '\n') ++line;
    if (ch == ';') {
      auto stmt = trim(current);
      if (!stmt.empty()) out.push_back({std::move(stmt), start_line});
      current.clear();
      continue;
    }
    if (trim(current).empty() && ch != ' ' && ch != '\t' && ch != '\r' && ch != '\n') start_line = line;
    current.push_back(ch);
  }
  if (!trim(current).empty()) throw QasmError(start_line, "statement missing ';'");
  return out;
}

std::size_t parse_index(const std::string& text, std::size_t line) {
  const std::string s = trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw QasmError(line, "expected a register index, got '" + text + "'");
  }
  return value;
}

double parse_angle(const std::string& text, std::size_t line) {
  const std::string s = trim(text);
  if (s == "pi") return std::numbers::pi;
  if (s == "-pi") return -std::numbers::pi;
  double value = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw QasmError(line, "cannot parse angle '" + s + "'");
  return value;
}

struct Register {
  std::string name;
  std::size_t size;
};

}  // namespace

QasmError::QasmError(std::size_t line, const std::string& message)
    : std::runtime_error("qasm line " + std::to_string(line) + ": " + message), line_(line) {}

std::string to_qasm(const Circuit& circuit) {
  const std::size_t width = circuit.qubit_count();
  const Circuit lowered = decompose_circuit(circuit);
  const std::size_t pool = lowered.qubit_count() - width;
  const auto measured = lowered.measured_qubits();

  auto name = [&](Qubit q) {
    return q < width ? "q[" + std::to_string(q) + "]" : "anc[" + std::to_string(q - width) + "]";
  };

  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << width << "];\n";
  if (pool > 0) out << "qreg anc[" << pool << "];\n";
  if (!measured.empty()) out << "creg c[" << measured.size() << "];\n";

  for (const auto& op : lowered.ops()) {
    switch (op.kind) {
      case GateKind::X: out << "x " << name(op.target); break;
      case GateKind::H: out << "h " << name(op.target); break;
      case GateKind::CNOT: out << "cx " << name(op.controls[0]) << "," << name(op.target); break;
      case GateKind::CCNOT:
        out << "ccx " << name(op.controls[0]) << "," << name(op.controls[1]) << "," << name(op.target);
        break;
      case GateKind::CPHASE:
        out << "cu1(" << format_angle(op.angle) << ") " << name(op.controls[0]) << "," << name(op.target);
        break;
      case GateKind::RESET: out << "reset " << name(op.target); break;
      case GateKind::MEASURE: {
        const auto slot = std::find(measured.begin(), measured.end(), op.target) - measured.begin();
        out << "measure " << name(op.target) << " -> c[" << slot << "]";
        break;
      }
      case GateKind::MCT: break;  // lowered away above
    }
    out << ";\n";
  }
  return out.str();
}

Circuit parse_qasm(std::string_view text) {
  const auto statements = split_statements(text);
  std::vector<Register> qregs;
  std::map<std::string, std::size_t> cregs;

  // Registers first so qubit offsets are known regardless of declaration order.
  for (const auto& st : statements) {
    const bool is_q = st.text.rfind("qreg", 0) == 0;
    const bool is_c = st.text.rfind("creg", 0) == 0;
    if (!is_q && !is_c) continue;
    const auto open = st.text.find('[');
    const auto close = st.text.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      throw QasmError(st.line, "malformed register declaration");
    }
    const std::string reg = trim(st.text.substr(4, open - 4));
    const std::size_t size = parse_index(st.text.substr(open + 1, close - open - 1), st.line);
    if (is_q) {
      qregs.push_back({reg, size});
    } else {
      cregs[reg] = size;
    }
  }

  std::map<std::string, std::pair<std::size_t, std::size_t>> offsets;  // name -> (offset, size)
  std::size_t width = 0;
  for (const auto& r : qregs) {
    offsets[r.name] = {width, r.size};
    width += r.size;
  }
  if (width == 0) throw QasmError(1, "no quantum register declared");

  auto qubit_ref = [&](const std::string& raw, std::size_t line) -> Qubit {
    const std::string ref = trim(raw);
    const auto open = ref.find('[');
    const auto close = ref.find(']');
    if (open == std::string::npos || close == std::string::npos) {
      throw QasmError(line, "expected indexed qubit, got '" + ref + "'");
    }
    const auto it = offsets.find(trim(ref.substr(0, open)));
    if (it == offsets.end()) throw QasmError(line, "unknown register in '" + ref + "'");
    const std::size_t index = parse_index(ref.substr(open + 1, close - open - 1), line);
    if (index >= it->second.second) throw QasmError(line, "index out of range in '" + ref + "'");
    return it->second.first + index;
  };

  auto split_args = [](const std::string& args) {
    std::vector<std::string> out;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
  };

  Circuit circuit(width);
  bool header_seen = false;
  for (const auto& st : statements) {
    const std::string& s = st.text;
    if (s.rfind("OPENQASM", 0) == 0) {
      if (trim(s.substr(8)) != "2.0") throw QasmError(st.line, "unsupported OpenQASM version");
      header_seen = true;
      continue;
    }
    if (!header_seen) throw QasmError(st.line, "missing OPENQASM 2.0 header");
    if (s.rfind("include", 0) == 0 || s.rfind("qreg", 0) == 0 || s.rfind("creg", 0) == 0) continue;

    std::string head;
    std::string rest;
    const auto paren = s.find('(');
    const auto space = s.find_first_of(" \t");
    if (paren != std::string::npos && (space == std::string::npos || paren < space)) {
      const auto close = s.find(')', paren);
      if (close == std::string::npos) throw QasmError(st.line, "unbalanced parenthesis");
      head = s.substr(0, close + 1);
      rest = s.substr(close + 1);
    } else {
      if (space == std::string::npos) throw QasmError(st.line, "statement without operands: '" + s + "'");
      head = s.substr(0, space);
      rest = s.substr(space);
    }

    try {
      if (head == "measure") {
        const auto arrow = rest.find("->");
        if (arrow == std::string::npos) throw QasmError(st.line, "measure without '->'");
        circuit.add(GateOp::measure(qubit_ref(rest.substr(0, arrow), st.line)));
        continue;
      }
      const auto args = split_args(rest);
      auto expect = [&](std::size_t n) {
        if (args.size() != n) throw QasmError(st.line, "'" + head + "' expects " + std::to_string(n) + " operands");
      };
      if (head == "x") {
        expect(1);
        circuit.add(GateOp::x(qubit_ref(args[0], st.line)));
      } else if (head == "h") {
        expect(1);
        circuit.add(GateOp::h(qubit_ref(args[0], st.line)));
      } else if (head == "reset") {
        expect(1);
        circuit.add(GateOp::reset(qubit_ref(args[0], st.line)));
      } else if (head == "cx") {
        expect(2);
        circuit.add(GateOp::cnot(qubit_ref(args[0], st.line), qubit_ref(args[1], st.line)));
      } else if (head == "ccx") {
        expect(3);
        circuit.add(GateOp::ccnot(qubit_ref(args[0], st.line), qubit_ref(args[1], st.line),
                                  qubit_ref(args[2], st.line)));
      } else if (head.rfind("cu1(", 0) == 0) {
        expect(2);
        const double angle = parse_angle(head.substr(4, head.size() - 5), st.line);
        circuit.add(GateOp::cphase(qubit_ref(args[0], st.line), qubit_ref(args[1], st.line), angle));
      } else {
        throw QasmError(st.line, "unsupported statement '" + head + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw QasmError(st.line, e.what());
    }
  }
  if (!header_seen) throw QasmError(1, "missing OPENQASM 2.0 header");
  return circuit;
}

}  // namespace qaco::qsim
