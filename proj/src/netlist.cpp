#include "symcirc/netlist.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace symcirc {

namespace {

std::string operand_token(const Circuit& circuit, std::uint32_t id) {
  if (id == 0) return "C0";
  if (id == 1) return "C1";
  if (id < circuit.first_gate_id()) return "I" + std::to_string(id - 2);
  return std::to_string(id - circuit.first_gate_id());
}

std::optional<std::uint64_t> to_uint(std::string_view text) {
  if (text.empty() || (text.size() > 1 && text[0] == '0')) return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<GateKind> kind_from_token(std::string_view token) {
  if (token == "AND") return GateKind::And;
  if (token == "OR") return GateKind::Or;
  if (token == "XOR") return GateKind::Xor;
  if (token == "NOT") return GateKind::Not;
  return std::nullopt;
}

std::vector<std::string_view> tokens_of(std::string_view line, std::size_t line_no) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(' ', start);
    std::string_view token = line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    if (token.empty()) throw NetlistError(line_no, "unexpected whitespace");
    tokens.push_back(token);
    if (pos == std::string_view::npos) return tokens;
    start = pos + 1;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t pos = text.find('\n', start);
      if (pos == std::string_view::npos) {
        lines_.push_back(text.substr(start));
        break;
      }
      lines_.push_back(text.substr(start, pos - start));
      start = pos + 1;
    }
  }

  Circuit run() {
    if (lines_.empty() || lines_[0] != "SYMCIRC 1") {
      throw NetlistError(1, "unknown header, expected 'SYMCIRC 1'");
    }
    if (lines_.size() < 2) throw NetlistError(2, "missing INPUTS line");
    check_chars(lines_[1], 2);
    auto header = tokens_of(lines_[1], 2);
    std::optional<std::uint64_t> num_inputs;
    if (header.size() == 2 && header[0] == "INPUTS") num_inputs = to_uint(header[1]);
    if (!num_inputs) throw NetlistError(2, "expected 'INPUTS <count>'");

    Circuit circuit(*num_inputs);
    std::uint64_t gates = 0;
    for (std::size_t i = 2; i < lines_.size(); ++i) {
      const std::size_t line_no = i + 1;
      check_chars(lines_[i], line_no);
      auto tokens = tokens_of(lines_[i], line_no);
      if (tokens[0] == "OUTPUTS") {
        if (i + 1 != lines_.size()) throw NetlistError(line_no + 1, "content after OUTPUTS line");
        if (tokens.size() < 2) throw NetlistError(line_no, "OUTPUTS lists no wires");
        for (std::size_t t = 1; t < tokens.size(); ++t) {
          circuit.add_output(resolve(circuit, tokens[t], gates, line_no));
        }
        circuit.freeze();
        return circuit;
      }
      if (tokens[0] != "G") {
        throw NetlistError(line_no, "expected a gate record or OUTPUTS, got '" + std::string(tokens[0]) + "'");
      }
      if (tokens.size() < 3) throw NetlistError(line_no, "truncated gate record");
      auto kind = kind_from_token(tokens[2]);
      if (!kind) throw NetlistError(line_no, "unknown gate kind '" + std::string(tokens[2]) + "'");
      if (tokens.size() - 3 != arity(*kind)) {
        throw NetlistError(line_no, "arity mismatch: " + std::string(tokens[2]) + " takes " +
                                        std::to_string(arity(*kind)) + " operand(s), got " +
                                        std::to_string(tokens.size() - 3));
      }
      auto id = to_uint(tokens[1]);
      if (!id) throw NetlistError(line_no, "bad gate id '" + std::string(tokens[1]) + "'");
      if (*id < gates) throw NetlistError(line_no, "duplicate gate id " + std::to_string(*id));
      if (*id > gates) {
        throw NetlistError(line_no, "gate id " + std::to_string(*id) + " out of sequence, expected " +
                                        std::to_string(gates));
      }
      std::vector<Wire> operands;
      for (std::size_t t = 3; t < tokens.size(); ++t) operands.push_back(resolve(circuit, tokens[t], gates, line_no));
      circuit.append_raw(*kind, operands);
      ++gates;
    }
    throw NetlistError(lines_.size() + 1, "missing OUTPUTS line");
  }

 private:
  static void check_chars(std::string_view line, std::size_t line_no) {
    if (line.empty()) throw NetlistError(line_no, "empty line");
    if (line.back() == ' ' || line.back() == '\t' || line.back() == '\r') {
      throw NetlistError(line_no, "trailing whitespace");
    }
  }

  static Wire resolve(const Circuit& circuit, std::string_view token, std::uint64_t gates, std::size_t line_no) {
    if (token == "C0") return circuit.const0();
    if (token == "C1") return circuit.const1();
    if (token.front() == 'I') {
      auto j = to_uint(token.substr(1));
      if (!j) throw NetlistError(line_no, "bad input reference '" + std::string(token) + "'");
      if (*j >= circuit.num_inputs()) {
        throw NetlistError(line_no, "dangling reference to input " + std::to_string(*j));
      }
      return circuit.input(*j);
    }
    auto g = to_uint(token);
    if (!g) throw NetlistError(line_no, "bad operand '" + std::string(token) + "'");
    if (*g >= gates) {
      throw NetlistError(line_no, "reference to gate " + std::to_string(*g) +
                                      " not yet defined (netlist must be acyclic and in id order)");
    }
    return Wire{static_cast<std::uint32_t>(circuit.first_gate_id() + *g), circuit.const0().owner};
  }

  std::vector<std::string_view> lines_;
};

}  // namespace

std::string render(const Circuit& circuit) {
  if (!circuit.frozen()) {
    throw CircuitError(CircuitError::Code::Frozen, "only frozen circuits can be rendered");
  }
  std::string out = "SYMCIRC 1\nINPUTS " + std::to_string(circuit.num_inputs()) + "\n";
  const auto& nodes = circuit.nodes();
  for (std::uint32_t id = circuit.first_gate_id(); id < nodes.size(); ++id) {
    const Node& n = nodes[id];
    out += "G ";
    out += std::to_string(id - circuit.first_gate_id());
    out += ' ';
    out += kind_name(n.kind);
    out += ' ';
    out += operand_token(circuit, n.a);
    if (arity(n.kind) == 2) {
      out += ' ';
      out += operand_token(circuit, n.b);
    }
    out += '\n';
  }
  out += "OUTPUTS";
  for (Wire w : circuit.outputs()) {
    out += ' ';
    out += operand_token(circuit, w.id);
  }
  out += '\n';
  return out;
}

Circuit parse(std::string_view text) { return Parser(text).run(); }

}  // namespace symcirc
