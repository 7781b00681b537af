#pragma once

/// @file netlist.hpp
/// @brief SYMCIRC 1 text format.
///
///   SYMCIRC 1
///   INPUTS <k>
///   G <id> <KIND> <op1> [<op2>]     one line per gate, ids 0, 1, 2, ...
///   OUTPUTS <op...>
///
/// KIND is AND, OR, XOR or NOT. An operand is a gate id, "I<j>" for input
/// j, or "C0"/"C1". Lines end with a single line feed and carry no
/// trailing whitespace. Gate ids are the circuit's construction order.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "symcirc/circuit.hpp"

namespace symcirc {

class NetlistError : public std::runtime_error {
 public:
  NetlistError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Throws CircuitError if the circuit is not frozen.
std::string render(const Circuit& circuit);

/// Returns a frozen circuit whose node list matches the text verbatim.
/// Throws NetlistError with the offending line number.
Circuit parse(std::string_view text);

}  // namespace symcirc
