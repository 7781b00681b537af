#pragma once

/// @file circuit.hpp
/// @brief Gate-DAG over fan-in-2 Boolean gates with structural hashing and
/// constant folding.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symcirc {

enum class GateKind : std::uint8_t { Const0, Const1, Input, And, Or, Xor, Not };

/// Number of operands a node of this kind carries.
constexpr std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::And:
    case GateKind::Or:
    case GateKind::Xor:
      return 2;
    case GateKind::Not:
      return 1;
    default:
      return 0;
  }
}

/// True for the kinds counted by size() and depth().
constexpr bool is_logic(GateKind kind) { return arity(kind) > 0; }

std::string_view kind_name(GateKind kind);

/// Handle to one node of a Circuit. The owner tag identifies the circuit
/// lineage the wire was created in; copies of a circuit share the tag.
struct Wire {
  std::uint32_t id = 0;
  std::uint64_t owner = 0;

  friend bool operator==(const Wire&, const Wire&) = default;
  friend auto operator<=>(const Wire&, const Wire&) = default;
};

struct Node {
  GateKind kind = GateKind::Const0;
  std::uint32_t a = 0;  // operand ids, unused slots are 0
  std::uint32_t b = 0;

  friend bool operator==(const Node&, const Node&) = default;
};

class CircuitError : public std::runtime_error {
 public:
  enum class Code { Arity, ForeignWire, Frozen, NoOutputs, BadAssignment, BadKind };

  CircuitError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

/// Acyclic gate graph. Node 0 is CONST_0, node 1 is CONST_1, nodes
/// 2..2+k-1 are the k inputs, and gates follow in creation order. Every
/// gate's operands have strictly smaller ids.
///
/// Gates built through add_gate() are hash-consed and constant-folded.
/// A frozen circuit is immutable and safe for concurrent readers.
class Circuit {
 public:
  explicit Circuit(std::size_t num_inputs = 0);

  Wire const0() const { return wire(0); }
  Wire const1() const { return wire(1); }
  Wire constant(bool value) const { return value ? const1() : const0(); }

  /// Builds (or reuses) a gate computing kind(operands). Returns an existing
  /// wire whenever folding or structural hashing applies.
  Wire add_gate(GateKind kind, std::span<const Wire> operands);

  Wire land(Wire x, Wire y) { return add_binary(GateKind::And, x, y); }
  Wire lor(Wire x, Wire y) { return add_binary(GateKind::Or, x, y); }
  Wire lxor(Wire x, Wire y) { return add_binary(GateKind::Xor, x, y); }
  Wire lnot(Wire x);

  /// Appends a gate verbatim: arity and acyclicity are checked, but no
  /// folding or hashing is applied. Used by deserialization.
  Wire append_raw(GateKind kind, std::span<const Wire> operands);

  void add_output(Wire w);
  void set_outputs(std::span<const Wire> outputs);

  /// Capacity hint for `gates` further gates. No effect once frozen.
  void reserve(std::size_t gates);

  /// Makes the circuit immutable. Idempotent. Requires at least one output.
  void freeze();
  bool frozen() const { return frozen_; }

  std::size_t num_inputs() const { return num_inputs_; }
  std::size_t num_nodes() const { return nodes_.size(); }
  /// Id of the first gate node; gate ordinals are id - first_gate_id().
  std::uint32_t first_gate_id() const { return static_cast<std::uint32_t>(2 + num_inputs_); }

  Wire input(std::size_t index) const;
  std::vector<Wire> inputs() const;
  const std::vector<Wire>& outputs() const { return outputs_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(Wire w) const;

  bool owns(Wire w) const { return w.owner == owner_ && w.id < nodes_.size(); }
  bool is_constant(Wire w) const { return w.id < 2; }

  /// Logic gate count (INPUT and CONST nodes excluded).
  std::size_t size() const;
  /// Longest path, in logic gates, from any source to any output.
  std::size_t depth() const;
  std::vector<std::size_t> output_depths() const;
  /// Per-node depth in logic gates (sources are 0).
  std::vector<std::uint32_t> node_depths() const;

  /// Output bits for one assignment; assignment[i] drives input i.
  std::vector<bool> evaluate(std::span<const bool> assignment) const;
  std::vector<bool> evaluate(const std::vector<bool>& assignment) const;

  /// Bit-parallel evaluation: word i carries 64 independent values of input
  /// i; returns one word per output.
  std::vector<std::uint64_t> evaluate_words(std::span<const std::uint64_t> input_words) const;

  /// Copy with gate `gate_id` changed to another binary kind, bypassing
  /// hashing. Used for mutation testing. The result is frozen.
  Circuit with_gate_kind(std::uint32_t gate_id, GateKind kind) const;

  /// Copy that keeps only nodes reachable from the outputs, renumbered
  /// preserving relative order. `old_to_new` (if given) receives the id map,
  /// with removed nodes mapped to UINT32_MAX.
  Circuit sweep(std::vector<std::uint32_t>* old_to_new = nullptr) const;

  /// Copy with every XOR rewritten as (a OR b) AND NOT(a AND b).
  Circuit lower_xor() const;

 private:
  Wire wire(std::uint32_t id) const { return Wire{id, owner_}; }
  Wire add_binary(GateKind kind, Wire x, Wire y);
  Wire intern(Node n);
  void strash_insert(std::uint32_t id);
  void strash_grow();
  void check_mutable() const {
    if (frozen_) throw_frozen();
  }
  void check_owned(Wire w) const {
    if (!owns(w)) throw_foreign(w);
  }
  [[noreturn]] static void throw_frozen();
  [[noreturn]] static void throw_foreign(Wire w);
  bool is_complement(std::uint32_t x, std::uint32_t y) const;

  std::uint64_t owner_;
  std::size_t num_inputs_;
  std::vector<Node> nodes_;
  std::vector<Wire> outputs_;
  // Open-addressing structural hash: slots hold gate ids, 0 marks empty.
  std::vector<std::uint32_t> strash_;
  std::size_t strash_count_ = 0;
  bool frozen_ = false;
};

/// Ordered wires of an unsigned number, index 0 the least-significant bit.
class Bus {
 public:
  Bus() = default;
  explicit Bus(std::vector<Wire> wires);

  std::size_t width() const { return wires_.size(); }
  Wire operator[](std::size_t i) const { return wires_[i]; }
  const std::vector<Wire>& wires() const { return wires_; }

  /// Copy widened to `width` bits with constant-0 wires; never narrows.
  Bus zero_extend(const Circuit& circuit, std::size_t width) const;
  /// First `width` bits (the whole bus if it is narrower).
  Bus truncate(std::size_t width) const&;
  Bus truncate(std::size_t width) &&;

 private:
  std::vector<Wire> wires_;
};

}  // namespace symcirc
