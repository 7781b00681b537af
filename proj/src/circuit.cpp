#include "symcirc/circuit.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <utility>

namespace symcirc {

namespace {

std::uint64_t next_owner() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

constexpr std::uint32_t kRemoved = std::numeric_limits<std::uint32_t>::max();

std::size_t node_hash(const Node& n) {
  std::uint64_t h = (static_cast<std::uint64_t>(n.a) << 32) | n.b;
  h ^= static_cast<std::uint64_t>(n.kind) * 0x9e3779b97f4a7c15ULL;
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

}  // namespace

std::string_view kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Const0: return "CONST_0";
    case GateKind::Const1: return "CONST_1";
    case GateKind::Input: return "INPUT";
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Xor: return "XOR";
    case GateKind::Not: return "NOT";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Circuit
// ---------------------------------------------------------------------------

Circuit::Circuit(std::size_t num_inputs) : owner_(next_owner()), num_inputs_(num_inputs) {
  nodes_.reserve(2 + num_inputs);
  nodes_.push_back(Node{GateKind::Const0});
  nodes_.push_back(Node{GateKind::Const1});
  for (std::size_t i = 0; i < num_inputs; ++i) {
    nodes_.push_back(Node{GateKind::Input});
  }
}

Wire Circuit::input(std::size_t index) const {
  if (index >= num_inputs_) {
    throw CircuitError(CircuitError::Code::ForeignWire,
                       "input index " + std::to_string(index) + " out of range");
  }
  return wire(static_cast<std::uint32_t>(2 + index));
}

std::vector<Wire> Circuit::inputs() const {
  std::vector<Wire> result;
  result.reserve(num_inputs_);
  for (std::size_t i = 0; i < num_inputs_; ++i) {
    result.push_back(wire(static_cast<std::uint32_t>(2 + i)));
  }
  return result;
}

const Node& Circuit::node(Wire w) const {
  check_owned(w);
  return nodes_[w.id];
}

void Circuit::throw_frozen() { throw CircuitError(CircuitError::Code::Frozen, "circuit is frozen"); }

void Circuit::throw_foreign(Wire w) {
  throw CircuitError(CircuitError::Code::ForeignWire,
                     "wire " + std::to_string(w.id) + " does not belong to this circuit");
}

void Circuit::reserve(std::size_t gates) {
  if (frozen_) return;
  nodes_.reserve(nodes_.size() + gates);
  std::size_t slots = 64;
  while (slots < 2 * (strash_count_ + gates)) slots *= 2;
  if (slots > strash_.size()) {
    std::vector<std::uint32_t> old = std::move(strash_);
    strash_.assign(slots, 0);
    strash_count_ = 0;
    for (std::uint32_t id : old) {
      if (id != 0) strash_insert(id);
    }
  }
}

bool Circuit::is_complement(std::uint32_t x, std::uint32_t y) const {
  const Node& nx = nodes_[x];
  const Node& ny = nodes_[y];
  return (nx.kind == GateKind::Not && nx.a == y) || (ny.kind == GateKind::Not && ny.a == x);
}

void Circuit::strash_grow() {
  std::vector<std::uint32_t> old = std::move(strash_);
  strash_.assign(std::max<std::size_t>(64, old.size() * 2), 0);
  strash_count_ = 0;
  for (std::uint32_t id : old) {
    if (id != 0) strash_insert(id);
  }
}

// Adds gate `id` unless an identical record is already present.
void Circuit::strash_insert(std::uint32_t id) {
  if (2 * (strash_count_ + 1) > strash_.size()) strash_grow();
  const std::size_t mask = strash_.size() - 1;
  for (std::size_t slot = node_hash(nodes_[id]) & mask;; slot = (slot + 1) & mask) {
    if (strash_[slot] == 0) {
      strash_[slot] = id;
      ++strash_count_;
      return;
    }
    if (nodes_[strash_[slot]] == nodes_[id]) return;
  }
}

Wire Circuit::intern(Node n) {
  if (2 * (strash_count_ + 1) > strash_.size()) strash_grow();
  const std::size_t mask = strash_.size() - 1;
  std::size_t slot = node_hash(n) & mask;
  for (; strash_[slot] != 0; slot = (slot + 1) & mask) {
    if (nodes_[strash_[slot]] == n) return wire(strash_[slot]);
  }
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(n);
  strash_[slot] = id;
  ++strash_count_;
  return wire(id);
}

Wire Circuit::add_gate(GateKind kind, std::span<const Wire> operands) {
  check_mutable();
  if (!is_logic(kind)) {
    throw CircuitError(CircuitError::Code::BadKind,
                       std::string("cannot add gate of kind ") + std::string(kind_name(kind)));
  }
  if (operands.size() != arity(kind)) {
    throw CircuitError(CircuitError::Code::Arity,
                       std::string(kind_name(kind)) + " expects " + std::to_string(arity(kind)) +
                           " operand(s), got " + std::to_string(operands.size()));
  }
  if (kind == GateKind::Not) {
    return lnot(operands[0]);
  }
  return add_binary(kind, operands[0], operands[1]);
}

Wire Circuit::lnot(Wire x) {
  check_mutable();
  check_owned(x);
  if (x.id == 0) return const1();
  if (x.id == 1) return const0();
  const Node& n = nodes_[x.id];
  if (n.kind == GateKind::Not) return wire(n.a);
  return intern(Node{GateKind::Not, x.id, 0});
}

Wire Circuit::add_binary(GateKind kind, Wire x, Wire y) {
  check_mutable();
  check_owned(x);
  check_owned(y);
  std::uint32_t a = std::min(x.id, y.id);
  std::uint32_t b = std::max(x.id, y.id);
  // After ordering, a constant operand (ids 0 and 1) always sits in `a`.
  switch (kind) {
    case GateKind::And:
      if (a == 0) return const0();
      if (a == 1) return wire(b);
      if (a == b) return wire(a);
      if (is_complement(a, b)) return const0();
      break;
    case GateKind::Or:
      if (a == 1) return const1();
      if (a == 0) return wire(b);
      if (a == b) return wire(a);
      if (is_complement(a, b)) return const1();
      break;
    case GateKind::Xor:
      if (a == 0) return wire(b);
      if (a == 1) return lnot(wire(b));
      if (a == b) return const0();
      if (is_complement(a, b)) return const1();
      break;
    default:
      throw CircuitError(CircuitError::Code::BadKind, "not a binary gate kind");
  }
  return intern(Node{kind, a, b});
}

Wire Circuit::append_raw(GateKind kind, std::span<const Wire> operands) {
  check_mutable();
  if (!is_logic(kind)) {
    throw CircuitError(CircuitError::Code::BadKind,
                       std::string("cannot add gate of kind ") + std::string(kind_name(kind)));
  }
  if (operands.size() != arity(kind)) {
    throw CircuitError(CircuitError::Code::Arity,
                       std::string(kind_name(kind)) + " expects " + std::to_string(arity(kind)) +
                           " operand(s), got " + std::to_string(operands.size()));
  }
  Node n{kind, 0, 0};
  for (std::size_t i = 0; i < operands.size(); ++i) {
    check_owned(operands[i]);
    (i == 0 ? n.a : n.b) = operands[i].id;
  }
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(n);
  strash_insert(id);
  return wire(id);
}

void Circuit::add_output(Wire w) {
  check_mutable();
  check_owned(w);
  outputs_.push_back(w);
}

void Circuit::set_outputs(std::span<const Wire> outputs) {
  check_mutable();
  for (Wire w : outputs) check_owned(w);
  outputs_.assign(outputs.begin(), outputs.end());
}

void Circuit::freeze() {
  if (frozen_) return;
  if (outputs_.empty()) {
    throw CircuitError(CircuitError::Code::NoOutputs, "cannot freeze a circuit without outputs");
  }
  frozen_ = true;
  strash_ = {};
  strash_count_ = 0;
}

std::size_t Circuit::size() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return is_logic(n.kind); }));
}

std::vector<std::uint32_t> Circuit::node_depths() const {
  std::vector<std::uint32_t> d(nodes_.size(), 0);
  for (std::size_t i = first_gate_id(); i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    std::uint32_t m = d[n.a];
    if (arity(n.kind) == 2) m = std::max(m, d[n.b]);
    d[i] = m + 1;
  }
  return d;
}

std::vector<std::size_t> Circuit::output_depths() const {
  auto d = node_depths();
  std::vector<std::size_t> result;
  result.reserve(outputs_.size());
  for (Wire w : outputs_) result.push_back(d[w.id]);
  return result;
}

std::size_t Circuit::depth() const {
  auto per_output = output_depths();
  return per_output.empty() ? 0 : *std::max_element(per_output.begin(), per_output.end());
}

std::vector<std::uint64_t> Circuit::evaluate_words(std::span<const std::uint64_t> input_words) const {
  if (input_words.size() != num_inputs_) {
    throw CircuitError(CircuitError::Code::BadAssignment,
                       "expected " + std::to_string(num_inputs_) + " input words, got " +
                           std::to_string(input_words.size()));
  }
  std::vector<std::uint64_t> v(nodes_.size());
  v[0] = 0;
  v[1] = ~std::uint64_t{0};
  std::copy(input_words.begin(), input_words.end(), v.begin() + 2);
  for (std::size_t i = first_gate_id(); i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case GateKind::And: v[i] = v[n.a] & v[n.b]; break;
      case GateKind::Or: v[i] = v[n.a] | v[n.b]; break;
      case GateKind::Xor: v[i] = v[n.a] ^ v[n.b]; break;
      case GateKind::Not: v[i] = ~v[n.a]; break;
      default: break;
    }
  }
  std::vector<std::uint64_t> out;
  out.reserve(outputs_.size());
  for (Wire w : outputs_) out.push_back(v[w.id]);
  return out;
}

std::vector<bool> Circuit::evaluate(std::span<const bool> assignment) const {
  if (assignment.size() != num_inputs_) {
    throw CircuitError(CircuitError::Code::BadAssignment,
                       "assignment has " + std::to_string(assignment.size()) + " bits, circuit has " +
                           std::to_string(num_inputs_) + " inputs");
  }
  std::vector<std::uint64_t> words(num_inputs_);
  for (std::size_t i = 0; i < num_inputs_; ++i) words[i] = assignment[i] ? 1 : 0;
  auto out = evaluate_words(words);
  std::vector<bool> result(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) result[i] = (out[i] & 1) != 0;
  return result;
}

std::vector<bool> Circuit::evaluate(const std::vector<bool>& assignment) const {
  std::vector<std::uint64_t> words(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) words[i] = assignment[i] ? 1 : 0;
  if (words.size() != num_inputs_) {
    throw CircuitError(CircuitError::Code::BadAssignment,
                       "assignment has " + std::to_string(words.size()) + " bits, circuit has " +
                           std::to_string(num_inputs_) + " inputs");
  }
  auto out = evaluate_words(words);
  std::vector<bool> result(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) result[i] = (out[i] & 1) != 0;
  return result;
}

Circuit Circuit::with_gate_kind(std::uint32_t gate_id, GateKind kind) const {
  if (gate_id < first_gate_id() || gate_id >= nodes_.size()) {
    throw CircuitError(CircuitError::Code::ForeignWire,
                       "node " + std::to_string(gate_id) + " is not a gate");
  }
  if (arity(kind) != arity(nodes_[gate_id].kind) || !is_logic(kind)) {
    throw CircuitError(CircuitError::Code::Arity, "replacement kind changes gate arity");
  }
  Circuit copy(*this);
  copy.owner_ = next_owner();
  for (Wire& w : copy.outputs_) w.owner = copy.owner_;
  copy.strash_ = {};
  copy.strash_count_ = 0;
  copy.nodes_[gate_id].kind = kind;
  copy.frozen_ = !copy.outputs_.empty();
  return copy;
}

Circuit Circuit::sweep(std::vector<std::uint32_t>* old_to_new) const {
  std::vector<bool> live(nodes_.size(), false);
  for (std::uint32_t i = 0; i < first_gate_id(); ++i) live[i] = true;
  for (Wire w : outputs_) live[w.id] = true;
  for (std::size_t i = nodes_.size(); i-- > first_gate_id();) {
    if (!live[i]) continue;
    const Node& n = nodes_[i];
    live[n.a] = true;
    if (arity(n.kind) == 2) live[n.b] = true;
  }

  Circuit result(num_inputs_);
  std::vector<std::uint32_t> map(nodes_.size(), kRemoved);
  for (std::uint32_t i = 0; i < first_gate_id(); ++i) map[i] = i;
  for (std::size_t i = first_gate_id(); i < nodes_.size(); ++i) {
    if (!live[i]) continue;
    Node n = nodes_[i];
    n.a = map[n.a];
    if (arity(n.kind) == 2) n.b = map[n.b];
    map[i] = static_cast<std::uint32_t>(result.nodes_.size());
    result.nodes_.push_back(n);
    if (!frozen_) result.strash_insert(map[i]);
  }
  for (Wire w : outputs_) result.outputs_.push_back(result.wire(map[w.id]));
  if (frozen_) result.freeze();
  if (old_to_new != nullptr) *old_to_new = std::move(map);
  return result;
}

Circuit Circuit::lower_xor() const {
  Circuit result(num_inputs_);
  std::vector<Wire> map(nodes_.size());
  for (std::uint32_t i = 0; i < first_gate_id(); ++i) map[i] = result.wire(i);
  for (std::size_t i = first_gate_id(); i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case GateKind::Xor: {
        Wire x = map[n.a];
        Wire y = map[n.b];
        map[i] = result.land(result.lor(x, y), result.lnot(result.land(x, y)));
        break;
      }
      case GateKind::Not:
        map[i] = result.lnot(map[n.a]);
        break;
      default:
        map[i] = result.add_binary(n.kind, map[n.a], map[n.b]);
        break;
    }
  }
  for (Wire w : outputs_) result.outputs_.push_back(map[w.id]);
  if (frozen_) result.freeze();
  return result;
}

// ---------------------------------------------------------------------------
// Bus
// ---------------------------------------------------------------------------

Bus::Bus(std::vector<Wire> wires) : wires_(std::move(wires)) {
  if (wires_.empty()) {
    throw CircuitError(CircuitError::Code::Arity, "bus width must be at least 1");
  }
  for (const Wire& w : wires_) {
    if (w.owner != wires_.front().owner) {
      throw CircuitError(CircuitError::Code::ForeignWire, "bus mixes wires of different circuits");
    }
  }
}

Bus Bus::zero_extend(const Circuit& circuit, std::size_t width) const {
  std::vector<Wire> wires = wires_;
  while (wires.size() < width) wires.push_back(circuit.const0());
  return Bus(std::move(wires));
}

Bus Bus::truncate(std::size_t width) const& {
  if (width == 0 || width >= wires_.size()) return *this;
  return Bus(std::vector<Wire>(wires_.begin(), wires_.begin() + static_cast<std::ptrdiff_t>(width)));
}

Bus Bus::truncate(std::size_t width) && {
  if (width != 0 && width < wires_.size()) wires_.resize(width);
  return std::move(*this);
}

}  // namespace symcirc
