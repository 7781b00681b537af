#include "symcirc/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

namespace symcirc {

namespace {

void check_bus(const Circuit& circuit, const Bus& bus) {
  for (Wire w : bus.wires()) {
    if (!circuit.owns(w)) {
      throw CircuitError(CircuitError::Code::ForeignWire, "bus wire does not belong to circuit");
    }
  }
}

std::size_t bit_length(std::uint64_t x) { return x == 0 ? 1 : static_cast<std::size_t>(std::bit_width(x)); }

std::uint64_t low_mask(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// An operand of the reduction tree together with an upper bound on its value.
struct Operand {
  Bus bus;
  std::uint64_t bound;
};

// Stable counting sort on bus width; widths are at most 64.
void stable_sort_by_width(std::vector<Operand>& ops) {
  std::array<std::size_t, 66> start{};
  for (const Operand& op : ops) ++start[op.bus.width() + 1];
  for (std::size_t w = 1; w < start.size(); ++w) start[w] += start[w - 1];
  std::vector<Operand> sorted(ops.size());
  for (Operand& op : ops) {
    const std::size_t w = op.bus.width();
    sorted[start[w]++] = std::move(op);
  }
  ops = std::move(sorted);
}

}  // namespace

std::size_t count_width(std::size_t n) { return bit_length(n); }

std::size_t CsaLevelSchedule::total_csas() const {
  return std::accumulate(levels.begin(), levels.end(), std::size_t{0},
                         [](std::size_t acc, const CsaLevel& l) { return acc + l.csa_count; });
}

FullAdderOut full_adder(Circuit& circuit, Wire x1, Wire x2, Wire x3) {
  Wire t = circuit.lxor(x1, x2);
  Wire sum = circuit.lxor(t, x3);
  Wire carry = circuit.lor(circuit.land(x1, x2), circuit.land(t, x3));
  return {sum, carry};
}

CsaOut carry_save_add(Circuit& circuit, const Bus& a, const Bus& b, const Bus& c) {
  check_bus(circuit, a);
  check_bus(circuit, b);
  check_bus(circuit, c);
  const std::size_t width = std::max({a.width(), b.width(), c.width()});
  const Wire zero = circuit.const0();
  auto bit = [zero](const Bus& bus, std::size_t i) { return i < bus.width() ? bus[i] : zero; };

  std::vector<Wire> u(width + 1, zero);
  std::vector<Wire> v(width + 1, zero);
  for (std::size_t i = 0; i < width; ++i) {
    auto [sum, carry] = full_adder(circuit, bit(a, i), bit(b, i), bit(c, i));
    u[i] = sum;
    v[i + 1] = carry;
  }
  return {Bus(std::move(u)), Bus(std::move(v))};
}

CsaTreeOut csa_tree(Circuit& circuit, std::span<const Wire> inputs) {
  CsaTreeOut out;
  std::vector<Operand> live;
  live.reserve(inputs.size());
  circuit.reserve(11 * inputs.size());
  for (Wire w : inputs) {
    if (!circuit.owns(w)) {
      throw CircuitError(CircuitError::Code::ForeignWire, "input wire does not belong to circuit");
    }
    live.push_back({Bus({w}), 1});
  }

  for (std::size_t level = 1; live.size() > 2; ++level) {
    stable_sort_by_width(live);
    CsaLevel record;
    record.level = level;
    record.csa_count = live.size() / 3;
    record.pass_through = live.size() % 3;
    record.operand_widths.reserve(live.size());
    for (const Operand& op : live) record.operand_widths.push_back(op.bus.width());

    std::vector<Operand> next;
    next.reserve(2 * record.csa_count + record.pass_through);
    for (std::size_t k = 0; k < record.csa_count; ++k) {
      const Operand& a = live[3 * k];
      const Operand& b = live[3 * k + 1];
      const Operand& c = live[3 * k + 2];
      const std::size_t width = std::max({a.bus.width(), b.bus.width(), c.bus.width()});
      out.schedule.full_adders += width;
      auto [u, v] = carry_save_add(circuit, a.bus, b.bus, c.bus);
      // u < 2^w and v <= 2^(w+1) - 2; both are also bounded by a + b + c.
      const std::uint64_t total = a.bound + b.bound + c.bound;
      const std::uint64_t u_bound = std::min(low_mask(width), total);
      const std::uint64_t v_bound = std::min(low_mask(width + 1) - 1, total);
      next.push_back({std::move(u).truncate(bit_length(u_bound)), u_bound});
      next.push_back({std::move(v).truncate(bit_length(v_bound)), v_bound});
    }
    for (std::size_t k = 3 * record.csa_count; k < live.size(); ++k) next.push_back(live[k]);
    out.schedule.levels.push_back(std::move(record));
    live = std::move(next);
  }

  for (Operand& op : live) out.operands.push_back(std::move(op.bus));
  return out;
}

PopcountOut popcount_tree(Circuit& circuit, std::span<const Wire> inputs) {
  const std::size_t width = count_width(inputs.size());
  if (inputs.empty()) {
    return {Bus({circuit.const0()}), {}};
  }
  CsaTreeOut tree = csa_tree(circuit, inputs);
  Bus count = tree.operands.size() == 2 ? prefix_add(circuit, tree.operands[0], tree.operands[1])
                                        : tree.operands[0];
  // The count never exceeds n, so bits above `width` are constant zero.
  count = count.truncate(width).zero_extend(circuit, width);
  return {std::move(count), std::move(tree.schedule)};
}

Bus prefix_add(Circuit& circuit, const Bus& a, const Bus& b) {
  check_bus(circuit, a);
  check_bus(circuit, b);
  const std::size_t width = std::max(a.width(), b.width());
  Bus ax = a.zero_extend(circuit, width);
  Bus bx = b.zero_extend(circuit, width);

  std::vector<Wire> prop(width);
  std::vector<Wire> gen(width);
  for (std::size_t i = 0; i < width; ++i) {
    prop[i] = circuit.lxor(ax[i], bx[i]);
    gen[i] = circuit.land(ax[i], bx[i]);
  }

  // Brent-Kung prefix over (generate, propagate); after both sweeps
  // group_gen[i] is the carry out of bit i.
  std::vector<Wire> group_gen = gen;
  std::vector<Wire> group_prop = prop;
  auto combine = [&](std::size_t hi, std::size_t lo) {
    group_gen[hi] = circuit.lor(group_gen[hi], circuit.land(group_prop[hi], group_gen[lo]));
    group_prop[hi] = circuit.land(group_prop[hi], group_prop[lo]);
  };
  std::size_t top = 1;
  for (std::size_t d = 1; d < width; d *= 2) {
    for (std::size_t i = 2 * d - 1; i < width; i += 2 * d) combine(i, i - d);
    top = d;
  }
  for (std::size_t d = top / 2; d >= 1; d /= 2) {
    for (std::size_t i = 3 * d - 1; i < width; i += 2 * d) combine(i, i - d);
  }

  std::vector<Wire> sum(width + 1);
  sum[0] = prop[0];
  for (std::size_t i = 1; i < width; ++i) sum[i] = circuit.lxor(prop[i], group_gen[i - 1]);
  sum[width] = group_gen[width - 1];
  return Bus(std::move(sum));
}

}  // namespace symcirc
