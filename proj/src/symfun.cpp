#include "symcirc/symfun.hpp"

#include <algorithm>
#include <sstream>

namespace symcirc {

// ---------------------------------------------------------------------------
// Selector and reference trees
// ---------------------------------------------------------------------------

namespace {

Wire mux_cell(Circuit& circuit, Wire select, Wire hi, Wire lo) {
  if (hi == lo) return hi;
  return circuit.lor(circuit.land(select, hi), circuit.land(circuit.lnot(select), lo));
}

// Selects among leaves [base, base + 2^(bit+1)) using count bits bit..0.
// Leaves above n are unreachable; a range made only of such leaves is
// replaced by its sibling, so no gate depends on them. Requires base <= n.
Wire select_range(Circuit& circuit, const Bus& count, const Spectrum& spectrum, std::size_t bit,
                  std::uint64_t base) {
  const std::uint64_t half = std::uint64_t{1} << bit;
  const bool hi_reachable = base + half <= spectrum.n();
  if (bit == 0) {
    const Wire lo = circuit.constant(spectrum[base]);
    if (!hi_reachable) return lo;
    return mux_cell(circuit, count[0], circuit.constant(spectrum[base + 1]), lo);
  }
  const Wire lo = select_range(circuit, count, spectrum, bit - 1, base);
  if (!hi_reachable) return lo;
  const Wire hi = select_range(circuit, count, spectrum, bit - 1, base + half);
  return mux_cell(circuit, count[bit], hi, lo);
}

}  // namespace

Wire mux_select(Circuit& circuit, const Bus& count, const Spectrum& spectrum) {
  const std::size_t width = count.width();
  if (width < 64 && (std::uint64_t{1} << width) < spectrum.n() + 1) {
    throw std::invalid_argument("count bus of width " + std::to_string(width) +
                                " cannot index " + std::to_string(spectrum.n() + 1) + " values");
  }
  for (Wire w : count.wires()) {
    if (!circuit.owns(w)) {
      throw CircuitError(CircuitError::Code::ForeignWire, "count wire does not belong to circuit");
    }
  }
  return select_range(circuit, count, spectrum, width - 1, 0);
}

Wire xor_tree(Circuit& circuit, std::span<const Wire> inputs) {
  if (inputs.empty()) throw std::invalid_argument("xor_tree needs at least one input");
  std::vector<Wire> layer(inputs.begin(), inputs.end());
  while (layer.size() > 1) {
    std::vector<Wire> next;
    next.reserve((layer.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < layer.size(); i += 2) next.push_back(circuit.lxor(layer[i], layer[i + 1]));
    if (layer.size() % 2 == 1) next.push_back(layer.back());
    layer = std::move(next);
  }
  return layer.front();
}

// ---------------------------------------------------------------------------
// Synthesis
// ---------------------------------------------------------------------------

std::string SynthesisReport::to_key_values() const {
  std::ostringstream out;
  out << "n=" << n << '\n'
      << "size=" << size << '\n'
      << "depth=" << depth << '\n'
      << "csa_count=" << csa_count << '\n'
      << "full_adders=" << schedule.full_adders << '\n'
      << "levels=" << schedule.levels.size() << '\n'
      << "schedule=";
  for (std::size_t i = 0; i < schedule.levels.size(); ++i) {
    if (i > 0) out << ',';
    out << schedule.levels[i].csa_count;
  }
  out << '\n'
      << "popcount_size=" << popcount.size << '\n'
      << "popcount_depth=" << popcount.depth << '\n'
      << "adder_size=" << final_adder.size << '\n'
      << "adder_depth=" << final_adder.depth << '\n'
      << "selector_size=" << selector.size << '\n'
      << "selector_depth=" << selector.depth << '\n';
  return out.str();
}

Synthesis synthesize(const Spectrum& spectrum) {
  const std::size_t n = spectrum.n();
  Circuit build(n);
  const std::vector<Wire> inputs = build.inputs();

  CsaTreeOut tree = csa_tree(build, inputs);
  const std::size_t tree_end = build.num_nodes();

  Bus count;
  if (tree.operands.empty()) {
    count = Bus({build.const0()});
  } else if (tree.operands.size() == 1) {
    count = tree.operands[0];
  } else {
    count = prefix_add(build, tree.operands[0], tree.operands[1]);
  }
  count = count.truncate(count_width(n)).zero_extend(build, count_width(n));
  const std::size_t adder_end = build.num_nodes();

  build.add_output(mux_select(build, count, spectrum));

  SynthesisReport report;
  report.n = n;
  report.csa_count = tree.schedule.total_csas();

  const auto node_depth = build.node_depths();
  for (const Bus& op : tree.operands) {
    for (Wire w : op.wires()) report.popcount.depth = std::max<std::size_t>(report.popcount.depth, node_depth[w.id]);
  }
  for (Wire w : count.wires()) {
    report.final_adder.depth = std::max<std::size_t>(report.final_adder.depth, node_depth[w.id]);
  }

  std::vector<std::uint32_t> old_to_new;
  Circuit circuit = build.sweep(&old_to_new);
  circuit.freeze();
  for (std::size_t i = circuit.first_gate_id(); i < old_to_new.size(); ++i) {
    if (old_to_new[i] == UINT32_MAX) continue;
    if (i < tree_end) {
      ++report.popcount.size;
    } else if (i < adder_end) {
      ++report.final_adder.size;
    } else {
      ++report.selector.size;
    }
  }
  report.schedule = std::move(tree.schedule);
  report.size = circuit.size();
  report.output_depths = circuit.output_depths();
  report.depth = circuit.depth();
  report.selector.depth = report.depth;
  return {std::move(circuit), std::move(report)};
}

}  // namespace symcirc
