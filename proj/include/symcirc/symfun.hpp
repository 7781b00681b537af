#pragma once

/// @file symfun.hpp
/// @brief Symmetric Boolean functions and their synthesis into linear-size,
/// logarithmic-depth circuits.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "symcirc/arith.hpp"
#include "symcirc/circuit.hpp"
#include "symcirc/spectrum.hpp"

namespace symcirc {

/// Constant-leaf multiplexer tree over the count bits, most significant bit
/// at the root. Leaf k is spectrum[k] for k <= n. Leaves above n are
/// don't-cares: a subtree holding only such leaves is replaced by its
/// sibling, so the output for an out-of-range count is unspecified. Throws
/// std::invalid_argument if 2^width(count) < n + 1.
Wire mux_select(Circuit& circuit, const Bus& count, const Spectrum& spectrum);

/// Balanced XOR tree: n - 1 gates, depth ceil(log2 n). Throws on empty input.
Wire xor_tree(Circuit& circuit, std::span<const Wire> inputs);

struct StageStats {
  std::size_t size = 0;   // live gates created by the stage
  std::size_t depth = 0;  // longest path from the inputs to the stage outputs
};

struct SynthesisReport {
  std::size_t n = 0;
  std::size_t size = 0;
  std::size_t depth = 0;
  std::size_t csa_count = 0;
  CsaLevelSchedule schedule;
  StageStats popcount;      // CSA reduction tree
  StageStats final_adder;   // prefix adder and count truncation
  StageStats selector;      // multiplexer tree
  std::vector<std::size_t> output_depths;

  /// key=value lines, fixed order.
  std::string to_key_values() const;
};

struct Synthesis {
  Circuit circuit;
  SynthesisReport report;
};

/// Frozen single-output circuit on n inputs computing the spectrum. Gates
/// not reachable from the output are removed before freezing.
Synthesis synthesize(const Spectrum& spectrum);

}  // namespace symcirc
