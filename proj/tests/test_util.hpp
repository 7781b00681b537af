#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "symcirc/circuit.hpp"

namespace symcirc::testing {

/// Calls fn(base, lanes, words) for consecutive blocks of the 2^n
/// assignments; bit `lane` of words[i] is bit i of index base + lane.
inline void for_each_block(std::size_t n,
                           const std::function<void(std::uint64_t, std::uint64_t, const std::vector<std::uint64_t>&)>& fn) {
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t lanes = total < 64 ? total : 64;
  std::vector<std::uint64_t> words(n);
  for (std::uint64_t base = 0; base < total; base += lanes) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t w = 0;
      for (std::uint64_t lane = 0; lane < lanes; ++lane) {
        if (((base + lane) >> i) & 1) w |= std::uint64_t{1} << lane;
      }
      words[i] = w;
    }
    fn(base, lanes, words);
  }
}

/// Integer carried by a group of output words in one lane (LSB first).
inline std::uint64_t lane_value(const std::vector<std::uint64_t>& outputs, std::size_t first, std::size_t width,
                                std::uint64_t lane) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) v |= ((outputs[first + i] >> lane) & 1) << i;
  return v;
}

/// Packs one LSB-first value per lane into per-bit words.
inline void pack_value(std::vector<std::uint64_t>& words, std::size_t first, std::size_t width,
                       std::uint64_t lane, std::uint64_t value) {
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> i) & 1) words[first + i] |= std::uint64_t{1} << lane;
  }
}

inline std::vector<Wire> slice(const std::vector<Wire>& wires, std::size_t first, std::size_t count) {
  return {wires.begin() + static_cast<std::ptrdiff_t>(first),
          wires.begin() + static_cast<std::ptrdiff_t>(first + count)};
}

}  // namespace symcirc::testing
