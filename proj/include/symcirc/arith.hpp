#pragma once

/// @file arith.hpp
/// @brief Full adder, carry-save adder, CSA reduction tree and the
/// parallel-prefix final adder.

#include <cstddef>
#include <span>
#include <vector>

#include "symcirc/circuit.hpp"

namespace symcirc {

struct FullAdderOut {
  Wire sum;
  Wire carry;
};

/// sum = (x1 ^ x2) ^ x3, carry = (x1 & x2) | ((x1 ^ x2) & x3).
/// Five gates and depth 3 when no operand is constant.
FullAdderOut full_adder(Circuit& circuit, Wire x1, Wire x2, Wire x3);

struct CsaOut {
  Bus u;  // sum bits, u[w] is constant 0
  Bus v;  // carry bits shifted up one place, v[0] is constant 0
};

/// Reduces three numbers to two with a + b + c = u + v. Operands are
/// zero-extended to their common width w; u and v have width w + 1 and the
/// block uses exactly w full adders.
CsaOut carry_save_add(Circuit& circuit, const Bus& a, const Bus& b, const Bus& c);

/// One level of the reduction tree.
struct CsaLevel {
  std::size_t level = 0;                   // 1-based
  std::size_t csa_count = 0;
  std::vector<std::size_t> operand_widths;  // live operands entering the level, ascending
  std::size_t pass_through = 0;             // operands carried unchanged to the next level
};

struct CsaLevelSchedule {
  std::vector<CsaLevel> levels;
  std::size_t full_adders = 0;  // sum over all CSAs of their common operand width

  std::size_t total_csas() const;
};

struct CsaTreeOut {
  std::vector<Bus> operands;  // at most two; their sum is the input popcount
  CsaLevelSchedule schedule;
};

/// Level-by-level 3-to-2 reduction of the single-bit inputs. At each level
/// the live operands are sorted by width, grouped three at a time from the
/// narrowest, and 1-2 leftovers pass through. Operands are trimmed to the
/// bit length of their value bound, so widths stay logarithmic.
CsaTreeOut csa_tree(Circuit& circuit, std::span<const Wire> inputs);

struct PopcountOut {
  Bus count;
  CsaLevelSchedule schedule;
};

/// Number of ones among `inputs` as a bus of width max(1, ceil(log2(n+1))).
PopcountOut popcount_tree(Circuit& circuit, std::span<const Wire> inputs);

/// Brent-Kung parallel-prefix adder: width(result) = max(width(a), width(b)) + 1,
/// O(w) gates and O(log w) depth.
Bus prefix_add(Circuit& circuit, const Bus& a, const Bus& b);

/// Bits needed to hold every value in [0, n]: max(1, ceil(log2(n+1))).
std::size_t count_width(std::size_t n);

}  // namespace symcirc
