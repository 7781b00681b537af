#pragma once

/// @file verify.hpp
/// @brief Brute-force oracle, equivalence checks, and the size/depth
/// asymptotics harness.
///
/// Assignments are indexed so that input i takes bit i of the index. The
/// exhaustive check enumerates indices in ascending order, which is the
/// lexicographic order of the MSB-first bit string "x[n-1] ... x[0]".

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "symcirc/circuit.hpp"
#include "symcirc/oracle.hpp"
#include "symcirc/symfun.hpp"

namespace symcirc {

/// SplitMix64 (Steele, Lea, Flood 2014). state += 0x9e3779b97f4a7c15, then
/// z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9; z = (z ^ (z >> 27)) *
/// 0x94d049bb133111eb; return z ^ (z >> 31). Bit-exact on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Assignments drawn by random_check: assignment t uses ceil(n/64) draws,
/// input i taking bit (i % 64) of draw i / 64.
std::vector<std::vector<bool>> sample_assignments(std::size_t n, std::size_t trials, std::uint64_t seed);

enum class CheckMode { Exhaustive, Randomized };

struct CheckResult {
  bool ok = true;
  std::optional<std::vector<bool>> counterexample;
  std::uint64_t trials = 0;
  CheckMode mode = CheckMode::Exhaustive;
};

inline constexpr std::size_t kExhaustiveCap = 24;

/// Compares a single-output circuit against the oracle on all 2^n inputs.
/// Reports the first mismatch in ascending index order. Throws
/// std::invalid_argument if n exceeds `cap` or the arities disagree.
CheckResult exhaustive_check(const Circuit& circuit, const Spectrum& spectrum,
                             std::size_t cap = kExhaustiveCap);

/// Compares on `trials` assignments from sample_assignments(n, trials, seed).
/// Reports the first mismatching sample.
CheckResult random_check(const Circuit& circuit, const Spectrum& spectrum, std::uint64_t trials,
                         std::uint64_t seed);

struct AsymptoticsRow {
  std::size_t n = 0;
  std::size_t size = 0;
  std::size_t depth = 0;
  double size_per_n = 0;
  double depth_per_logn = 0;
  std::size_t csa_count = 0;
};

/// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::size_t n);

/// Synthesizes fn at each arity (each >= 3) and records size and depth.
/// Throws std::invalid_argument on bad arities and std::logic_error if a row
/// breaks csa_count = n - 2.
std::vector<AsymptoticsRow> asymptotics_report(const NamedFunction& fn, const std::vector<std::size_t>& arities);

/// "n,size,depth,size_per_n,depth_per_logn,csa_count" header plus one row
/// per entry, ratios with six decimals.
void write_asymptotics_csv(std::ostream& out, const std::vector<AsymptoticsRow>& rows);

/// Little-endian assignment to MSB-first text, and back.
std::string assignment_to_string(const std::vector<bool>& assignment);
std::optional<std::vector<bool>> assignment_from_string(const std::string& text);

}  // namespace symcirc
