#pragma once

/// @file spectrum.hpp
/// @brief Value vectors of symmetric Boolean functions. Depends on nothing
/// circuit-related.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symcirc {

/// f(x) = values[popcount(x)] for x in {0,1}^n.
class Spectrum {
 public:
  Spectrum() : values_(1, false) {}
  /// Throws std::invalid_argument unless values.size() == n + 1.
  Spectrum(std::size_t n, std::vector<bool> values);

  std::size_t n() const { return n_; }
  const std::vector<bool>& values() const { return values_; }
  bool operator[](std::size_t count) const { return values_.at(count); }

  Spectrum complement() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> values_;
};

enum class Family { Parity, Majority, Threshold, Exact, Mod, Const };

/// A named symmetric family with its parameters. For Threshold and Exact an
/// absent parameter means k = n / 2; for Mod an absent residue means 0.
struct NamedFunction {
  Family family = Family::Parity;
  std::optional<std::uint64_t> p1;
  std::optional<std::uint64_t> p2;

  /// Accepts "parity", "majority", "threshold[:k]", "exact[:k]",
  /// "mod:m[,r]" and "const:b" (case-insensitive). Throws
  /// std::invalid_argument on malformed text.
  static NamedFunction parse(std::string_view text);
  std::string to_string() const;
};

/// Throws std::invalid_argument when parameters are out of range for n.
Spectrum spectrum_of(const NamedFunction& fn, std::size_t n);

/// Spectrum file: first line n, second line n + 1 space-separated bits.
Spectrum parse_spectrum_file(std::string_view text);
std::string render_spectrum_file(const Spectrum& spectrum);

}  // namespace symcirc
