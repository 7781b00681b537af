#include "symcirc/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace symcirc {

namespace {

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

Spectrum::Spectrum(std::size_t n, std::vector<bool> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ + 1) {
    throw std::invalid_argument("spectrum for n=" + std::to_string(n_) + " needs " +
                                std::to_string(n_ + 1) + " values, got " +
                                std::to_string(values_.size()));
  }
}

Spectrum Spectrum::complement() const {
  std::vector<bool> flipped(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) flipped[i] = !values_[i];
  return Spectrum(n_, std::move(flipped));
}

NamedFunction NamedFunction::parse(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::string_view view = lower;
  std::string_view name = view;
  std::vector<std::string_view> params;
  if (auto colon = view.find(':'); colon != std::string_view::npos) {
    name = view.substr(0, colon);
    params = split(view.substr(colon + 1), ',');
  }

  NamedFunction fn;
  std::size_t min_params = 0;
  std::size_t max_params = 0;
  if (name == "parity") {
    fn.family = Family::Parity;
  } else if (name == "majority") {
    fn.family = Family::Majority;
  } else if (name == "threshold") {
    fn.family = Family::Threshold;
    max_params = 1;
  } else if (name == "exact") {
    fn.family = Family::Exact;
    max_params = 1;
  } else if (name == "mod") {
    fn.family = Family::Mod;
    min_params = 1;
    max_params = 2;
  } else if (name == "const") {
    fn.family = Family::Const;
    min_params = max_params = 1;
  } else {
    throw std::invalid_argument("unknown function '" + std::string(text) + "'");
  }
  if (params.size() < min_params || params.size() > max_params) {
    throw std::invalid_argument("wrong number of parameters for '" + std::string(name) + "'");
  }
  if (!params.empty()) fn.p1 = parse_uint(params[0], "parameter");
  if (params.size() > 1) fn.p2 = parse_uint(params[1], "parameter");
  return fn;
}

std::string NamedFunction::to_string() const {
  std::string out;
  switch (family) {
    case Family::Parity: out = "parity"; break;
    case Family::Majority: out = "majority"; break;
    case Family::Threshold: out = "threshold"; break;
    case Family::Exact: out = "exact"; break;
    case Family::Mod: out = "mod"; break;
    case Family::Const: out = "const"; break;
  }
  if (p1) out += ":" + std::to_string(*p1);
  if (p1 && p2) out += "," + std::to_string(*p2);
  return out;
}

Spectrum spectrum_of(const NamedFunction& fn, std::size_t n) {
  std::vector<bool> values(n + 1);
  switch (fn.family) {
    case Family::Parity:
      for (std::size_t c = 0; c <= n; ++c) values[c] = c % 2 == 1;
      break;
    case Family::Majority:
      for (std::size_t c = 0; c <= n; ++c) values[c] = 2 * c > n;
      break;
    case Family::Threshold:
    case Family::Exact: {
      const std::uint64_t k = fn.p1.value_or(n / 2);
      if (k > n) {
        throw std::invalid_argument("parameter k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
      }
      for (std::size_t c = 0; c <= n; ++c) values[c] = fn.family == Family::Threshold ? c >= k : c == k;
      break;
    }
    case Family::Mod: {
      const std::uint64_t m = fn.p1.value_or(0);
      const std::uint64_t r = fn.p2.value_or(0);
      if (m < 1 || r >= m) {
        throw std::invalid_argument("mod needs m >= 1 and 0 <= r < m");
      }
      for (std::size_t c = 0; c <= n; ++c) values[c] = c % m == r;
      break;
    }
    case Family::Const: {
      const std::uint64_t b = fn.p1.value_or(2);
      if (b > 1) throw std::invalid_argument("const needs a value of 0 or 1");
      std::fill(values.begin(), values.end(), b == 1);
      break;
    }
  }
  return Spectrum(n, std::move(values));
}

Spectrum parse_spectrum_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string first;
  std::string second;
  if (!std::getline(in, first)) throw std::invalid_argument("spectrum file: missing arity line");
  if (!std::getline(in, second)) throw std::invalid_argument("spectrum file: missing values line");
  std::string rest;
  while (std::getline(in, rest)) {
    if (rest.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::invalid_argument("spectrum file: unexpected content after values line");
    }
  }

  std::istringstream first_in(first);
  std::string n_token;
  first_in >> n_token;
  std::string extra;
  if (first_in >> extra) throw std::invalid_argument("spectrum file: arity line has extra tokens");
  const std::uint64_t n = parse_uint(n_token, "arity");

  std::istringstream second_in(second);
  std::vector<bool> values;
  std::string bit;
  while (second_in >> bit) {
    if (bit != "0" && bit != "1") {
      throw std::invalid_argument("spectrum file: bad bit '" + bit + "'");
    }
    values.push_back(bit == "1");
  }
  if (values.size() != n + 1) {
    throw std::invalid_argument("spectrum file: expected " + std::to_string(n + 1) + " bits, got " +
                                std::to_string(values.size()));
  }
  return Spectrum(n, std::move(values));
}

std::string render_spectrum_file(const Spectrum& spectrum) {
  std::string out = std::to_string(spectrum.n()) + "\n";
  for (std::size_t i = 0; i < spectrum.values().size(); ++i) {
    if (i > 0) out += ' ';
    out += spectrum[i] ? '1' : '0';
  }
  out += '\n';
  return out;
}

}  // namespace symcirc
