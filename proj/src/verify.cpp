#include "symcirc/verify.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <stdexcept>

namespace symcirc {

namespace {

constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

void check_shape(const Circuit& circuit, const Spectrum& spectrum) {
  if (circuit.outputs().size() != 1) {
    throw std::invalid_argument("circuit must have exactly one output, has " +
                                std::to_string(circuit.outputs().size()));
  }
  if (circuit.num_inputs() != spectrum.n()) {
    throw std::invalid_argument("circuit has " + std::to_string(circuit.num_inputs()) +
                                " inputs but the function has arity " + std::to_string(spectrum.n()));
  }
}

std::vector<bool> index_to_assignment(std::uint64_t index, std::size_t n) {
  std::vector<bool> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = ((index >> i) & 1) != 0;
  return a;
}

std::vector<bool> draw_assignment(SplitMix64& rng, std::size_t n) {
  std::vector<bool> a(n);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) word = rng.next();
    a[i] = ((word >> (i % 64)) & 1) != 0;
  }
  return a;
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::vector<bool>> sample_assignments(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::vector<bool>> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) out.push_back(draw_assignment(rng, n));
  return out;
}

CheckResult exhaustive_check(const Circuit& circuit, const Spectrum& spectrum, std::size_t cap) {
  const std::size_t n = spectrum.n();
  if (n > cap) {
    throw std::invalid_argument("exhaustive check limited to n <= " + std::to_string(cap) + ", got " +
                                std::to_string(n));
  }
  check_shape(circuit, spectrum);

  CheckResult result;
  result.mode = CheckMode::Exhaustive;
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t lanes = std::min<std::uint64_t>(64, total);
  const std::size_t low_bits = std::min<std::size_t>(n, 6);

  std::vector<std::uint64_t> words(n);
  for (std::size_t i = 0; i < low_bits; ++i) words[i] = kLanePattern[i];
  for (std::uint64_t base = 0; base < total; base += lanes) {
    for (std::size_t i = low_bits; i < n; ++i) words[i] = ((base >> i) & 1) ? ~std::uint64_t{0} : 0;
    const std::uint64_t got = circuit.evaluate_words(words)[0];
    for (std::uint64_t lane = 0; lane < lanes; ++lane) {
      const std::uint64_t index = base + lane;
      const bool expected = spectrum[static_cast<std::size_t>(std::popcount(index))];
      if (((got >> lane) & 1) != static_cast<std::uint64_t>(expected)) {
        result.ok = false;
        result.counterexample = index_to_assignment(index, n);
        result.trials = index + 1;
        return result;
      }
    }
  }
  result.trials = total;
  return result;
}

CheckResult random_check(const Circuit& circuit, const Spectrum& spectrum, std::uint64_t trials,
                         std::uint64_t seed) {
  check_shape(circuit, spectrum);
  const std::size_t n = spectrum.n();
  CheckResult result;
  result.mode = CheckMode::Randomized;
  SplitMix64 rng(seed);

  std::vector<std::vector<bool>> batch;
  std::vector<std::uint64_t> words(n);
  for (std::uint64_t done = 0; done < trials;) {
    const std::uint64_t lanes = std::min<std::uint64_t>(64, trials - done);
    batch.clear();
    std::fill(words.begin(), words.end(), 0);
    for (std::uint64_t lane = 0; lane < lanes; ++lane) {
      batch.push_back(draw_assignment(rng, n));
      for (std::size_t i = 0; i < n; ++i) {
        if (batch.back()[i]) words[i] |= std::uint64_t{1} << lane;
      }
    }
    const std::uint64_t got = circuit.evaluate_words(words)[0];
    for (std::uint64_t lane = 0; lane < lanes; ++lane) {
      const bool expected = oracle_eval(spectrum, batch[lane]);
      if (((got >> lane) & 1) != static_cast<std::uint64_t>(expected)) {
        result.ok = false;
        result.counterexample = batch[lane];
        result.trials = done + lane + 1;
        return result;
      }
    }
    done += lanes;
  }
  result.trials = trials;
  return result;
}

std::size_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

std::vector<AsymptoticsRow> asymptotics_report(const NamedFunction& fn, const std::vector<std::size_t>& arities) {
  if (arities.empty()) throw std::invalid_argument("asymptotics report needs at least one arity");
  for (std::size_t n : arities) {
    if (n < 3) throw std::invalid_argument("asymptotics arities must be >= 3, got " + std::to_string(n));
  }
  std::vector<AsymptoticsRow> rows;
  rows.reserve(arities.size());
  for (std::size_t n : arities) {
    Synthesis s = synthesize(spectrum_of(fn, n));
    if (s.report.csa_count != n - 2) {
      throw std::logic_error("n=" + std::to_string(n) + ": expected " + std::to_string(n - 2) +
                             " CSAs, built " + std::to_string(s.report.csa_count));
    }
    AsymptoticsRow row;
    row.n = n;
    row.size = s.report.size;
    row.depth = s.report.depth;
    row.size_per_n = static_cast<double>(row.size) / static_cast<double>(n);
    row.depth_per_logn = static_cast<double>(row.depth) / static_cast<double>(ceil_log2(n));
    row.csa_count = s.report.csa_count;
    rows.push_back(row);
  }
  return rows;
}

void write_asymptotics_csv(std::ostream& out, const std::vector<AsymptoticsRow>& rows) {
  out << "n,size,depth,size_per_n,depth_per_logn,csa_count\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(6);
  for (const AsymptoticsRow& r : rows) {
    out << r.n << ',' << r.size << ',' << r.depth << ',' << r.size_per_n << ',' << r.depth_per_logn << ','
        << r.csa_count << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

std::string assignment_to_string(const std::vector<bool>& assignment) {
  std::string s;
  s.reserve(assignment.size());
  for (std::size_t i = assignment.size(); i-- > 0;) s += assignment[i] ? '1' : '0';
  return s;
}

std::optional<std::vector<bool>> assignment_from_string(const std::string& text) {
  std::vector<bool> a(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[text.size() - 1 - i];
    if (c != '0' && c != '1') return std::nullopt;
    a[i] = c == '1';
  }
  return a;
}

}  // namespace symcirc
