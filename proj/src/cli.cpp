#include "symcirc/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "symcirc/netlist.hpp"
#include "symcirc/symfun.hpp"
#include "symcirc/verify.hpp"

namespace symcirc {

namespace {

// Bad arguments or input files; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string fn;
  std::string spectrum_file;
  std::optional<std::size_t> n;
  std::string ns;
  std::string out_path;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  std::string netlist_path;
  std::string assignment;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const CliConfig& config, const std::string& text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + config.out_path + "'");
  file << text;
  if (!file) throw std::runtime_error("write to '" + config.out_path + "' failed");
}

NamedFunction parse_fn(const std::string& text) {
  try {
    return NamedFunction::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// Spectrum from --fn/--n or --spectrum-file. `default_n` stands in for a
/// missing --n (check derives it from the netlist).
Spectrum resolve_spectrum(const CliConfig& config, std::optional<std::size_t> default_n = std::nullopt) {
  if (!config.spectrum_file.empty()) {
    Spectrum s;
    try {
      s = parse_spectrum_file(read_file(config.spectrum_file));
    } catch (const std::invalid_argument& e) {
      throw UsageError(config.spectrum_file + ": " + e.what());
    }
    if (config.n && *config.n != s.n()) {
      throw UsageError("--n " + std::to_string(*config.n) + " disagrees with spectrum file arity " +
                       std::to_string(s.n()));
    }
    return s;
  }
  if (config.fn.empty()) throw UsageError("one of --fn or --spectrum-file is required");
  std::optional<std::size_t> n = config.n ? config.n : default_n;
  if (!n) throw UsageError("--n is required with --fn");
  try {
    return spectrum_of(parse_fn(config.fn), *n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Circuit load_netlist(const std::string& path) {
  try {
    return parse(read_file(path));
  } catch (const NetlistError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_synth(const CliConfig& config, std::ostream& out, std::ostream& err) {
  Synthesis s = synthesize(resolve_spectrum(config));
  const std::string netlist = render(s.circuit);
  const std::string report = s.report.to_key_values();
  if (config.out_path.empty()) {
    out << netlist;
    err << report;
  } else {
    write_output(config, netlist, out);
    out << report;
  }
  return 0;
}

int cmd_eval(const CliConfig& config, std::ostream& out, std::ostream&) {
  Circuit circuit = load_netlist(config.netlist_path);
  auto assignment = assignment_from_string(config.assignment);
  if (!assignment) throw UsageError("assignment must consist of 0 and 1 characters");
  if (assignment->size() != circuit.num_inputs()) {
    throw UsageError("assignment has " + std::to_string(assignment->size()) + " bits, netlist has " +
                     std::to_string(circuit.num_inputs()) + " inputs");
  }
  for (bool bit : circuit.evaluate(*assignment)) out << (bit ? '1' : '0');
  out << '\n';
  return 0;
}

int cmd_check(const CliConfig& config, std::ostream& out, std::ostream&) {
  if (config.exhaustive && config.n && *config.n > kExhaustiveCap) {
    throw UsageError("--exhaustive supports n <= " + std::to_string(kExhaustiveCap));
  }
  if (config.trials < 1) throw UsageError("--trials must be at least 1");
  Circuit circuit = load_netlist(config.netlist_path);
  Spectrum spectrum = resolve_spectrum(config, circuit.num_inputs());
  if (spectrum.n() != circuit.num_inputs()) {
    throw UsageError("netlist has " + std::to_string(circuit.num_inputs()) + " inputs, function has arity " +
                     std::to_string(spectrum.n()));
  }
  if (circuit.outputs().size() != 1) throw UsageError("netlist must have exactly one output");
  if (config.exhaustive && spectrum.n() > kExhaustiveCap) {
    throw UsageError("--exhaustive supports n <= " + std::to_string(kExhaustiveCap));
  }

  CheckResult result = config.exhaustive ? exhaustive_check(circuit, spectrum)
                                         : random_check(circuit, spectrum, config.trials, config.seed);
  const char* mode = result.mode == CheckMode::Exhaustive ? "exhaustive" : "randomized";
  if (result.ok) {
    out << "ok mode=" << mode << " trials=" << result.trials << '\n';
    return 0;
  }
  const auto& cex = *result.counterexample;
  out << "mismatch mode=" << mode << " trials=" << result.trials << " assignment=" << assignment_to_string(cex)
      << " expected=" << oracle_eval(spectrum, cex) << " got=" << circuit.evaluate(cex)[0] << '\n';
  return 1;
}

std::vector<std::size_t> parse_ns(const std::string& text) {
  std::vector<std::size_t> ns;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("bad arity '" + item + "' in --ns");
    }
    ns.push_back(value);
  }
  if (ns.empty()) throw UsageError("--ns must list at least one arity");
  return ns;
}

int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream&) {
  if (config.fn.empty()) throw UsageError("--fn is required");
  const NamedFunction fn = parse_fn(config.fn);
  const std::vector<std::size_t> ns = parse_ns(config.ns);
  std::vector<AsymptoticsRow> rows;
  try {
    for (std::size_t n : ns) spectrum_of(fn, n);
    rows = asymptotics_report(fn, ns);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream csv;
  write_asymptotics_csv(csv, rows);
  write_output(config, csv.str(), out);
  return 0;
}

int cmd_export_spectrum(const CliConfig& config, std::ostream& out, std::ostream&) {
  write_output(config, render_spectrum_file(resolve_spectrum(config)), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Synthesize symmetric Boolean functions into linear-size, logarithmic-depth circuits", "symcirc"};
  app.require_subcommand(1, 1);

  auto add_function_options = [&config](CLI::App* sub) {
    auto* fn = sub->add_option("--fn", config.fn, "Named function: parity, majority, threshold[:k], exact[:k], mod:m[,r], const:b");
    auto* file = sub->add_option("--spectrum-file", config.spectrum_file, "Spectrum file (line 1: n, line 2: n+1 bits)");
    fn->excludes(file);
    sub->add_option("--n", config.n, "Arity");
  };

  auto* synth = app.add_subcommand("synth", "Synthesize a circuit and print its report");
  add_function_options(synth);
  synth->add_option("--out", config.out_path, "Netlist output path (default: stdout)");

  auto* eval = app.add_subcommand("eval", "Evaluate a netlist on one MSB-first assignment");
  eval->add_option("netlist", config.netlist_path, "SYMCIRC netlist")->required();
  eval->add_option("assignment", config.assignment, "MSB-first bit string")->required();

  auto* check = app.add_subcommand("check", "Check a netlist against a symmetric function");
  check->add_option("netlist", config.netlist_path, "SYMCIRC netlist")->required();
  add_function_options(check);
  check->add_option("--trials", config.trials, "Random trials");
  check->add_option("--seed", config.seed, "SplitMix64 seed");
  check->add_flag("--exhaustive", config.exhaustive, "Enumerate all 2^n assignments");

  auto* bench = app.add_subcommand("bench", "Size/depth table across arities as CSV");
  bench->add_option("--fn", config.fn, "Function family");
  bench->add_option("--ns", config.ns, "Comma-separated arities");
  bench->add_option("--out", config.out_path, "CSV output path (default: stdout)");

  auto* export_spectrum = app.add_subcommand("export-spectrum", "Write a spectrum file");
  add_function_options(export_spectrum);
  export_spectrum->add_option("--out", config.out_path, "Output path (default: stdout)");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("symcirc");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (synth->parsed()) return cmd_synth(config, out, err);
    if (eval->parsed()) return cmd_eval(config, out, err);
    if (check->parsed()) return cmd_check(config, out, err);
    if (bench->parsed()) return cmd_bench(config, out, err);
    if (export_spectrum->parsed()) return cmd_export_spectrum(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace symcirc
