#include "qet/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qet/closed_form.hpp"
#include "qet/error.hpp"
#include "qet/numeric.hpp"
#include "qet/output.hpp"
#include "qet/protocol.hpp"
#include "qet/verification.hpp"

namespace qet::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) parts.push_back(trim(part));
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::uint64_t parse_unsigned(const std::string& text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) throw UsageError("not a non-negative integer: '" + text + "'");
  return value;
}

double parse_real(const std::string& text) {
  // from_chars for double is unavailable on older standard libraries.
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(value)) {
    throw UsageError("not a finite number: '" + text + "'");
  }
  return value;
}

const std::vector<std::string>& flag_keys() {
  static const std::vector<std::string> keys = {"bell", "oracle"};
  return keys;
}

const std::vector<std::string>& value_keys() {
  static const std::vector<std::string> keys = {"n",    "m",    "ratio", "ratio-log", "h",      "outputs",    "alpha",
                                                "sample", "seed", "threads", "out",     "format", "n-max", "oracle-cap"};
  return keys;
}

/// Turns key=value lines into flag tokens.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(fmt::format("{}:{}: expected key=value", path, line_no));
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (std::ranges::find(flag_keys(), key) != flag_keys().end()) {
      if (value == "true" || value == "1") {
        tokens.push_back("--" + key);
      } else if (value != "false" && value != "0") {
        throw UsageError(fmt::format("{}:{}: '{}' expects true or false", path, line_no, key));
      }
    } else if (std::ranges::find(value_keys(), key) != value_keys().end()) {
      tokens.push_back("--" + key);
      tokens.push_back(value);
    } else {
      throw UsageError(fmt::format("{}:{}: unknown key '{}'", path, line_no, key));
    }
  }
  return tokens;
}

bool mentions_flag(const std::vector<std::string>& args, std::string_view flag) {
  return std::ranges::any_of(args, [&](const std::string& a) {
    return a == flag || (a.size() > flag.size() && a.starts_with(flag) && a[flag.size()] == '=');
  });
}

std::optional<std::string> config_path(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config requires a file");
      path = args[i + 1];
    } else if (args[i].starts_with("--config=")) {
      path = args[i].substr(9);
    }
  }
  return path;
}

Command parse_command(const std::string& name) {
  static const std::pair<std::string_view, Command> table[] = {
      {"efficiency", Command::Efficiency}, {"sweep", Command::Sweep}, {"figure", Command::Figure},
      {"verify", Command::Verify},         {"nopt", Command::NOpt},   {"bell", Command::Bell},
      {"fixtures", Command::Fixtures}};
  for (const auto& [key, cmd] : table) {
    if (key == name) return cmd;
  }
  throw UsageError("unknown command '" + name + "'");
}

std::uint64_t single(const std::vector<std::uint64_t>& values, std::string_view flag) {
  if (values.size() != 1) throw UsageError(fmt::format("{} takes a single value for this command", flag));
  return values.front();
}

unsigned effective_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int run_efficiency(const RunConfig& c, std::ostream& out) {
  const std::uint64_t n = single(c.ns, "--n");
  if (c.ratios.size() != 1) throw UsageError("efficiency takes a single --ratio");
  const double ratio = c.ratios.front();
  const std::uint64_t m = c.outputs ? c.outputs->size() : (c.ms ? single(*c.ms, "--m") : 1);

  const auto params = params_from_ratio(static_cast<std::int64_t>(n), ratio, c.h,
                                        c.oracle || c.sample_shots ? std::optional(c.oracle_cap) : std::nullopt);
  const auto part = c.outputs ? Partition::with_outputs(params, *c.outputs) : Partition::trailing(params, m);
  const auto row = sweep_row(n, m, ratio, c.h, c.bell && n >= 3);
  const auto theta = optimal_theta(params, part);

  std::vector<std::pair<std::string, std::string>> fields = {
      {"n", std::to_string(row.n)},        {"m", std::to_string(row.m)},       {"ratio", format_real(row.ratio)},
      {"e_in", format_real(row.e_in)},     {"e_out", format_real(row.e_out)},  {"eta", format_real(row.eta)},
      {"bell", row.bell ? format_real(*row.bell) : ""}, {"theta_opt", format_real(theta.theta)}};
  nlohmann::json j = sweep_row_json(row);
  j["theta_opt"] = theta.theta;

  ProtocolOptions options;
  options.oracle_cap = c.oracle_cap;
  options.threads = effective_threads(c.threads);
  options.keep_branches = false;
  if (c.oracle) {
    const auto report = simulate_with_outputs(params, part.outputs(), theta.theta, options);
    const auto numeric = optimize_theta_numeric(params, part, options);
    fields.insert(fields.end(), {{"oracle_e_in", format_real(report.e_in)},
                                 {"oracle_e_out", format_real(report.e_out)},
                                 {"oracle_e_out_trace", format_real(report.e_out_via_trace)},
                                 {"oracle_theta_numeric", format_real(numeric.theta)}});
    j["oracle"] = {{"e_in", report.e_in},
                   {"e_out", report.e_out},
                   {"e_out_trace", report.e_out_via_trace},
                   {"theta_numeric", numeric.theta}};
  }
  if (c.sample_shots) {
    const std::uint64_t seed = c.seed.value_or(0);
    const auto sampled = sample_protocol(params, part, theta.theta, *c.sample_shots, seed, options);
    fields.insert(fields.end(), {{"sample_shots", std::to_string(sampled.shots)},
                                 {"sample_seed", std::to_string(sampled.seed)},
                                 {"sample_e_in", format_real(sampled.e_in)},
                                 {"sample_e_out", format_real(sampled.e_out)}});
    j["sample"] = {{"shots", sampled.shots}, {"seed", sampled.seed}, {"e_in", sampled.e_in}, {"e_out", sampled.e_out}};
  }

  if (c.format == Format::Json) {
    emit_json(out, j);
  } else {
    std::string header, line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      header += (i ? "," : "") + fields[i].first;
      line += (i ? "," : "") + fields[i].second;
    }
    out << header << '\n' << line << '\n';
  }
  return kExitOk;
}

int run_sweep(const RunConfig& c, std::ostream& out) {
  if (c.ns.empty()) throw UsageError("sweep requires --n");
  if (c.ratios.empty()) throw UsageError("sweep requires --ratio or --ratio-log");
  SweepSpec spec{.ns = c.ns, .ms = c.ms, .ratios = c.ratios, .h = c.h, .with_bell = c.bell,
                 .threads = effective_threads(c.threads)};
  const auto rows = efficiency_sweep(spec);
  if (c.format == Format::Json) {
    emit_json(out, sweep_json(rows));
  } else {
    write_sweep_csv(out, rows);
  }
  return kExitOk;
}

void emit_figure(const FigureDataset& data, Format format, std::ostream& out) {
  if (format == Format::Json) {
    emit_json(out, {{"figure", figure_name(data.id)}, {"grid", data.grid}, {"rows", sweep_json(data.rows)}});
  } else {
    write_sweep_csv(out, data.rows, fmt::format("figure {}: {}", figure_name(data.id), data.grid));
  }
}

int run_figure(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const unsigned threads = effective_threads(c.threads);
  if (c.figure) {
    emit_figure(figure_dataset(*c.figure, threads), c.format, out);
    return kExitOk;
  }
  // All figures: one file each when a directory is given.
  if (c.output_path.empty()) {
    for (auto id : all_figures()) emit_figure(figure_dataset(id, threads), c.format, out);
    return kExitOk;
  }
  const std::filesystem::path dir(c.output_path);
  std::filesystem::create_directories(dir);
  for (auto id : all_figures()) {
    const auto path = dir / fmt::format("{}.{}", figure_name(id), c.format == Format::Json ? "json" : "csv");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path.string());
    emit_figure(figure_dataset(id, threads), c.format, file);
    err << "wrote " << path.string() << '\n';
  }
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  VerifyOptions options;
  options.n_max = static_cast<unsigned>(std::min<std::uint64_t>(c.n_max, c.oracle_cap));
  options.oracle_cap = c.oracle_cap;
  options.ground_state_n_max = c.oracle_cap;
  options.threads = effective_threads(c.threads);
  const auto results = run_verification(options);
  const bool ok = std::ranges::all_of(results, [](const CheckResult& r) { return r.passed; });
  if (c.format == Format::Json) {
    auto array = nlohmann::json::array();
    for (const auto& r : results) {
      array.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    emit_json(out, {{"passed", ok}, {"checks", array}});
  } else {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    for (const auto& r : results) {
      out << fmt::format("{}  {:<{}}  {:7.2f}s  {}\n", r.passed ? "PASS" : "FAIL", r.name, width, r.seconds, r.detail);
    }
    out << (ok ? "all checks passed\n" : "verification FAILED\n");
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int run_nopt(const RunConfig& c, std::ostream& out) {
  const auto ratios = c.ratios.empty() ? std::vector<double>{10.0, 100.0, 1000.0} : c.ratios;
  auto array = nlohmann::json::array();
  if (c.format == Format::Csv) out << "x,n_opt_real,n_opt_int,eta_at_opt,c_aux\n";
  for (double x : ratios) {
    const auto r = n_opt(x, c.n_max);
    if (c.format == Format::Json) {
      array.push_back({{"x", r.x}, {"n_opt_real", r.n_opt_real}, {"n_opt_int", r.n_opt_int},
                       {"eta_at_opt", r.eta_at_opt}, {"c_aux", r.c_aux}});
    } else {
      out << fmt::format("{},{},{},{},{}\n", format_real(r.x), format_real(r.n_opt_real), r.n_opt_int,
                         format_real(r.eta_at_opt), format_real(r.c_aux));
    }
  }
  if (c.format == Format::Json) emit_json(out, array);
  return kExitOk;
}

int run_bell(const RunConfig& c, std::ostream& out) {
  if (c.ns.empty()) throw UsageError("bell requires --n");
  if (c.alpha && !c.ratios.empty()) throw UsageError("bell takes either --alpha or --ratio, not both");
  const auto ratios = c.ratios.empty() && !c.alpha ? std::vector<double>{1.0} : c.ratios;
  const std::string key = c.alpha ? "alpha" : "ratio";
  auto array = nlohmann::json::array();
  if (c.format == Format::Csv) out << "n," << key << ",b_value,violates,saturation\n";
  auto emit = [&](std::uint64_t n, double x, double b) {
    const bool violates = b > 1.0;
    const double saturation = bell_saturation(n);
    if (c.format == Format::Json) {
      array.push_back({{"n", n}, {key, x}, {"b_value", b}, {"violates", violates}, {"saturation", saturation}});
    } else {
      out << fmt::format("{},{},{},{},{}\n", n, format_real(x), format_real(b), violates ? "true" : "false",
                         format_real(saturation));
    }
  };
  for (auto n : c.ns) {
    if (c.alpha) {
      emit(n, *c.alpha, bell_value_ghz_angle(n, *c.alpha));
    } else {
      for (double ratio : ratios) {
        emit(n, ratio, bell_value_ground_state(params_from_ratio(static_cast<std::int64_t>(n), ratio, c.h)).b_value);
      }
    }
  }
  if (c.format == Format::Json) emit_json(out, array);
  return kExitOk;
}

int run_fixtures(const RunConfig& c, std::ostream& out) {
  const auto report = appendix_fixture_check();
  if (c.format == Format::Json) {
    auto array = nlohmann::json::array();
    for (const auto& f : report.checks) {
      nlohmann::json j = {{"name", f.name},           {"n", f.n},
                          {"m", f.m},                 {"quantity", f.quantity},
                          {"max_abs_deviation", f.max_abs_deviation},
                          {"expected_match", f.expected_match},
                          {"consistent", f.consistent}, {"passed", f.passed()}};
      if (f.oracle) {
        j["oracle"] = {{"h", f.oracle->h},
                       {"k", f.oracle->k},
                       {"oracle_value", f.oracle->oracle_value},
                       {"general_value", f.oracle->general_value},
                       {"printed_value", f.oracle->printed_value}};
      }
      array.push_back(std::move(j));
    }
    emit_json(out, {{"tolerance", report.tolerance}, {"grid", report.grid}, {"passed", report.all_passed()},
                    {"checks", array}});
  } else {
    out << "name,n,m,quantity,max_abs_deviation,expected_match,consistent,status,oracle_value,general_value,"
           "printed_value\n";
    for (const auto& f : report.checks) {
      out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", f.name, f.n, f.m, f.quantity,
                         format_real(f.max_abs_deviation), f.expected_match ? "true" : "false",
                         f.consistent ? "true" : "false", f.passed() ? "pass" : "fail",
                         f.oracle ? format_real(f.oracle->oracle_value) : "",
                         f.oracle ? format_real(f.oracle->general_value) : "",
                         f.oracle ? format_real(f.oracle->printed_value) : "");
    }
  }
  return report.all_passed() ? kExitOk : kExitVerificationFailed;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::Efficiency: return run_efficiency(c, out);
    case Command::Sweep: return run_sweep(c, out);
    case Command::Figure: return run_figure(c, out, err);
    case Command::Verify: return run_verify(c, out);
    case Command::NOpt: return run_nopt(c, out);
    case Command::Bell: return run_bell(c, out);
    case Command::Fixtures: return run_fixtures(c, out);
  }
  return kExitUsage;
}

}  // namespace

std::vector<std::uint64_t> parse_integer_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  for (const auto& item : split(text, ',')) {
    if (const auto colon = item.find(':'); colon != std::string::npos) {
      const auto lo = parse_unsigned(trim(item.substr(0, colon)));
      const auto hi = parse_unsigned(trim(item.substr(colon + 1)));
      if (hi < lo) throw UsageError("empty range '" + item + "'");
      if (hi - lo > 10'000'000) throw UsageError("range too long '" + item + "'");
      for (auto v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      values.push_back(parse_unsigned(item));
    }
  }
  if (values.empty()) throw UsageError("empty list");
  return values;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& item : split(text, ',')) values.push_back(parse_real(item));
  if (values.empty()) throw UsageError("empty list");
  return values;
}

std::vector<double> parse_log_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 && parts.size() != 3) throw UsageError("--ratio-log expects lo:hi[:per_decade]");
  auto exponent = [](const std::string& s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("not an integer exponent: '" + s + "'");
    }
    return v;
  };
  const int lo = exponent(parts[0]);
  const int hi = exponent(parts[1]);
  const int per_decade = parts.size() == 3 ? exponent(parts[2]) : 50;
  if (hi < lo || per_decade < 1 || hi - lo > 40 || per_decade > 10000) {
    throw UsageError("invalid --ratio-log range '" + text + "'");
  }
  return decade_grid(lo, hi, per_decade);
}

RunConfig parse_args(const std::vector<std::string>& args) {
  std::vector<std::string> tokens;
  if (const auto path = config_path(args)) tokens = read_config(*path);
  tokens.insert(tokens.end(), args.begin(), args.end());

  CLI::App app{"N-qubit quantum energy teleportation: closed forms, oracle and figure data", "qet"};
  app.set_help_flag("--help", "print this help");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string command, target, n, m, ratio, ratio_log, outputs, format = "csv", config;
  std::optional<double> h, alpha;
  std::optional<std::uint64_t> sample, seed, n_max;
  std::optional<unsigned> oracle_cap;
  unsigned threads = 1;
  std::string out_path;
  bool bell = false, oracle = false;

  app.add_option("command", command, "efficiency | sweep | figure | verify | nopt | bell | fixtures")->required();
  app.add_option("figure", target, "figure name (fig2a ... fig7) or 'all'");
  app.add_option("--n", n, "qubit count: value, list a,b,c or range lo:hi");
  app.add_option("--m", m, "output count(s); default every m (sweep) or 1 (efficiency)");
  app.add_option("--ratio", ratio, "k/h value(s), comma-separated");
  app.add_option("--ratio-log", ratio_log, "k/h decade grid lo:hi[:per_decade]");
  app.add_option("--h", h, "energy unit h (rescales outputs)");
  app.add_option("--outputs", outputs, "explicit output qubit labels, e.g. 1,3");
  app.add_option("--alpha", alpha, "GHZ angle for the bell command");
  app.add_flag("--bell", bell, "attach Bell values to sweep rows");
  app.add_flag("--oracle", oracle, "cross-check with the brute-force oracle");
  app.add_option("--sample", sample, "Monte Carlo shots (efficiency only)");
  app.add_option("--seed", seed, "seed for --sample");
  app.add_option("--threads", threads, "worker threads; 0 = all cores");
  app.add_option("--out", out_path, "output file (directory for 'figure all')");
  app.add_option("--format", format, "csv or json");
  app.add_option("--n-max", n_max, "verify: largest N of the oracle grid; nopt: scan limit");
  app.add_option("--oracle-cap", oracle_cap, "largest N for 2^N-sized objects (env QET_ORACLE_CAP)");
  app.add_option("--config", config, "key=value file mirroring the flags");

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig c;
  c.command = parse_command(command);
  if (format == "csv") {
    c.format = Format::Csv;
  } else if (format == "json") {
    c.format = Format::Json;
  } else {
    throw UsageError("--format must be csv or json");
  }
  c.output_path = out_path;
  c.threads = threads;
  c.seed = seed;
  c.bell = bell;
  c.oracle = oracle;
  c.sample_shots = sample;
  c.alpha = alpha;

  if (oracle_cap) c.oracle_cap = *oracle_cap;
  if (!mentions_flag(args, "--oracle-cap")) {
    if (const char* env = std::getenv("QET_ORACLE_CAP"); env && *env) {
      c.oracle_cap = static_cast<unsigned>(parse_unsigned(env));
    }
  }
  if (c.oracle_cap < 2 || c.oracle_cap > 30) throw UsageError("oracle cap must lie in [2, 30]");

  if (h) {
    if (!(*h > 0.0) || !std::isfinite(*h)) throw UsageError("--h must be positive");
    c.h = *h;
  }
  if (!n.empty()) c.ns = parse_integer_list(n);
  if (!m.empty()) c.ms = parse_integer_list(m);
  if (!ratio.empty() && !ratio_log.empty()) throw UsageError("give --ratio or --ratio-log, not both");
  if (!ratio.empty()) c.ratios = parse_real_list(ratio);
  if (!ratio_log.empty()) c.ratios = parse_log_range(ratio_log);
  for (double r : c.ratios) {
    if (r < 0.0) throw UsageError("k/h must be nonnegative");
  }
  if (!outputs.empty()) {
    if (c.ms) throw UsageError("give --m or --outputs, not both");
    c.outputs = parse_integer_list(outputs);
  }
  if (c.sample_shots && *c.sample_shots == 0) throw UsageError("--sample needs at least one shot");
  if (c.seed && !c.sample_shots) throw UsageError("--seed only applies with --sample");
  if (c.sample_shots && c.command != Command::Efficiency) throw UsageError("--sample applies to efficiency only");
  if (c.alpha && c.command != Command::Bell) throw UsageError("--alpha applies to bell only");

  if (c.command == Command::Figure) {
    if (target.empty()) throw UsageError("figure requires a name or 'all'");
    if (target != "all") {
      try {
        c.figure = parse_figure(target);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
  } else if (!target.empty()) {
    throw UsageError("unexpected argument '" + target + "'");
  }
  if (c.command == Command::Verify) c.n_max = n_max.value_or(10);
  if (c.command == Command::NOpt) c.n_max = n_max.value_or(100000);
  if (c.command == Command::Efficiency && c.ns.empty()) throw UsageError("efficiency requires --n");
  if (c.command == Command::Efficiency && c.ratios.empty()) throw UsageError("efficiency requires --ratio");
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::Figure && !config.figure && !config.output_path.empty()) {
      return dispatch(config, out, err);
    }
    // Render fully first so a failed run emits nothing and leaves no file behind.
    std::ostringstream buffer;
    const int status = dispatch(config, buffer, err);
    if (config.output_path.empty()) {
      out << buffer.str();
      return status;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + config.output_path);
    file << buffer.str();
    return status;
  } catch (const UsageError& e) {
    err << "qet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "qet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qet: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "qet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qet: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace qet::cli
