#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "geomwave/algebra_checks.hpp"
#include "geomwave/csv.hpp"
#include "geomwave/defect_ensemble.hpp"
#include "geomwave/dirac_waves.hpp"
#include "geomwave/lightcone.hpp"
#include "geomwave/maxwell.hpp"
#include "geomwave/random.hpp"
#include "geomwave/version.hpp"

namespace geomwave::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FlagSpec {
  std::string name;
  std::string default_value;
  std::string help;
};

using Parameters = std::map<std::string, std::string>;

/// One table destined either for a file (stem + suffix) or for stdout.
struct NamedTable {
  std::string suffix;
  CsvTable table;
};

struct CommandResult {
  int status = kSuccess;
  std::vector<NamedTable> tables;
  std::string json_report;  // verify-algebra only
};

// ---------------------------------------------------------------------------
// Flag parsing

double parse_double(const Parameters& p, const std::string& key) {
  const std::string& text = p.at(key);
  double value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw usage_error("--" + key + ": not a finite number: '" + text + "'");
  }
  return value;
}

long long parse_integer(const Parameters& p, const std::string& key) {
  const std::string& text = p.at(key);
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw usage_error("--" + key + ": not an integer: '" + text + "'");
  }
  return value;
}

std::uint64_t parse_seed(const Parameters& p) {
  const std::string& text = p.at("seed");
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw usage_error("--seed: not an unsigned 64-bit integer: '" + text + "'");
  }
  return value;
}

std::vector<double> parse_list(const Parameters& p, const std::string& key) {
  try {
    auto values = parse_number_list(p.at(key));
    for (double v : values) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite entry");
    }
    return values;
  } catch (const std::invalid_argument& e) {
    throw usage_error("--" + key + ": " + e.what());
  }
}

Vector3<double> parse_vec3(const Parameters& p, const std::string& key) {
  const auto values = parse_list(p, key);
  if (values.size() != 3) {
    throw usage_error("--" + key + ": expected 3 comma-separated numbers");
  }
  return {values[0], values[1], values[2]};
}

std::size_t parse_count(const Parameters& p, const std::string& key) {
  const long long n = parse_integer(p, key);
  if (n < 1) throw usage_error("--" + key + " must be >= 1");
  return static_cast<std::size_t>(n);
}

// ---------------------------------------------------------------------------
// Commands

CommandResult cmd_verify_algebra(const Parameters&) {
  CommandResult result;
  ordered_json report;
  report["tool"] = kToolName;
  report["version"] = kVersion;
  ordered_json identities = ordered_json::array();
  bool all_pass = true;
  for (const auto& check : run_algebra_checks()) {
    ordered_json entry;
    entry["name"] = check.name;
    entry["indices"] = check.indices;
    entry["pass"] = check.pass;
    entry["max_deviation"] = check.max_deviation;
    identities.push_back(std::move(entry));
    all_pass = all_pass && check.pass;
  }
  report["identity_count"] = identities.size();
  report["identities"] = std::move(identities);
  report["all_pass"] = all_pass;
  result.json_report = report.dump(2) + "\n";
  result.status = all_pass ? kSuccess : kContractFailure;
  return result;
}

CommandResult cmd_dirac(const Parameters& p) {
  const double mass = parse_double(p, "mass");
  const Vector3<double> momentum = parse_vec3(p, "momentum");
  const std::string& branch_name = p.at("branch");
  const std::size_t probe_count = parse_count(p, "probes");
  const std::uint64_t seed = parse_seed(p);
  if (mass < 0) throw usage_error("--mass must be non-negative");
  SpinBranch branch;
  if (branch_name == "up") {
    branch = SpinBranch::up;
  } else if (branch_name == "down") {
    branch = SpinBranch::down;
  } else {
    throw usage_error("--branch must be 'up' or 'down'");
  }
  if (mass == 0 && momentum.isZero()) {
    throw usage_error("massless state needs a nonzero momentum");
  }

  const OnShellState<double> state = make_state(momentum, mass, branch);
  bool ok = true;

  CsvTable summary({"quantity", "value"});
  summary.add_row("energy", state.momentum(0));
  summary.add_row("mass_shell_residual",
                  mass_shell_residual(state.momentum, mass));

  std::array<bool, 4> finite_axis{};
  FourVector<double> lambda;
  for (int mu = 0; mu < 4; ++mu) {
    try {
      lambda(mu) = wavelength_component(state.momentum(mu), mu);
      finite_axis[mu] = true;
    } catch (const infinite_wavelength_error&) {
      lambda(mu) = std::numeric_limits<double>::infinity();
    }
    summary.add_row("lambda_" + std::to_string(mu), lambda(mu));
  }
  const bool all_finite =
      std::all_of(finite_axis.begin(), finite_axis.end(), [](bool f) { return f; });
  if (all_finite) {
    const double rel = std::abs(wavelength_identity_residual(lambda, mass)) /
                       wavelength_identity_scale(lambda, mass);
    summary.add_row("wavelength_identity_relative_residual", rel);
    ok = ok && rel < kResidualTolerance;
  } else {
    summary.add_row("wavelength_identity_relative_residual", "undefined");
  }

  CsvTable probes({"probe", "x0", "x1", "x2", "x3", "residual", "n0", "n1",
                   "n2", "n3", "translation_deviation"});
  const auto points = probe_points(probe_count, seed);
  CounterRng shifts(seed, 0x7368696674ULL);
  double worst_residual = 0;
  double worst_translation = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& x = points[i];
    const double residual = dirac_residual(state, x).cwiseAbs().maxCoeff();
    std::array<long long, 4> n{};
    for (int mu = 0; mu < 4; ++mu) {
      const long long draw = shifts.uniform_int(-10, 10);
      n[mu] = finite_axis[mu] ? draw : 0;
    }
    const double dev = translation_invariance_check(
        state, n, std::span<const FourVector<double>>(&x, 1));
    worst_residual = std::max(worst_residual, residual);
    worst_translation = std::max(worst_translation, dev);
    probes.add_row(i, x(0), x(1), x(2), x(3), residual, n[0], n[1], n[2],
                   n[3], dev);
  }
  ok = ok && worst_residual < kResidualTolerance &&
       worst_translation < kResidualTolerance;
  summary.add_row("max_dirac_residual", worst_residual);
  summary.add_row("max_translation_deviation", worst_translation);
  summary.add_row("status", ok ? "pass" : "fail");

  CommandResult result;
  result.status = ok ? kSuccess : kContractFailure;
  result.tables.push_back({".summary.csv", std::move(summary)});
  result.tables.push_back({".probes.csv", std::move(probes)});
  return result;
}

CommandResult cmd_ensemble(const Parameters& p) {
  EnsembleConfig cfg;
  cfg.perimeter = parse_double(p, "perimeter");
  const long long samples = parse_integer(p, "samples");
  if (samples < 1) throw usage_error("--samples must be >= 1");
  cfg.sample_count = static_cast<std::size_t>(samples);
  cfg.a_min_fraction = parse_double(p, "a-min-fraction");
  cfg.times = parse_list(p, "times");
  cfg.seed = parse_seed(p);
  const std::size_t bins = parse_count(p, "bins");
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }

  const auto regions = run_ensemble(cfg);
  bool ok = true;
  CommandResult result;
  CsvTable region_table({"t", "x_lo", "x_hi"});
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const auto& r = regions[i];
    region_table.add_row(r.t, r.x_lo, r.x_hi);
    const auto [mn, mx] =
        std::minmax_element(r.sample_positions.begin(), r.sample_positions.end());
    ok = ok && r.x_lo <= *mn && r.x_hi >= *mx && r.x_lo <= r.x_hi;
    if (i > 0 && cfg.sample_count > 1) ok = ok && r.x_hi > regions[i - 1].x_hi;
  }
  result.tables.push_back({".regions.csv", std::move(region_table)});
  for (std::size_t i = 0; i < regions.size(); ++i) {
    CsvTable hist({"bin_center", "count"});
    std::size_t total = 0;
    for (const auto& bin : occupation_histogram(regions[i], bins)) {
      hist.add_row(bin.bin_center, bin.count);
      total += bin.count;
    }
    ok = ok && total == cfg.sample_count;
    result.tables.push_back(
        {".hist" + std::to_string(i) + ".csv", std::move(hist)});
  }
  result.status = ok ? kSuccess : kContractFailure;
  return result;
}

CommandResult cmd_lightcone(const Parameters& p) {
  const double a = parse_double(p, "a");
  const double b = parse_double(p, "b");
  const double v = parse_double(p, "v");
  const auto times = parse_list(p, "times");
  if (!(std::abs(v) < 1.0)) throw usage_error("--v must satisfy |v| < 1");
  if (a < 0) throw usage_error("--a must be non-negative");
  if (!(b > 0)) throw usage_error("--b must be positive");
  const BoostParameter<double> boost(v);
  // Conditioning degrades with gamma^2 near |v| = 1.
  const double tol = std::abs(v) <= 0.9 ? 1e-12 : 1e-10;

  CsvTable slices({"t", "radius"});
  CsvTable cone({"t", "x_plus", "x_minus"});
  for (double t : times) {
    slices.add_row(t, slice_radius(a, b, t));
    const auto [plus, minus] = cone_position(t);
    cone.add_row(t, plus, minus);
  }

  CsvTable boosted({"t_start", "t_end", "boosted_speed", "speed_deviation"});
  bool ok = true;
  for (std::size_t n = 1; n < times.size(); ++n) {
    const std::array<double, 2> pair{times[n - 1], times[n]};
    double dev = 0;
    try {
      dev = invariant_speed_check(boost, std::span<const double>(pair));
    } catch (const std::invalid_argument& e) {
      throw usage_error(std::string("--times: ") + e.what());
    }
    const auto p0 = boost_point(pair[0], pair[0], boost);
    const auto p1 = boost_point(pair[1], pair[1], boost);
    boosted.add_row(pair[0], pair[1],
                    (p1.first - p0.first) / (p1.second - p0.second), dev);
    ok = ok && dev < tol;
  }

  CommandResult result;
  result.status = ok ? kSuccess : kContractFailure;
  result.tables.push_back({".slices.csv", std::move(slices)});
  result.tables.push_back({".cone.csv", std::move(cone)});
  result.tables.push_back({".boost.csv", std::move(boosted)});
  return result;
}

CommandResult cmd_maxwell(const Parameters& p) {
  const Vector3<double> k = parse_vec3(p, "k");
  const std::size_t probe_count = parse_count(p, "probes");
  const std::uint64_t seed = parse_seed(p);
  if (!(k.norm() > 0)) throw usage_error("--k must be a nonzero wave vector");

  const RSPlaneWave<double> wave = solve_amplitudes(k);
  CsvTable table({"kx", "ky", "kz", "omega", "residual_majorana",
                  "residual_curl", "residual_gamma"});
  bool ok = true;
  for (const auto& pt : probe_points(probe_count, seed)) {
    const Vector3<double> x = pt.tail<3>();
    const double t = pt(0);
    const double r_maj = max_norm(majorana_residual(wave, x, t));
    const double r_curl = curl_form_residual(wave, x, t);
    const double r_gamma =
        big_gamma_form_residual(wave, x, t).cwiseAbs().maxCoeff();
    table.add_row(k(0), k(1), k(2), wave.omega, r_maj, r_curl, r_gamma);
    ok = ok && r_maj < kResidualTolerance && r_curl < kResidualTolerance &&
         r_gamma < kResidualTolerance;
  }
  CommandResult result;
  result.status = ok ? kSuccess : kContractFailure;
  result.tables.push_back({".csv", std::move(table)});
  return result;
}

// ---------------------------------------------------------------------------
// Dispatch

struct CommandSpec {
  std::string name;
  std::string description;
  std::vector<FlagSpec> flags;
  std::function<CommandResult(const Parameters&)> handler;
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> specs = {
      {"verify-algebra",
       "Check the gamma/spin/block-gamma identities and emit a JSON report",
       {},
       cmd_verify_algebra},
      {"dirac",
       "Plane-wave Dirac solution: residuals, wavelengths, translations",
       {{"mass", "1", "Rest mass m >= 0"},
        {"momentum", "0,0,0", "Spatial momentum px,py,pz"},
        {"branch", "up", "Spin branch: up or down"},
        {"probes", "100", "Number of spacetime probe points"},
        {"seed", "0", "Probe/shift seed"}},
       cmd_dirac},
      {"ensemble",
       "Equal-perimeter ellipse ensemble: occupation regions and histograms",
       {{"perimeter", "6.283185307179586", "Common ellipse perimeter"},
        {"samples", "100000", "Number of sampled defects"},
        {"a-min-fraction", "0.01", "a_min as a fraction of a_max"},
        {"times", "0,1,2", "Ascending non-negative times"},
        {"bins", "10", "Histogram bins"},
        {"seed", "0", "Sampling seed"}},
       cmd_ensemble},
      {"lightcone",
       "Hyperboloid slices, light-cone positions and boosted null speed",
       {{"a", "1", "Hyperboloid semiaxis a >= 0"},
        {"b", "1", "Hyperboloid semiaxis b > 0"},
        {"v", "0", "Boost velocity, |v| < 1"},
        {"times", "0,1,2", "Sample times"}},
       cmd_lightcone},
      {"maxwell",
       "Majorana-form plane wave: three-way residual comparison",
       {{"k", "0,0,1", "Wave vector kx,ky,kz"},
        {"probes", "20", "Number of spacetime probe points"},
        {"seed", "0", "Probe seed"}},
       cmd_maxwell},
  };
  return specs;
}

const CommandSpec* find_command(const std::string& name) {
  for (const auto& c : commands()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string manifest_path(const std::string& stem) {
  return stem + ".manifest.json";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw usage_error("cannot open '" + path + "' for writing");
  os << contents;
  if (!os) throw usage_error("failed writing '" + path + "'");
}

std::string manifest_json(const CommandSpec& spec, const Parameters& params,
                          const std::string& stem) {
  ordered_json m;
  m["tool"] = kToolName;
  m["version"] = kVersion;
  m["subcommand"] = spec.name;
  ordered_json jp = ordered_json::object();
  for (const auto& flag : spec.flags) jp[flag.name] = params.at(flag.name);
  m["parameters"] = std::move(jp);
  if (params.count("seed")) {
    m["seed"] = parse_seed(params);
  } else {
    m["seed"] = 0;
  }
  m["output_path"] = stem;
  return m.dump(2) + "\n";
}

int execute(const CommandSpec& spec, const Parameters& params,
            const std::string& stem, std::ostream& out) {
  CommandResult result = spec.handler(params);
  if (stem.empty()) {
    if (!result.json_report.empty()) out << result.json_report;
    for (std::size_t i = 0; i < result.tables.size(); ++i) {
      if (i) out << '\n';
      result.tables[i].table.write(out);
    }
    return result.status;
  }
  if (!result.json_report.empty()) {
    write_file(stem + ".json", result.json_report);
    out << stem << ".json\n";
  }
  for (const auto& t : result.tables) {
    write_file(stem + t.suffix, t.table.str());
    out << stem << t.suffix << '\n';
  }
  write_file(manifest_path(stem), manifest_json(spec, params, stem));
  out << manifest_path(stem) << '\n';
  return result.status;
}

int replay(const std::string& path, std::ostream& out) {
  std::ifstream is(path);
  if (!is) throw usage_error("cannot read manifest '" + path + "'");
  ordered_json m;
  try {
    m = ordered_json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error("malformed manifest: " + std::string(e.what()));
  }
  const CommandSpec* spec = nullptr;
  Parameters params;
  std::string stem;
  try {
    spec = find_command(m.at("subcommand").get<std::string>());
    if (spec == nullptr) throw usage_error("manifest names unknown subcommand");
    for (const auto& flag : spec->flags) {
      params[flag.name] = m.at("parameters").value(flag.name, flag.default_value);
    }
    stem = m.at("output_path").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw usage_error("incomplete manifest: " + std::string(e.what()));
  }
  return execute(*spec, params, stem, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Numerical checks of geometrized Dirac and Maxwell plane waves",
               kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::map<std::string, Parameters> values;
  std::map<std::string, std::string> stems;
  std::map<std::string, CLI::App*> subs;
  for (const auto& spec : commands()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    Parameters& params = values[spec.name];
    for (const auto& flag : spec.flags) {
      params[flag.name] = flag.default_value;
      sub->add_option("--" + flag.name, params[flag.name], flag.help)
          ->capture_default_str();
    }
    sub->add_option("--out", stems[spec.name],
                    "Output path stem; tables are written to <stem>.*.csv "
                    "with a <stem>.manifest.json (default: stdout)");
    subs[spec.name] = sub;
  }
  std::string manifest;
  CLI::App* replay_cmd =
      app.add_subcommand("replay", "Re-run the invocation recorded in a manifest");
  replay_cmd->add_option("manifest", manifest, "Manifest JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (replay_cmd->parsed()) return replay(manifest, out);
    for (const auto& spec : commands()) {
      if (subs[spec.name]->parsed()) {
        return execute(spec, values[spec.name], stems[spec.name], out);
      }
    }
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kContractFailure;
  }
  return kUsageError;
}

}  // namespace geomwave::cli
