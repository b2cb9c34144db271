// halfspace: command-line front end for the half-space Green's function and
// MIMO EDoF library.
//
//   halfspace green    --config scenario.cfg --mode half --plane x --at 10 ...
//   halfspace fit      --config scenario.cfg
//   halfspace edof     --config scenario.cfg
//   halfspace sweep    --config scenario.cfg --var M --from 2 --to 200 --step 1
//   halfspace validate --only identity
//
// Exit codes: 0 success, 1 validation failure, 2 configuration error,
// 3 numerical failure.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "halfspace/config.hpp"
#include "halfspace/errors.hpp"
#include "halfspace/scenario.hpp"
#include "halfspace/validation.hpp"

namespace {

using namespace halfspace;

constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
  std::string config_path;
  std::string preset;
  std::string mode;
  std::vector<std::string> settings;
  std::string out;
};

ScenarioConfig build_config(const CommonOptions& o) {
  ScenarioConfig c = o.config_path.empty() ? ScenarioConfig{} : load_config(o.config_path);
  if (!o.preset.empty()) apply_preset(c, o.preset);
  for (const auto& kv : o.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    apply_setting(c, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!o.mode.empty()) c.green_mode = parse_green_mode(o.mode);
  c.validate();
  return c;
}

std::pair<double, double> parse_span(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError(std::string(flag) + " expects from:to");
  try {
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ConfigError(std::string(flag) + " expects numeric from:to, got '" + text + "'");
  }
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string(flag) + ": invalid number '" + item + "'");
    }
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Data goes to --out (or stdout); run metadata to <out>.meta.json so data
// files stay byte-reproducible.
void emit(const CommonOptions& o, const std::string& command, const ScenarioConfig& config,
          const std::string& data) {
  if (o.out.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + o.out + "'");
  file << data;

  nlohmann::json meta;
  meta["command"] = command;
  meta["generated_utc"] = utc_timestamp();
  meta["config"] = to_config_text(config);
  meta["data_file"] = o.out;
  std::ofstream(o.out + ".meta.json") << meta.dump(2) << '\n';
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config_path, "Scenario file (key = value)");
  cmd->add_option("--preset", o.preset, "array-size, distance, rx-height (append -zs50 for z_s = 50 m)");
  cmd->add_option("--mode", o.mode, "Green's function: free | half | oracle");
  cmd->add_option("--set", o.settings, "Override one config key (key=value), repeatable");
  cmd->add_option("--out", o.out, "Output path (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Half-space Green's function and MIMO EDoF toolkit"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* green = app.add_subcommand("green", "Dump G over a plane as CSV");
  add_common(green, common);
  std::string plane_axis = "x";
  double plane_at = 10.0;
  std::string u_span = "-10:10";
  std::string v_span = "0:10";
  std::string resolution = "101,101";
  std::string source_text;
  green->add_option("--plane", plane_axis, "Fixed axis: x | y | z")->check(CLI::IsMember({"x", "y", "z"}));
  green->add_option("--at", plane_at, "Value of the fixed coordinate (m)");
  green->add_option("--u", u_span, "First free axis range from:to (m)");
  green->add_option("--v", v_span, "Second free axis range from:to (m)");
  green->add_option("--res", resolution, "Grid points per axis: nu,nv");
  green->add_option("--source", source_text, "Source point x,y,z (default 0,0,z_s)");

  auto* fit = app.add_subcommand("fit", "Dump Prony and complex-image coefficients");
  add_common(fit, common);

  auto* edof = app.add_subcommand("edof", "EDoF at a single scenario point");
  add_common(edof, common);

  auto* sweep = app.add_subcommand("sweep", "EDoF sweep over M (=N), rho or z_r");
  add_common(sweep, common);
  std::string var = "M";
  double from = 0.0, to = 0.0, step = 0.0;
  std::string values_text;
  sweep->add_option("--var", var, "Sweep variable: M | rho | zr")->check(CLI::IsMember({"M", "rho", "zr"}));
  auto* from_opt = sweep->add_option("--from", from, "Range start");
  auto* to_opt = sweep->add_option("--to", to, "Range end (inclusive)");
  auto* step_opt = sweep->add_option("--step", step, "Range step");
  auto* values_opt = sweep->add_option("--values", values_text, "Explicit list a,b,c");
  values_opt->excludes(from_opt)->excludes(to_opt)->excludes(step_opt);

  auto* validate = app.add_subcommand("validate", "Run the numerical self-checks");
  add_common(validate, common);
  std::string only;
  double tol = 0.0;
  auto* only_opt = validate->add_option("--only", only, "Run a single check");
  auto* tol_opt = validate->add_option("--tol", tol, "Override every check's tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const ScenarioConfig config = build_config(common);
    std::ostringstream data;

    if (*green) {
      PlaneSpec plane;
      plane.fixed_axis = plane_axis.front();
      plane.at = plane_at;
      std::tie(plane.u_from, plane.u_to) = parse_span(u_span, "--u");
      std::tie(plane.v_from, plane.v_to) = parse_span(v_span, "--v");
      const auto res = parse_list(resolution, "--res");
      if (res.size() != 2) throw ConfigError("--res expects nu,nv");
      plane.u_count = static_cast<int>(res[0]);
      plane.v_count = static_cast<int>(res[1]);
      plane.source = {0.0, 0.0, config.z_s};
      if (!source_text.empty()) {
        const auto p = parse_list(source_text, "--source");
        if (p.size() != 3) throw ConfigError("--source expects x,y,z");
        plane.source = {p[0], p[1], p[2]};
      }
      write_grid_csv(data, plane, dump_green_grid(config, plane));
      emit(common, "green", config, data.str());
    } else if (*fit) {
      dump_fit(data, config);
      emit(common, "fit", config, data.str());
    } else if (*edof) {
      write_edof_csv(data, config, compute_edof(config));
      emit(common, "edof", config, data.str());
    } else if (*sweep) {
      SweepSpec spec;
      const SweepVariable variable = parse_sweep_variable(var);
      if (*values_opt) {
        spec = SweepSpec{variable, parse_list(values_text, "--values")};
      } else {
        if (!*from_opt || !*to_opt) throw ConfigError("sweep needs --values or --from/--to[/--step]");
        spec = SweepSpec::range(variable, from, to, *step_opt ? step : 1.0);
      }
      write_sweep_csv(data, spec, run_sweep(config, spec));
      emit(common, "sweep", config, data.str());
    } else if (*validate) {
      ValidationOptions options;
      if (*only_opt) options.only = only;
      if (*tol_opt) options.tolerance = tol;
      const auto results = run_validation(config, options);
      write_validation_report(data, results);
      emit(common, "validate", config, data.str());
      return all_passed(results) ? 0 : kExitValidation;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
