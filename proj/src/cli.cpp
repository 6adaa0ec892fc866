#include "pathtrans/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "pathtrans/json_io.hpp"
#include "pathtrans/serialize.hpp"
#include "pathtrans/suites.hpp"

namespace pathtrans::cli {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string command;
  json config = json::object();
  std::optional<double> tol_flag;
  std::optional<int> steps_flag;
  std::optional<std::string> format_flag;
  std::optional<std::string> out_flag;
  std::optional<std::string> entry_flag;

  double tol() const {
    if (tol_flag) return *tol_flag;
    return config.value("tol", 1e-8);
  }
  int steps() const {
    if (steps_flag) return *steps_flag;
    return config.value("steps", 2000);
  }
  std::string format() const {
    if (format_flag) return *format_flag;
    return config.value("format", std::string("json"));
  }
  std::string out() const {
    if (out_flag) return *out_flag;
    return config.value("out", std::string());
  }
  std::string entry() const {
    if (entry_flag) return *entry_flag;
    return config.value("entry", std::string());
  }
  int grid() const { return config.value("grid", 9); }

  SuiteOptions suite_options() const {
    SuiteOptions opt;
    opt.grid_n = grid();
    opt.tol = tol();
    opt.integrator.steps = steps();
    if (config.contains("scheme") || config.contains("reunitarize")) {
      opt.integrator = integrator_from_json(config);
      opt.integrator.steps = steps();
    }
    if (opt.tol <= 0) throw ConfigError("tolerance must be positive");
    if (opt.grid_n < 2) throw ConfigError("grid must have >= 2 points");
    return opt;
  }
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out().empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out(), std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + opt.out() + "'");
  f << text;
}

int report_exit(const std::vector<LawReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return kExitLawFailure;
  return kExitPass;
}

int cmd_transport(const Options& opt) {
  if (!opt.config.contains("connection") || !opt.config.contains("path")) {
    throw ConfigError("transport needs 'connection' and 'path' descriptors");
  }
  const ConnectionField field = connection_from_json(opt.config.at("connection"));
  const Path path = path_from_json(opt.config.at("path"));
  const double s = opt.config.value("s", path.domain().a);
  const double t = opt.config.value("t", path.domain().b);
  IntegratorConfig cfg = integrator_from_json(opt.config);
  cfg.steps = opt.steps();

  if (opt.format() != "json") {
    throw ConfigError("transport output is json only");
  }
  const TransportMatrix h = integrate_transport(field, path, s, t, cfg);
  std::string text = "{\"schema_version\":1,\"kind\":\"transport\",\"s\":" +
                     format_double(s) + ",\"t\":" + format_double(t) +
                     ",\"steps\":" + std::to_string(cfg.steps) +
                     ",\"matrix\":" + matrix_to_json(h.matrix, 1) + "}\n";
  emit(opt, text);
  return kExitPass;
}

int cmd_wilson(const Options& opt) {
  if (!opt.config.contains("potential") || !opt.config.contains("loop")) {
    throw ConfigError("wilson needs 'potential' and 'loop' descriptors");
  }
  const GaugePotential pot = potential_from_json(opt.config.at("potential"));
  const Path loop = path_from_json(opt.config.at("loop"));
  IntegratorConfig cfg = integrator_from_json(opt.config);
  cfg.steps = opt.steps();

  if (opt.format() != "json") {
    throw ConfigError("wilson output is json only");
  }
  const WilsonLoopResult w = wilson_loop(pot, loop, cfg);
  std::string text = "{\"schema_version\":1,\"kind\":\"wilson\",\"group\":\"" +
                     group_name(w.element.group) + "\"";
  if (w.element.group == Group::U1) {
    text += ",\"phase\":" + format_double(u1_phase(w.element));
  }
  text += ",\"base_point\":[";
  for (Eigen::Index i = 0; i < w.base_point.size(); ++i) {
    if (i) text += ",";
    text += format_double(w.base_point[i]);
  }
  text += "],\"matrix\":" + matrix_to_json(w.element.matrix, 1) + "}\n";
  emit(opt, text);
  return kExitPass;
}

int cmd_laws(const Options& opt) {
  const std::string entry_name = opt.entry();
  if (entry_name.empty()) {
    throw ConfigError("laws needs an 'entry' (catalog or negative-control name)");
  }
  const SuiteOptions sopt = opt.suite_options();

  std::vector<LawReport> reports;
  const auto mocks = mock_names();
  if (std::find(mocks.begin(), mocks.end(), entry_name) != mocks.end()) {
    reports = run_mock_suites(entry_name, sopt);
  } else {
    const CatalogEntry entry = catalog_entry_from_json(
        entry_name, opt.config.value("params", json::object()));
    std::vector<std::string> which = all_suite_names();
    bool strict = false;
    if (opt.config.contains("suites")) {
      which = opt.config.at("suites").get<std::vector<std::string>>();
      strict = true;
    }
    try {
      reports = run_entry_suites(entry, which, sopt, strict);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }

  emit(opt, opt.format() == "csv" ? to_csv(reports) : to_json(reports));
  return report_exit(reports);
}

int cmd_roundtrip(const Options& opt) {
  const std::string entry_name = opt.entry();
  if (entry_name.empty()) throw ConfigError("roundtrip needs an 'entry'");
  const CatalogEntry entry = catalog_entry_from_json(
      entry_name, opt.config.value("params", json::object()));
  const SuiteOptions sopt = opt.suite_options();

  std::vector<LawReport> reports;
  const TransportFamily fam =
      connection_transport(entry.connection, sopt.integrator);
  for (const auto& np : entry.paths) {
    LawReport r = roundtrip_transport(
        fam, np.path, np.path.domain().uniform_grid(sopt.grid_n), sopt.tol);
    for (auto& c : r.checks) c.path = entry.name + "/" + np.name;
    reports.push_back(std::move(r));
  }
  emit(opt, opt.format() == "csv" ? to_csv(reports) : to_json(reports));
  return report_exit(reports);
}

int cmd_convergence(const Options& opt) {
  std::vector<CatalogEntry> entries;
  if (!opt.entry().empty()) {
    entries.push_back(catalog_entry_from_json(
        opt.entry(), opt.config.value("params", json::object())));
  } else {
    entries = standard_catalog();
  }
  std::vector<int> steps = {250, 500, 1000, 2000};
  if (opt.config.contains("steps_list")) {
    steps = opt.config.at("steps_list").get<std::vector<int>>();
  }

  std::vector<ConvergenceResult> results;
  for (const auto& e : entries) results.push_back(measure_convergence(e, steps));

  emit(opt, opt.format() == "csv" ? to_csv(results) : to_json(results));
  for (const auto& r : results)
    if (!r.pass) return kExitLawFailure;
  return kExitPass;
}

}  // namespace

int run_main(int argc, const char* const* argv) {
  CLI::App app{
      "Transports along paths: connection-driven linear transports, "
      "parallel-transport laws, tensor lifts, holonomy and Wilson loops."};
  app.require_subcommand(0, 1);

  Options opt;
  std::string config_file;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_file, "JSON run configuration");
    cmd->add_option_function<double>(
        "--tol", [&](double v) { opt.tol_flag = v; }, "residual tolerance");
    cmd->add_option_function<int>(
        "--steps", [&](int v) { opt.steps_flag = v; }, "integrator steps");
    cmd->add_option_function<std::string>(
        "--format", [&](std::string v) { opt.format_flag = std::move(v); },
        "output format: json or csv");
    cmd->add_option_function<std::string>(
        "--out", [&](std::string v) { opt.out_flag = std::move(v); },
        "output file (default stdout)");
    cmd->add_option_function<std::string>(
        "--entry", [&](std::string v) { opt.entry_flag = std::move(v); },
        "catalog entry or negative-control name");
  };

  std::vector<std::string> commands = {"transport", "wilson", "laws",
                                       "roundtrip", "convergence"};
  for (const auto& name : commands) add_common(app.add_subcommand(name));
  add_common(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      CLI::App help_app{};
      app.exit(e);
      return kExitPass;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (!config_file.empty()) {
      std::ifstream f(config_file);
      if (!f) throw ConfigError("cannot read config file '" + config_file + "'");
      try {
        f >> opt.config;
      } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
      }
    }

    for (const auto& name : commands) {
      if (app.get_subcommand(name)->parsed()) opt.command = name;
    }
    if (opt.command.empty()) opt.command = opt.config.value("command", "");
    if (opt.command.empty()) {
      throw ConfigError(
          "no command given (subcommand or 'command' field in the config)");
    }
    if (opt.format() != "json" && opt.format() != "csv") {
      throw ConfigError("format must be 'json' or 'csv'");
    }

    if (opt.command == "transport") return cmd_transport(opt);
    if (opt.command == "wilson") return cmd_wilson(opt);
    if (opt.command == "laws") return cmd_laws(opt);
    if (opt.command == "roundtrip") return cmd_roundtrip(opt);
    if (opt.command == "convergence") return cmd_convergence(opt);
    throw ConfigError("unknown command '" + opt.command + "'");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace pathtrans::cli
