// symcon: command-line front end for concurrence sweeps.
//
//   symcon sweep    --config cfg.json            temperature curve
//   symcon heatmap  --model line3 --set J1=-1 --x J2:-1.5:1.5:81 --y J3:-1.5:1.5:81 --t 0.01
//   symcon spectrum --model line3 --set J1=-1 --set J3=0.5 --x J2:-1.5:1.5:121
//   symcon catalog  --model line3
//   symcon selftest
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include "symcon/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace symcon;
using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct Overrides {
  std::string config_path;
  std::string model;
  std::vector<std::string> sets;
  std::vector<double> temps;
  std::string t_range;
  std::string x, y;
  std::string emit;
  int threads = -1;
  std::string out;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string p; std::getline(ss, p, sep);) parts.push_back(p);
  return parts;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": '" + s + "' is not a number");
  }
}

json parse_axis_flag(const std::string& s, const std::string& flag) {
  const auto p = split(s, ':');
  if (p.size() != 4) throw ConfigError(flag + ": expected Jk:min:max:steps, got '" + s + "'");
  const double steps = to_double(p[3], flag + " steps");
  if (steps != std::floor(steps)) throw ConfigError(flag + ": steps must be an integer");
  return {{"coupling", p[0]}, {"min", to_double(p[1], flag + " min")}, {"max", to_double(p[2], flag + " max")},
          {"steps", static_cast<int>(steps)}};
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open configuration file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

// File config first, then command-line overrides on top.
json merged_config(const Overrides& o) {
  json j = o.config_path.empty() ? json::object() : load_config(o.config_path);
  if (!j.is_object()) throw ConfigError(o.config_path + ": top level must be a JSON object");
  if (!o.model.empty()) j["model"] = o.model;
  for (const auto& s : o.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("--set: expected Jk=value, got '" + s + "'");
    j["couplings"][s.substr(0, eq)] = to_double(s.substr(eq + 1), "--set " + s.substr(0, eq));
  }
  if (!o.temps.empty()) {
    j.erase("temperature_range");
    j["temperatures"] = o.temps;
  }
  if (!o.t_range.empty()) {
    const auto p = split(o.t_range, ':');
    if (p.size() != 3 && p.size() != 4) throw ConfigError("--t-range: expected min:max:steps[:log|linear]");
    j.erase("temperatures");
    j["temperature_range"] = {{"min", to_double(p[0], "--t-range min")},
                              {"max", to_double(p[1], "--t-range max")},
                              {"steps", static_cast<int>(to_double(p[2], "--t-range steps"))},
                              {"scale", p.size() == 4 ? p[3] : "linear"}};
  }
  if (!o.x.empty()) j["x_axis"] = parse_axis_flag(o.x, "--x");
  if (!o.y.empty()) j["y_axis"] = parse_axis_flag(o.y, "--y");
  if (!o.emit.empty()) {
    json e = {{"c_s", false}, {"wootters", false}, {"weights", false}, {"spectrum", false}, {"catalog", false}};
    for (const auto& name : split(o.emit, ',')) {
      if (!e.contains(name)) throw ConfigError("--emit: unknown flag '" + name + "'");
      e[name] = true;
    }
    j["emit"] = e;
  }
  if (o.threads >= 0) j["threads"] = o.threads;
  if (!o.out.empty()) j["output"] = o.out;
  j.erase("mode");
  return j;
}

void emit_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(path + ": cannot open output file");
  out << text;
}

int run_mode(SweepMode mode, const Overrides& o) {
  const SweepConfig cfg = SweepConfig::from_json(merged_config(o), mode);
  const Table t = run_sweep(cfg);
  std::ostringstream os;
  write_csv(os, cfg.to_json(), t);
  emit_text(cfg.output, os.str());
  return 0;
}

int run_catalog(const std::string& model, const std::string& out) {
  const auto k = parse_model(model);
  if (!k) throw ConfigError("--model: unknown model '" + model + "'");
  emit_text(out, catalog_json(*k, model_catalog(*k)).dump(2) + "\n");
  return 0;
}

// Quick consistency run: oracle agreement on a coarse grid plus a few fixed
// values. One line per check.
int run_selftest() {
  bool all = true;
  const auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    all = all && ok;
  };
  for (ModelKind k : {ModelKind::TwoSpinIsotropic, ModelKind::TwoSpinAxial}) {
    double worst = 0.0;
    for (double j1 : {-1.0, 1.0, 2.0})
      for (double j2 : {-2.0, 0.5, 1.0}) {
        Couplings j{j1, k == ModelKind::TwoSpinAxial ? j2 : 0.0, 0.0, 0.0};
        const ModelSpec spec = ModelSpec::make(k, j);
        const auto ms = diagonalize(spec);
        for (int i = 0; i <= 8; ++i) {
          const double t = 0.01 * std::pow(1e4, i / 8.0);
          const auto ens = thermal_ensemble(k, ms, t);
          const auto res = solve_cs(make_problem(ens, model_catalog(k)));
          worst = std::max(worst, std::abs(res.c_s - concurrence_wootters(ens.rho)));
        }
        if (k == ModelKind::TwoSpinIsotropic) break;
      }
    report("oracle-agreement-" + model_name(k), worst <= 1e-8, "max |C_s - wootters| = " + format_number(worst));
  }
  const std::size_t na = model_catalog(ModelKind::TwoSpinAxial).size();
  report("axial-catalog-size", na == 4, std::to_string(na) + " entries");
  const auto tri = diagonalize(ModelSpec::make(ModelKind::TriangleThree, {1.0, 0.3, -0.2, 0.1}));
  double dev = 0.0;
  const auto tables = paper_density_tables(ModelSpec::make(ModelKind::TriangleThree, {1.0, 0.3, -0.2, 0.1}));
  for (const auto& m : tri)
    for (const auto& row : tables)
      if (std::abs(row.energy - m.energy) < 1e-9 && (row.label == "rho3" || row.label == "rho4"))
        dev = std::max(dev, std::abs(m.concurrence - 2.0 / std::sqrt(3.0)));
  report("triangle-C3-C4", dev <= 1e-9, "max |C - 2/sqrt3| = " + format_number(dev));
  const double cs = compute_cs(ModelSpec::make(ModelKind::LineThree, {-1.0, 0.8, 0.5, 0.0}), 0.01);
  report("line-entangled-ground", cs > 1.0, "C_s(J2=0.8, T=0.01) = " + format_number(cs));
  return all ? 0 : kExitNumeric;
}

void add_sweep_options(CLI::App* sub, Overrides& o, bool axes) {
  sub->add_option("--config", o.config_path, "JSON configuration file");
  sub->add_option("--model", o.model, "iso2 | axial2 | line3 | triangle3");
  sub->add_option("--set", o.sets, "coupling override, e.g. J2=0.5 (repeatable)");
  sub->add_option("--t", o.temps, "temperature(s)");
  sub->add_option("--t-range", o.t_range, "min:max:steps[:log]");
  sub->add_option("--emit", o.emit, "comma list of c_s,wootters,weights,spectrum,catalog");
  sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  sub->add_option("--out", o.out, "output CSV path (default stdout)");
  if (axes) {
    sub->add_option("--x", o.x, "Jk:min:max:steps");
    sub->add_option("--y", o.y, "Jk:min:max:steps");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry-guided concurrence of thermal spin-cluster densities"};
  app.require_subcommand(1);
  Overrides sweep_o, heat_o, spec_o;
  std::string cat_model, cat_out;
  auto* sweep = app.add_subcommand("sweep", "C_s versus temperature");
  add_sweep_options(sweep, sweep_o, false);
  auto* heat = app.add_subcommand("heatmap", "C_s over a two-coupling grid");
  add_sweep_options(heat, heat_o, true);
  auto* spec = app.add_subcommand("spectrum", "energy levels versus one coupling");
  add_sweep_options(spec, spec_o, true);
  auto* cat = app.add_subcommand("catalog", "dump the separable symmetric catalog as JSON");
  cat->add_option("--model", cat_model, "model name")->required();
  cat->add_option("--out", cat_out, "output path (default stdout)");
  auto* self = app.add_subcommand("selftest", "oracle-agreement checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*sweep) return run_mode(SweepMode::Temperature, sweep_o);
    if (*heat) return run_mode(SweepMode::Heatmap, heat_o);
    if (*spec) return run_mode(SweepMode::Spectrum, spec_o);
    if (*cat) return run_catalog(cat_model, cat_out);
    if (*self) return run_selftest();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
