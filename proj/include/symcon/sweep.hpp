#pragma once
// Parameter sweeps (temperature curves, two-coupling heatmaps, spectra) and
// their CSV serialization.

#include "symcon/decomposer.hpp"
#include "symcon/wootters.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

namespace symcon {

// Invalid configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepMode { Temperature, Heatmap, Spectrum };

struct GridAxis {
  int coupling = 1;  // 0-based index into J1..J4
  double min = -1.5, max = 1.5;
  int steps = 81;

  double at(int i) const { return min + (max - min) * i / (steps - 1); }
  std::string name() const { return "J" + std::to_string(coupling + 1); }
};

struct EmitFlags {
  bool c_s = true;
  bool wootters = false;
  bool weights = false;
  bool spectrum = false;
  bool catalog = false;
};

struct SweepConfig {
  SweepMode mode = SweepMode::Temperature;
  ModelKind model = ModelKind::TwoSpinAxial;
  Couplings couplings{};
  std::vector<double> temperatures;
  bool allow_zero_temperature = false;
  std::optional<GridAxis> x, y;
  EmitFlags emit;
  int threads = 0;  // 0: hardware concurrency
  std::string output;  // empty: stdout

  nlohmann::json to_json() const;
  static SweepConfig from_json(const nlohmann::json& j, SweepMode mode);
};

inline std::string mode_name(SweepMode m) {
  switch (m) {
    case SweepMode::Temperature: return "sweep";
    case SweepMode::Heatmap: return "heatmap";
    case SweepMode::Spectrum: return "spectrum";
  }
  return "?";
}

namespace detail {

inline int parse_coupling_name(const std::string& s, const std::string& field) {
  if (s.size() == 2 && s[0] == 'J' && s[1] >= '1' && s[1] <= '4') return s[1] - '1';
  throw ConfigError(field + ": unknown coupling '" + s + "' (expected J1..J4)");
}

inline double get_number(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(field + ": not finite");
  return v;
}

inline int get_int(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ConfigError(field + ": expected an integer");
  return j.get<int>();
}

inline void reject_unknown(const nlohmann::json& j, const std::string& where, std::initializer_list<const char*> known) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw ConfigError(where + it.key() + ": unknown field");
  }
}

inline GridAxis parse_axis(const nlohmann::json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field + ": expected an object {coupling, min, max, steps}");
  reject_unknown(j, field + "/", {"coupling", "min", "max", "steps"});
  GridAxis a;
  if (!j.contains("coupling") || !j["coupling"].is_string()) throw ConfigError(field + "/coupling: required string");
  a.coupling = parse_coupling_name(j["coupling"].get<std::string>(), field + "/coupling");
  if (j.contains("min")) a.min = get_number(j["min"], field + "/min");
  if (j.contains("max")) a.max = get_number(j["max"], field + "/max");
  if (j.contains("steps")) a.steps = get_int(j["steps"], field + "/steps");
  if (a.steps < 2) throw ConfigError(field + "/steps: must be >= 2");
  if (!(a.max > a.min)) throw ConfigError(field + ": max must exceed min");
  return a;
}

inline std::vector<double> parse_temperature_range(const nlohmann::json& j) {
  const std::string f = "/temperature_range";
  if (!j.is_object()) throw ConfigError(f + ": expected an object {min, max, steps, scale}");
  reject_unknown(j, f + "/", {"min", "max", "steps", "scale"});
  for (const char* k : {"min", "max", "steps"})
    if (!j.contains(k)) throw ConfigError(f + "/" + k + ": required");
  const double lo = get_number(j["min"], f + "/min"), hi = get_number(j["max"], f + "/max");
  const int n = get_int(j["steps"], f + "/steps");
  const std::string scale = j.value("scale", "linear");
  if (n < 2) throw ConfigError(f + "/steps: must be >= 2");
  if (!(hi > lo)) throw ConfigError(f + ": max must exceed min");
  std::vector<double> t(static_cast<std::size_t>(n));
  if (scale == "linear") {
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  } else if (scale == "log") {
    if (!(lo > 0)) throw ConfigError(f + "/min: log scale needs min > 0");
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  } else {
    throw ConfigError(f + "/scale: expected \"linear\" or \"log\"");
  }
  t.back() = hi;
  return t;
}

}  // namespace detail

inline SweepConfig SweepConfig::from_json(const nlohmann::json& j, SweepMode mode) {
  using namespace detail;
  if (!j.is_object()) throw ConfigError("/: configuration must be a JSON object");
  reject_unknown(j, "/", {"mode", "model", "couplings", "temperatures", "temperature_range", "allow_zero_temperature",
                          "x_axis", "y_axis", "emit", "threads", "output"});
  SweepConfig c;
  c.mode = mode;
  if (j.contains("mode")) {
    if (!j["mode"].is_string() || j["mode"].get<std::string>() != mode_name(mode))
      throw ConfigError("/mode: config is for a different command (expected \"" + mode_name(mode) + "\")");
  }

  if (!j.contains("model") || !j["model"].is_string()) throw ConfigError("/model: required string (iso2, axial2, line3, triangle3)");
  const auto mk = parse_model(j["model"].get<std::string>());
  if (!mk) throw ConfigError("/model: unknown model '" + j["model"].get<std::string>() + "'");
  c.model = *mk;
  const int nj = model_coupling_count(c.model);

  if (j.contains("couplings")) {
    const auto& cj = j["couplings"];
    if (!cj.is_object()) throw ConfigError("/couplings: expected an object like {\"J1\": -1.0}");
    for (auto it = cj.begin(); it != cj.end(); ++it) {
      const int k = parse_coupling_name(it.key(), "/couplings/" + it.key());
      const double v = get_number(it.value(), "/couplings/" + it.key());
      if (k >= nj && v != 0.0)
        throw ConfigError("/couplings/" + it.key() + ": model " + model_name(c.model) + " uses only J1..J" + std::to_string(nj));
      c.couplings[static_cast<std::size_t>(k)] = v;
    }
  }

  c.allow_zero_temperature = j.value("allow_zero_temperature", false);
  if (j.contains("temperatures") && j.contains("temperature_range"))
    throw ConfigError("/temperatures: give either temperatures or temperature_range, not both");
  if (j.contains("temperatures")) {
    const auto& tj = j["temperatures"];
    if (tj.is_number()) c.temperatures = {get_number(tj, "/temperatures")};
    else if (tj.is_array()) {
      for (std::size_t i = 0; i < tj.size(); ++i) c.temperatures.push_back(get_number(tj[i], "/temperatures/" + std::to_string(i)));
    } else {
      throw ConfigError("/temperatures: expected a number or an array of numbers");
    }
  } else if (j.contains("temperature_range")) {
    c.temperatures = parse_temperature_range(j["temperature_range"]);
  }
  for (std::size_t i = 0; i < c.temperatures.size(); ++i) {
    const double t = c.temperatures[i];
    if (t < 0 || (t == 0 && !c.allow_zero_temperature))
      throw ConfigError("/temperatures/" + std::to_string(i) + ": temperature must be > 0 (set allow_zero_temperature for T = 0)");
  }
  std::sort(c.temperatures.begin(), c.temperatures.end());
  c.temperatures.erase(std::unique(c.temperatures.begin(), c.temperatures.end()), c.temperatures.end());

  if (j.contains("x_axis")) c.x = parse_axis(j["x_axis"], "/x_axis");
  if (j.contains("y_axis")) c.y = parse_axis(j["y_axis"], "/y_axis");
  for (const auto* ax : {&c.x, &c.y})
    if (*ax && (*ax)->coupling >= nj)
      throw ConfigError(std::string(ax == &c.x ? "/x_axis" : "/y_axis") + "/coupling: model " + model_name(c.model) +
                        " uses only J1..J" + std::to_string(nj));

  const bool two_spin = model_sites(c.model) == 2;
  c.emit.wootters = two_spin;
  c.emit.weights = mode == SweepMode::Temperature;
  if (j.contains("emit")) {
    const auto& ej = j["emit"];
    if (!ej.is_object()) throw ConfigError("/emit: expected an object of booleans");
    reject_unknown(ej, "/emit/", {"c_s", "wootters", "weights", "spectrum", "catalog"});
    for (auto it = ej.begin(); it != ej.end(); ++it)
      if (!it.value().is_boolean()) throw ConfigError("/emit/" + it.key() + ": expected true or false");
    c.emit.c_s = ej.value("c_s", c.emit.c_s);
    c.emit.wootters = ej.value("wootters", c.emit.wootters);
    c.emit.weights = ej.value("weights", c.emit.weights);
    c.emit.spectrum = ej.value("spectrum", c.emit.spectrum);
    c.emit.catalog = ej.value("catalog", c.emit.catalog);
  }
  if (c.emit.wootters && !two_spin) throw ConfigError("/emit/wootters: the Wootters oracle applies to two-spin models only");

  if (j.contains("threads")) {
    c.threads = get_int(j["threads"], "/threads");
    if (c.threads < 0) throw ConfigError("/threads: must be >= 0");
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) throw ConfigError("/output: expected a path string");
    c.output = j["output"].get<std::string>();
  }

  switch (mode) {
    case SweepMode::Temperature:
      if (c.temperatures.empty()) throw ConfigError("/temperatures: a temperature sweep needs temperatures or temperature_range");
      if (c.x || c.y) throw ConfigError("/x_axis: coupling axes are not used by a temperature sweep");
      break;
    case SweepMode::Heatmap:
      if (!c.x || !c.y) throw ConfigError("/x_axis: a heatmap needs both x_axis and y_axis");
      if (c.x->coupling == c.y->coupling) throw ConfigError("/y_axis/coupling: must differ from /x_axis/coupling");
      if (c.temperatures.empty()) throw ConfigError("/temperatures: a heatmap needs at least one temperature");
      if (c.emit.weights) throw ConfigError("/emit/weights: per-multiplet weights are only emitted by temperature sweeps");
      break;
    case SweepMode::Spectrum:
      if (!c.x) throw ConfigError("/x_axis: a spectrum needs x_axis");
      if (c.y) throw ConfigError("/y_axis: a spectrum sweeps a single coupling");
      c.emit = EmitFlags{false, false, false, true, false};  // spectra carry energies only
      break;
  }
  return c;
}

inline nlohmann::json SweepConfig::to_json() const {
  nlohmann::json j;
  j["mode"] = mode_name(mode);
  j["model"] = model_name(model);
  nlohmann::json cj = nlohmann::json::object();
  for (int k = 0; k < model_coupling_count(model); ++k) cj["J" + std::to_string(k + 1)] = couplings[static_cast<std::size_t>(k)];
  j["couplings"] = cj;
  if (!temperatures.empty()) j["temperatures"] = temperatures;
  j["allow_zero_temperature"] = allow_zero_temperature;
  const auto axis = [](const GridAxis& a) {
    return nlohmann::json{{"coupling", a.name()}, {"min", a.min}, {"max", a.max}, {"steps", a.steps}};
  };
  if (x) j["x_axis"] = axis(*x);
  if (y) j["y_axis"] = axis(*y);
  j["emit"] = {{"c_s", emit.c_s}, {"wootters", emit.wootters}, {"weights", emit.weights},
               {"spectrum", emit.spectrum}, {"catalog", emit.catalog}};
  j["threads"] = threads;
  if (!output.empty()) j["output"] = output;
  return j;
}

// --- tables and CSV ---------------------------------------------------------------

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Shortest representation that round-trips.
inline std::string format_number(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, r.ptr};
}

// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const nlohmann::json& config, const Table& t) {
  os << "# " << config.dump() << "\r\n";
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_field(t.header[i]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << "\r\n";
  }
}

// --- evaluation -------------------------------------------------------------------

// Evaluate fn(0..count-1) on worker threads; results come back in index order.
// The first exception (by index) is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, int threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

namespace detail {

inline std::vector<double> point_columns(const SweepConfig& cfg, const ThermalEnsemble& ens, bool with_weights) {
  const auto& cat = model_catalog(ens.kind);
  const DecompositionProblem pb = make_problem(ens, cat);
  const DecompositionResult res = solve_cs(pb);
  if (res.status != SolveStatus::Optimal) throw NumericalError("decomposition infeasible at T = " + format_number(ens.temperature));
  if (!verify(res, pb).ok) throw NumericalError("decomposition failed verification at T = " + format_number(ens.temperature));
  std::vector<double> row;
  if (cfg.emit.c_s) {
    row.push_back(res.c_s);
    row.push_back(pb.upper_bound());
  }
  if (cfg.emit.wootters) row.push_back(concurrence_wootters(ens.rho));
  if (with_weights && cfg.emit.weights) row.insert(row.end(), ens.weights.begin(), ens.weights.end());
  if (with_weights && cfg.emit.spectrum)
    for (const auto& m : ens.multiplets) row.push_back(m.energy);
  if (cfg.emit.catalog) row.insert(row.end(), res.q.begin(), res.q.end());
  return row;
}

inline std::vector<std::string> point_header(const SweepConfig& cfg, std::size_t n_multiplets, bool with_weights) {
  std::vector<std::string> h;
  if (cfg.emit.c_s) {
    h.push_back("c_s");
    h.push_back("c_upper");
  }
  if (cfg.emit.wootters) h.push_back("wootters");
  if (with_weights && cfg.emit.weights)
    for (std::size_t i = 0; i < n_multiplets; ++i) h.push_back("p" + std::to_string(i + 1));
  if (with_weights && cfg.emit.spectrum)
    for (std::size_t i = 0; i < n_multiplets; ++i) h.push_back("E" + std::to_string(i + 1));
  if (cfg.emit.catalog)
    for (std::size_t j = 0; j < model_catalog(cfg.model).size(); ++j) h.push_back("q_eta" + std::to_string(j + 1));
  return h;
}

inline ModelSpec spec_with(const SweepConfig& cfg, std::initializer_list<std::pair<std::optional<GridAxis>, double>> set) {
  Couplings j = cfg.couplings;
  for (const auto& [ax, v] : set)
    if (ax) j[static_cast<std::size_t>(ax->coupling)] = v;
  try {
    return ModelSpec::make(cfg.model, j);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("/couplings: ") + e.what());
  }
}

}  // namespace detail

// Rows: T, c_s, c_upper, [wootters], [p_i], [E_i], [q_j]. Multiplets are those
// of the fixed couplings, in ascending energy.
inline Table run_temperature_sweep(const SweepConfig& cfg) {
  const ModelSpec spec = detail::spec_with(cfg, {});
  const std::vector<Multiplet> ms = diagonalize(spec);
  Table t;
  t.header = {"T"};
  for (auto& h : detail::point_header(cfg, ms.size(), true)) t.header.push_back(h);
  t.rows = parallel_map(cfg.temperatures.size(), cfg.threads, [&](std::size_t i) {
    const double temp = cfg.temperatures[i];
    std::vector<double> row{temp};
    const auto cols = detail::point_columns(cfg, thermal_ensemble(spec.kind, ms, temp), true);
    row.insert(row.end(), cols.begin(), cols.end());
    return row;
  });
  return t;
}

// Rows: T, x, y, c_s, ... in the order T, then y, then x (x fastest).
inline Table run_heatmap(const SweepConfig& cfg) {
  const GridAxis& ax = *cfg.x;
  const GridAxis& ay = *cfg.y;
  Table t;
  t.header = {"T", ax.name(), ay.name()};
  for (auto& h : detail::point_header(cfg, 0, false)) t.header.push_back(h);
  const std::size_t nx = static_cast<std::size_t>(ax.steps), ny = static_cast<std::size_t>(ay.steps);
  const std::size_t per_t = nx * ny;
  t.rows = parallel_map(per_t * cfg.temperatures.size(), cfg.threads, [&](std::size_t idx) {
    const double temp = cfg.temperatures[idx / per_t];
    const int iy = static_cast<int>(idx % per_t / nx), ix = static_cast<int>(idx % nx);
    const double xv = ax.at(ix), yv = ay.at(iy);
    const ModelSpec spec = detail::spec_with(cfg, {{cfg.x, xv}, {cfg.y, yv}});
    std::vector<double> row{temp, xv, yv};
    const auto cols = detail::point_columns(cfg, thermal_ensemble(spec, temp), false);
    row.insert(row.end(), cols.begin(), cols.end());
    return row;
  });
  return t;
}

// Rows: swept coupling, then the labeled levels (E1..E4, or E_s/E_t...), then
// the full sorted eigenvalue list e1..e_{2^N}.
inline Table run_spectrum(const SweepConfig& cfg) {
  const GridAxis& ax = *cfg.x;
  Table t;
  t.header = {ax.name()};
  for (const auto& lv : labeled_levels(detail::spec_with(cfg, {{cfg.x, ax.at(0)}}))) t.header.push_back(lv.label);
  const int dim = 1 << model_sites(cfg.model);
  for (int k = 0; k < dim; ++k) t.header.push_back("e" + std::to_string(k + 1));
  t.rows = parallel_map(static_cast<std::size_t>(ax.steps), cfg.threads, [&](std::size_t i) {
    const double xv = ax.at(static_cast<int>(i));
    const ModelSpec spec = detail::spec_with(cfg, {{cfg.x, xv}});
    std::vector<double> row{xv};
    for (const auto& lv : labeled_levels(spec)) row.push_back(lv.energy);
    const EigenSystem es = hermitian_eigensystem(build_hamiltonian(spec));
    row.insert(row.end(), es.values.data(), es.values.data() + es.values.size());
    return row;
  });
  return t;
}

inline Table run_sweep(const SweepConfig& cfg) {
  switch (cfg.mode) {
    case SweepMode::Temperature: return run_temperature_sweep(cfg);
    case SweepMode::Heatmap: return run_heatmap(cfg);
    case SweepMode::Spectrum: return run_spectrum(cfg);
  }
  return {};
}

}  // namespace symcon
