#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "safestab/errors.hpp"
#include "safestab/sim.hpp"
#include "safestab/sweep.hpp"
#include "safestab/systems.hpp"

namespace safestab {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace detail

/// Flat "key = value" text with [section] headers and # comment lines.
/// Keys are addressed as "section.key".
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::istream& in, const std::string& origin = "<stream>") {
    KeyValueConfig cfg;
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string t = detail::trim(line);
      if (t.empty() || t.front() == '#') continue;
      if (t.front() == '[') {
        if (t.back() != ']')
          throw ConfigError(origin + ":" + std::to_string(line_no) + ": unterminated section header");
        section = detail::trim(t.substr(1, t.size() - 2));
        continue;
      }
      const auto eq = t.find('=');
      if (eq == std::string::npos)
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected key = value");
      const std::string key = detail::trim(t.substr(0, eq));
      const std::string value = detail::trim(t.substr(eq + 1));
      if (key.empty())
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
      cfg.values_[section.empty() ? key : section + "." + key] = value;
    }
    return cfg;
  }

  static KeyValueConfig load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config: " + path);
    return parse(f, path);
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::optional<std::string> get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    return get(key).value_or(fallback);
  }

  double get_double(const std::string& key, double fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    try {
      std::size_t pos = 0;
      const double parsed = std::stod(*v, &pos);
      if (pos != v->size()) throw std::invalid_argument("trailing characters");
      return parsed;
    } catch (const std::exception&) {
      throw ConfigError("config key '" + key + "': not a number: '" + *v + "'");
    }
  }

  int get_int(const std::string& key, int fallback) const {
    const double v = get_double(key, fallback);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) throw ConfigError("config key '" + key + "': not an integer");
    return i;
  }

 private:
  std::map<std::string, std::string> values_;
};

inline std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = detail::trim(item);
    if (t.empty()) throw ConfigError("empty entry in vector '" + text + "'");
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(t, &pos));
      if (pos != t.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ConfigError("not a number in vector: '" + t + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty vector value");
  return out;
}

inline State parse_state(const std::string& text) {
  const auto vals = parse_double_list(text);
  State x(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t k = 0; k < vals.size(); ++k) x[static_cast<Eigen::Index>(k)] = vals[k];
  return x;
}

inline Law parse_law(const std::string& name) {
  if (name == "kl") return Law::KL;
  if (name == "km") return Law::KM;
  if (name == "kl_star") return Law::KLStar;
  if (name == "km_star") return Law::KMStar;
  if (name == "kl_sharp") return Law::KLSharp;
  if (name == "km_sharp") return Law::KMSharp;
  if (name == "clf_only_sontag") return Law::ClfOnlySontag;
  if (name == "clf_only_freeman") return Law::ClfOnlyFreeman;
  if (name == "min_norm") return Law::MinNormBaseline;
  throw ConfigError("unknown law: '" + name +
                    "' (kl, km, kl_star, km_star, kl_sharp, km_sharp, "
                    "clf_only_sontag, clf_only_freeman, min_norm)");
}

inline const char* law_name(Law law) {
  switch (law) {
    case Law::KL: return "kl";
    case Law::KM: return "km";
    case Law::KLStar: return "kl_star";
    case Law::KMStar: return "km_star";
    case Law::KLSharp: return "kl_sharp";
    case Law::KMSharp: return "km_sharp";
    case Law::ClfOnlySontag: return "clf_only_sontag";
    case Law::ClfOnlyFreeman: return "clf_only_freeman";
    case Law::MinNormBaseline: return "min_norm";
  }
  return "?";
}

inline FormulaKind parse_formula(const std::string& name) {
  if (name == "sontag") return FormulaKind::Sontag;
  if (name == "freeman") return FormulaKind::Freeman;
  throw ConfigError("unknown formula: '" + name + "' (sontag, freeman)");
}

inline LambdaKind parse_lambda(const std::string& name) {
  if (name == "logistic") return LambdaKind::Logistic;
  if (name == "tanh") return LambdaKind::Tanh;
  if (name == "algebraic") return LambdaKind::Algebraic;
  throw ConfigError("unknown lambda: '" + name + "' (logistic, tanh, algebraic)");
}

/// One scenario: system selection, controller, integration window, outputs,
/// plus sweep/search grids for the corresponding subcommands.
struct RunConfig {
  std::string system = "paper_example";
  ExampleParams params{};
  ControllerSpec controller{};
  State x0;
  SimOptions sim{};
  std::string output_path = "trajectory.csv";
  std::uint64_t seed = 0;
  GridSpec sweep_grid{};
  std::string sweep_output = "sweep.csv";
  double search_x1_min = -3.0, search_x1_max = 3.0, search_x1_step = 0.5;
  double search_x2_min = -3.0, search_x2_max = 3.0, search_x2_step = 0.5;
  double search_dt = 1e-3, search_t_end = 30.0;

  static RunConfig from(const KeyValueConfig& kv) {
    RunConfig rc;
    rc.system = kv.get_string("system.name", rc.system);
    rc.params.k1 = kv.get_double("system.k1", rc.params.k1);
    rc.params.k2 = kv.get_double("system.k2", rc.params.k2);
    rc.params.q = kv.get_double("system.q", rc.params.q);
    rc.params.d1 = kv.get_double("system.d1", rc.params.d1);
    rc.params.d2 = kv.get_double("system.d2", rc.params.d2);

    rc.controller.law = parse_law(kv.get_string("controller.law", law_name(rc.controller.law)));
    rc.controller.blend.formula = parse_formula(kv.get_string("controller.formula", "sontag"));
    rc.controller.blend.lambda_kind = parse_lambda(kv.get_string("controller.lambda", "logistic"));
    rc.controller.blend.eta = kv.get_double("controller.eta", rc.controller.blend.eta);
    rc.controller.c = kv.get_double("controller.c", rc.controller.c);

    if (const auto x0 = kv.get("simulation.x0")) rc.x0 = parse_state(*x0);
    rc.sim.dt = kv.get_double("simulation.dt", rc.sim.dt);
    rc.sim.t_end = kv.get_double("simulation.t_end", rc.sim.t_end);
    rc.sim.stop_tol = kv.get_double("simulation.stop_tol", rc.sim.stop_tol);
    rc.sim.conv_tol = kv.get_double("simulation.conv_tol", rc.sim.conv_tol);
    rc.sim.h_abort = kv.get_double("simulation.h_abort", rc.sim.h_abort);
    rc.sim.abort_on_safety = kv.get_int("simulation.abort_on_safety", 0) != 0;
    rc.output_path = kv.get_string("simulation.output", rc.output_path);
    rc.seed = static_cast<std::uint64_t>(kv.get_double("simulation.seed", 0.0));

    rc.sweep_grid.x1_min = kv.get_double("sweep.x1_min", rc.sweep_grid.x1_min);
    rc.sweep_grid.x1_max = kv.get_double("sweep.x1_max", rc.sweep_grid.x1_max);
    rc.sweep_grid.x1_count = kv.get_int("sweep.x1_count", rc.sweep_grid.x1_count);
    rc.sweep_grid.x2_min = kv.get_double("sweep.x2_min", rc.sweep_grid.x2_min);
    rc.sweep_grid.x2_max = kv.get_double("sweep.x2_max", rc.sweep_grid.x2_max);
    rc.sweep_grid.x2_count = kv.get_int("sweep.x2_count", rc.sweep_grid.x2_count);
    rc.sweep_output = kv.get_string("sweep.output", rc.sweep_output);

    rc.search_x1_min = kv.get_double("search.x1_min", rc.search_x1_min);
    rc.search_x1_max = kv.get_double("search.x1_max", rc.search_x1_max);
    rc.search_x1_step = kv.get_double("search.x1_step", rc.search_x1_step);
    rc.search_x2_min = kv.get_double("search.x2_min", rc.search_x2_min);
    rc.search_x2_max = kv.get_double("search.x2_max", rc.search_x2_max);
    rc.search_x2_step = kv.get_double("search.x2_step", rc.search_x2_step);
    rc.search_dt = kv.get_double("search.dt", rc.search_dt);
    rc.search_t_end = kv.get_double("search.t_end", rc.search_t_end);

    if (!(rc.sim.dt > 0.0) || !(rc.sim.t_end > 0.0))
      throw ConfigError("simulation.dt and simulation.t_end must be positive");
    return rc;
  }

  static RunConfig load(const std::string& path) { return from(KeyValueConfig::load(path)); }

  SystemBundle make_bundle() const { return make_system(system, params); }
};

}  // namespace safestab
