// Command-line front end: single-state evaluation, closed-loop simulation,
// compatibility sweeps over the state plane, and the flagship initial
// condition search. Exit codes: 0 ok, 2 usage/config, 3 evaluation or
// integration failure, 4 safety violation, 5 search failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <safestab/safestab.hpp>

namespace {

using namespace safestab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitEvaluation = 3;
constexpr int kExitSafety = 4;
constexpr int kExitSearchFailed = 5;

void print_kv(const std::string& key, const std::string& value) {
  std::cout << key << "=" << value << "\n";
}

void print_kv(const std::string& key, double value) { print_kv(key, format_double(value)); }

std::string join_transitions(const std::vector<std::pair<double, ModeFlag>>& runs) {
  std::string out;
  for (const auto& [t, m] : runs) {
    if (!out.empty()) out += ";";
    out += format_double(t) + ":" + std::to_string(static_cast<int>(m));
  }
  return out;
}

/// Per-law control value; undefined laws at this state print as nan.
double control_or_nan(Law law, const ControllerSpec& base, const LieData& d, const State& x) {
  ControllerSpec ctrl = base;
  ctrl.law = law;
  try {
    return eval_control(ctrl, d, x);
  } catch (const DomainError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

struct ControllerFlags {
  std::string law;
  std::string formula = "sontag";
  std::string lambda = "logistic";
  double eta = 0.5;
  double c = 1e5;

  void add_to(CLI::App& cmd, bool law_required = false) {
    auto* opt = cmd.add_option("--law", law,
                               "kl|km|kl_star|km_star|kl_sharp|km_sharp|"
                               "clf_only_sontag|clf_only_freeman|min_norm");
    if (law_required) opt->required();
    cmd.add_option("--formula", formula, "sontag|freeman");
    cmd.add_option("--lambda", lambda, "logistic|tanh|algebraic");
    cmd.add_option("--eta", eta, "convex weight in (0,1)");
    cmd.add_option("--c", c, "origin-weight sharpness (sharp laws)");
  }

  void apply(ControllerSpec& ctrl) const {
    if (!law.empty()) ctrl.law = parse_law(law);
    ctrl.blend.formula = parse_formula(formula);
    ctrl.blend.lambda_kind = parse_lambda(lambda);
    if (!(eta > 0.0 && eta < 1.0)) throw ConfigError("--eta must lie in (0,1)");
    if (!(c > 0.0)) throw ConfigError("--c must be positive");
    ctrl.blend.eta = eta;
    ctrl.c = c;
  }
};

int cmd_eval(const std::string& system, const std::string& x_text, const ControllerFlags& flags,
             const ExampleParams& params) {
  ControllerSpec ctrl;
  flags.apply(ctrl);
  const SystemBundle bundle = make_system(system, params);
  const State x = parse_state(x_text);
  const LieData d = lie_data(bundle, x);
  const FeasibleSet fs = feasible_set(d);

  print_kv("system", system);
  print_kv("x", x_text);
  print_kv("a0", d.a0);
  print_kv("b0", d.b0);
  print_kv("a1", d.a1);
  print_kv("b1", d.b1);
  print_kv("x_is_origin", std::to_string(d.x_is_origin ? 1 : 0));
  print_kv("V", bundle.clf.V(x));
  print_kv("h", bundle.cbf.h(x));
  print_kv("compatible", std::to_string(compatible(d) ? 1 : 0));
  print_kv("mode", std::to_string(static_cast<int>(mode(d))));
  print_kv("feasible_kind", feasible_kind_name(fs.kind));
  print_kv("feasible_lo", fs.lower);
  print_kv("feasible_hi", fs.upper);
  for (Law law : {Law::KL, Law::KM, Law::KLStar, Law::KMStar, Law::KLSharp, Law::KMSharp,
                  Law::ClfOnlySontag, Law::ClfOnlyFreeman, Law::MinNormBaseline}) {
    print_kv(std::string("u_") + law_name(law), control_or_nan(law, ctrl, d, x));
  }
  if (!flags.law.empty()) {
    print_kv("law", flags.law);
    print_kv("u", control_or_nan(ctrl.law, ctrl, d, x));
  }
  return kExitOk;
}

int cmd_simulate(RunConfig rc) {
  if (rc.x0.size() == 0) throw ConfigError("simulation.x0 missing in config");
  const SystemBundle bundle = rc.make_bundle();
  const auto [traj, rep] = simulate(bundle, rc.controller, rc.x0, rc.sim);
  write_file(rc.output_path, trajectory_csv(traj));

  print_kv("output", rc.output_path);
  print_kv("law", law_name(rc.controller.law));
  print_kv("rows", std::to_string(traj.size()));
  print_kv("min_h", rep.min_h);
  print_kv("safety_violated", std::to_string(rep.safety_violated ? 1 : 0));
  print_kv("converged", std::to_string(rep.converged ? 1 : 0));
  print_kv("final_state_norm", rep.final_state_norm);
  print_kv("mode_transitions", join_transitions(rep.mode_transitions));
  return rep.safety_violated ? kExitSafety : kExitOk;
}

int cmd_sweep(const RunConfig& rc, const std::string& out_override) {
  const SystemBundle bundle = rc.make_bundle();
  const std::string path = out_override.empty() ? rc.sweep_output : out_override;
  write_file(path, sweep_csv(bundle, rc.sweep_grid));
  print_kv("output", path);
  print_kv("rows", std::to_string(static_cast<long>(rc.sweep_grid.x1_count) *
                                  rc.sweep_grid.x2_count));
  return kExitOk;
}

int cmd_find_x0(const RunConfig& rc) {
  const SystemBundle bundle = rc.make_bundle();
  X0SearchSpec spec;
  spec.x1_min = rc.search_x1_min;
  spec.x1_max = rc.search_x1_max;
  spec.x1_step = rc.search_x1_step;
  spec.x2_min = rc.search_x2_min;
  spec.x2_max = rc.search_x2_max;
  spec.x2_step = rc.search_x2_step;
  spec.blend = rc.controller.blend;
  spec.c = rc.controller.c;
  spec.sim = rc.sim;
  spec.sim.dt = rc.search_dt;
  spec.sim.t_end = rc.search_t_end;

  const X0SearchResult res = find_x0(bundle, spec);
  if (!res.found) {
    std::cerr << "find-x0: no grid point satisfies the flagship requirements\n";
    return kExitSearchFailed;
  }
  print_kv("x0", format_double(res.x0[0]) + "," + format_double(res.x0[1]));
  print_kv("h0", res.h0);
  print_kv("baseline_min_h", res.baseline_min_h);
  print_kv("kl_sharp_min_h", res.kl_min_h);
  print_kv("kl_sharp_final_norm", res.kl_final_norm);
  std::string pattern;
  for (int m : res.mode_pattern) {
    if (!pattern.empty()) pattern += ",";
    pattern += std::to_string(m);
  }
  print_kv("mode_pattern", pattern);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"safestab: optimization-free safe stabilizing feedback laws"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Lie data, feasible set and every law at one state");
  std::string eval_system = "paper_example";
  std::string eval_x;
  ExampleParams eval_params;
  ControllerFlags eval_flags;
  eval->add_option("--system", eval_system, "builtin system name");
  eval->add_option("--x", eval_x, "state, comma separated")->required();
  eval->add_option("--k1", eval_params.k1);
  eval->add_option("--k2", eval_params.k2);
  eval->add_option("--q", eval_params.q);
  eval->add_option("--d1", eval_params.d1);
  eval->add_option("--d2", eval_params.d2);
  eval_flags.add_to(*eval);

  // simulate
  auto* sim = app.add_subcommand("simulate", "closed-loop run from a config file");
  std::string sim_config;
  std::string sim_law, sim_out, sim_x0;
  double sim_dt = 0.0, sim_t_end = 0.0;
  sim->add_option("config", sim_config, "config file path")->required();
  sim->add_option("--law", sim_law, "override controller.law");
  sim->add_option("--x0", sim_x0, "override simulation.x0");
  sim->add_option("--dt", sim_dt, "override simulation.dt");
  sim->add_option("--t-end", sim_t_end, "override simulation.t_end");
  sim->add_option("--out", sim_out, "override simulation.output");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "compatibility map over the state plane");
  std::string sweep_config, sweep_out;
  sweep->add_option("config", sweep_config, "config file path")->required();
  sweep->add_option("--out", sweep_out, "override sweep.output");

  // find-x0
  auto* find = app.add_subcommand("find-x0", "scan for the flagship initial condition");
  std::string find_config;
  find->add_option("config", find_config, "config file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_system, eval_x, eval_flags, eval_params);
    if (sim->parsed()) {
      RunConfig rc = RunConfig::load(sim_config);
      if (!sim_law.empty()) rc.controller.law = parse_law(sim_law);
      if (!sim_x0.empty()) rc.x0 = parse_state(sim_x0);
      if (sim_dt > 0.0) rc.sim.dt = sim_dt;
      if (sim_t_end > 0.0) rc.sim.t_end = sim_t_end;
      if (!sim_out.empty()) rc.output_path = sim_out;
      return cmd_simulate(std::move(rc));
    }
    if (sweep->parsed()) return cmd_sweep(RunConfig::load(sweep_config), sweep_out);
    if (find->parsed()) return cmd_find_x0(RunConfig::load(find_config));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EvaluationError& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return kExitEvaluation;
  } catch (const IntegrationError& e) {
    std::cerr << "integration error at step " << e.step() << ": " << e.what() << "\n";
    return kExitEvaluation;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
