// Command-line front end: steady-state analysis, parameter sweeps, figure
// presets, trajectory sampling and time integration, with JSON/CSV output.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qdotinfo/gillespie.hpp"
#include "qdotinfo/info.hpp"
#include "qdotinfo/io.hpp"
#include "qdotinfo/solver.hpp"
#include "qdotinfo/sweep.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// JSON has no infinity literal; emit a string tag instead of null.
ordered_json json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "infinity" : "-infinity";
  if (std::isnan(v)) return "nan";
  return v;
}

ordered_json json_array(const std::array<double, 4>& values) {
  ordered_json out = ordered_json::array();
  for (double v : values) out.push_back(json_number(v));
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write output file: " + path);
}

qdotinfo::DisconnectMode parse_disconnect(const std::string& text) {
  if (text == "rebind") return qdotinfo::DisconnectMode::kRebind;
  if (text == "keep") return qdotinfo::DisconnectMode::kKeepResolved;
  throw CLI::ValidationError("--disconnect", "must be 'rebind' or 'keep'");
}

std::vector<double> make_grid(double from, double to, double step) {
  std::vector<double> grid;
  const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9));
  grid.reserve(static_cast<std::size_t>(count) + 1);
  for (long i = 0; i <= count; ++i) grid.push_back(from + i * step);
  return grid;
}

int run_steady(const std::string& params_path) {
  const auto params = qdotinfo::load_params_file(params_path);
  const auto result = qdotinfo::phi_mi(params);
  ordered_json out;
  out["p"] = json_array(result.p.p);
  out["q"] = json_array(result.q.p);
  out["phi"] = json_number(result.phi);
  out["per_state_terms"] = json_array(result.per_state_terms);
  out["entropy_p"] = json_number(qdotinfo::shannon_entropy(result.p));
  out["standard_mi"] = json_number(qdotinfo::standard_mutual_information(result.p));
  std::cout << out.dump(2) << "\n";
  return kExitSuccess;
}

bool is_param_name(const std::string& name) {
  for (const auto& known : qdotinfo::param_names()) {
    if (name == known) return true;
  }
  return false;
}

int run_sweep_cmd(const std::string& params_path, const std::string& var,
                  double from, double to, double step,
                  const std::vector<std::string>& bind_texts,
                  const std::string& disconnect, const std::string& out_path) {
  qdotinfo::SweepSpec spec;
  spec.swept_parameter = var;
  spec.grid = make_grid(from, to, step);
  // Spelling problems in --var/--bind are usage errors, unlike bad
  // parameter values later on.
  if (!is_param_name(var)) {
    std::cerr << "sweep: unknown parameter name for --var: " << var << "\n";
    return kExitUsage;
  }
  for (const auto& text : bind_texts) {
    try {
      spec.bindings.push_back(qdotinfo::parse_binding(text));
    } catch (const std::invalid_argument& e) {
      std::cerr << "sweep: " << e.what() << "\n";
      return kExitUsage;
    }
    if (!is_param_name(spec.bindings.back().target)) {
      std::cerr << "sweep: unknown binding target: " << spec.bindings.back().target << "\n";
      return kExitUsage;
    }
  }
  spec.disconnect = parse_disconnect(disconnect);
  spec.base = qdotinfo::load_params_file(params_path);

  const auto records = qdotinfo::run_sweep(spec);
  std::ostringstream csv;
  qdotinfo::emit_csv(records, csv);
  write_output(out_path, csv.str());
  return kExitSuccess;
}

int run_figure(const std::string& name, const std::string& out_dir,
               const std::string& disconnect) {
  auto preset = qdotinfo::figure_preset(name);
  std::filesystem::create_directories(out_dir);
  for (auto& member : preset.members) {
    member.spec.disconnect = parse_disconnect(disconnect);
    const auto records = qdotinfo::run_sweep(member.spec);
    const auto path =
        std::filesystem::path(out_dir) / (preset.name + "_" + member.label + ".csv");
    std::ofstream out(path);
    qdotinfo::emit_csv(records, out);
    if (!out) throw std::runtime_error("cannot write " + path.string());
  }
  return kExitSuccess;
}

int run_sample(const std::string& params_path, std::uint64_t seed,
               std::uint64_t events, std::uint64_t burn_in,
               const std::string& out_path) {
  const auto params = qdotinfo::load_params_file(params_path);
  const auto stats = qdotinfo::sample_steady(params, seed, events, burn_in);
  ordered_json out;
  out["occupation"] = json_array(stats.occupation);
  out["total_time"] = json_number(stats.total_time);
  out["n_events"] = stats.n_events;
  out["seed"] = stats.seed;
  out["burn_in_events"] = burn_in;
  write_output(out_path, out.dump(2) + "\n");
  return kExitSuccess;
}

int run_evolve(const std::string& params_path, double t_end,
               std::optional<double> dt, const std::string& out_path) {
  const auto params = qdotinfo::load_params_file(params_path);
  const auto gen = qdotinfo::build_generator(params);
  const auto p = qdotinfo::evolve(gen, qdotinfo::uniform_distribution(), t_end, dt);
  ordered_json out;
  out["p"] = json_array(p.p);
  out["t_end"] = json_number(t_end);
  out["dt"] = dt ? ordered_json(json_number(*dt)) : ordered_json("auto");
  write_output(out_path, out.dump(2) + "\n");
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled double-dot master-equation toolkit"};
  app.require_subcommand(1);

  std::string params_path, var, out_path, out_dir, figure_name;
  std::string disconnect = "rebind";
  std::vector<std::string> bind_texts;
  double from = 0.0, to = 0.0, step = 0.0, t_end = 0.0;
  double dt_value = 0.0;
  std::uint64_t seed = 0, events = 0, burn_in = qdotinfo::kDefaultBurnInEvents;

  auto* steady = app.add_subcommand("steady", "Steady state, reference state and divergence");
  steady->add_option("--params", params_path, "parameter JSON file")->required();

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter, write CSV");
  sweep->add_option("--params", params_path, "parameter JSON file")->required();
  sweep->add_option("--var", var, "swept parameter name")->required();
  sweep->add_option("--from", from, "first grid value")->required();
  sweep->add_option("--to", to, "last grid value")->required();
  sweep->add_option("--step", step, "grid step (> 0)")->required();
  sweep->add_option("--bind", bind_texts,
                    "coupling, e.g. mu_d=eps_x+u/2, mu_d=eps_x-u/2 or <param>=<value>");
  sweep->add_option("--disconnect", disconnect, "u=0 reference mode: rebind|keep");
  sweep->add_option("--out", out_path, "output CSV file")->required();

  auto* figure = app.add_subcommand("figure", "Write the CSVs of a built-in sweep family");
  figure->add_option("name", figure_name, "fig3a|fig3b|fig4|fig5|fig6")->required();
  figure->add_option("--out-dir", out_dir, "output directory")->required();
  figure->add_option("--disconnect", disconnect, "u=0 reference mode: rebind|keep");

  auto* sample = app.add_subcommand("sample", "Stochastic trajectory estimate of the steady state");
  sample->add_option("--params", params_path, "parameter JSON file")->required();
  sample->add_option("--seed", seed, "RNG seed")->required();
  sample->add_option("--events", events, "number of jumps")->required();
  sample->add_option("--burn-in", burn_in, "jumps discarded before tallying");
  sample->add_option("--out", out_path, "output JSON file")->required();

  auto* evolve = app.add_subcommand("evolve", "Integrate the master equation from uniform");
  evolve->add_option("--params", params_path, "parameter JSON file")->required();
  evolve->add_option("--t-end", t_end, "integration time (> 0)")->required();
  auto* dt_opt = evolve->add_option("--dt", dt_value, "RK4 step (default 0.1/max exit rate)");
  evolve->add_option("--out", out_path, "output JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (steady->parsed()) return run_steady(params_path);
    if (sweep->parsed()) {
      if (step <= 0.0 || to < from) {
        std::cerr << "sweep: need --step > 0 and --to >= --from\n";
        return kExitUsage;
      }
      return run_sweep_cmd(params_path, var, from, to, step, bind_texts,
                           disconnect, out_path);
    }
    if (figure->parsed()) {
      if (figure_name != "fig3a" && figure_name != "fig3b" && figure_name != "fig4" &&
          figure_name != "fig5" && figure_name != "fig6") {
        std::cerr << "figure: unknown preset name: " << figure_name << "\n";
        return kExitUsage;
      }
      return run_figure(figure_name, out_dir, disconnect);
    }
    if (sample->parsed()) return run_sample(params_path, seed, events, burn_in, out_path);
    if (evolve->parsed()) {
      return run_evolve(params_path, t_end,
                        *dt_opt ? std::optional<double>(dt_value) : std::nullopt,
                        out_path);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
