// Acceptance suite: end-to-end checks of the model, solver, information
// measures, sweep presets and the stochastic sampler against their pinned
// targets. Prints one PASS/FAIL line per criterion and exits with the number
// of failures.

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qdotinfo/fermi.hpp"
#include "qdotinfo/gillespie.hpp"
#include "qdotinfo/info.hpp"
#include "qdotinfo/solver.hpp"
#include "qdotinfo/sweep.hpp"
#include "support/eigen_oracle.hpp"
#include "support/random_params.hpp"

using namespace qdotinfo;
using qdotinfo::testing::eigen_steady_state;
using qdotinfo::testing::random_params;
using qdotinfo::testing::spectral_gap;

namespace {

constexpr double kLn2Target = 0.69315;
constexpr double kLn4Target = 1.38629;

int failures = 0;

void report(int number, bool ok, const std::string& label,
            const std::string& detail) {
  std::printf("%s  %2d. %s (%s)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double phi_at(const std::vector<SweepRecord>& records, double u) {
  for (const auto& r : records) {
    if (std::abs(r.swept_value - u) < 1e-9) return r.phi;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

const SweepRecord& record_at(const std::vector<SweepRecord>& records, double u) {
  for (const auto& r : records) {
    if (std::abs(r.swept_value - u) < 1e-9) return r;
  }
  throw std::runtime_error("grid point missing");
}

// --- criteria ---------------------------------------------------------

void criterion_1_disconnection_identity() {
  std::mt19937_64 rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    SystemParams params = random_params(rng);
    params.u = 0.0;
    worst = std::max(worst, std::abs(phi_mi(params).phi));
  }
  report(1, worst <= 1e-12, "disconnection identity: phi = 0 at u = 0",
         "max |phi| = " + fmt(worst) + " over 50 randomized sets");
}

void criterion_2_ln4_asymptote() {
  const auto spec = figure_preset("fig3b").members[0].spec;  // T_D = 0.1
  const auto records = run_sweep(spec);
  bool monotone = true;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    if (records[i + 1].phi < records[i].phi) monotone = false;
  }
  const double end = phi_at(records, 20.0);
  const bool ok = monotone && std::abs(end - kLn4Target) <= 0.02;
  report(2, ok, "ln 4 asymptote with monotone rise (detector-high family)",
         "phi(20) = " + fmt(end) + ", monotone = " + (monotone ? "yes" : "no"));
}

void criterion_3_ln2_asymptote() {
  const auto spec = figure_preset("fig3a").members[0].spec;  // T_D = 0.1
  const double end = phi_at(run_sweep(spec), 20.0);
  report(3, std::abs(end - kLn2Target) <= 0.02,
         "ln 2 asymptote (detector-low family)", "phi(20) = " + fmt(end));
}

void criterion_4_temperature_ordering() {
  bool ok = true;
  std::string detail;
  for (const auto* name : {"fig3a", "fig3b"}) {
    const auto preset = figure_preset(name);
    double previous = std::numeric_limits<double>::infinity();
    detail += std::string(name) + ":";
    for (const auto& member : preset.members) {
      SweepSpec spec = member.spec;
      spec.grid = {2.0};
      const double phi = run_sweep(spec)[0].phi;
      detail += " " + fmt(phi);
      if (!(phi < previous)) ok = false;
      previous = phi;
    }
    detail += "  ";
  }
  report(4, ok, "phi strictly decreasing in T_D at u = 2", detail);
}

void criterion_5_reference_near_uniform() {
  double worst = 0.0;
  for (const auto* name : {"fig3a", "fig3b"}) {
    for (const auto& member : figure_preset(name).members) {
      SweepSpec spec = member.spec;
      spec.grid = {0.0};
      const auto record = run_sweep(spec)[0];
      for (double v : record.q) worst = std::max(worst, std::abs(v - 0.25));
    }
  }
  report(5, worst <= 0.02, "u = 0 reference nearly uniform",
         "max |q - 0.25| = " + fmt(worst));
}

void criterion_6_crossover() {
  const auto spec = figure_preset("fig6").members[0].spec;
  auto difference = [&spec](double u) {
    const auto p = steady_state(build_generator(resolve_point(spec, u)));
    return p.p[DotState{1, 0}.index()] - p.p[DotState{0, 1}.index()];
  };
  double lo = 3.0, hi = 5.0;
  bool bracketed = difference(lo) < 0.0 && difference(hi) > 0.0;
  double root = std::numeric_limits<double>::quiet_NaN();
  if (bracketed) {
    for (int i = 0; i < 100; ++i) {
      const double mid = 0.5 * (lo + hi);
      (difference(mid) < 0.0 ? lo : hi) = mid;
    }
    root = 0.5 * (lo + hi);
  }
  report(6, bracketed && std::abs(root - 4.0) <= 0.05,
         "p(1,0) overtakes p(0,1) at u = 4.00 +- 0.05",
         "root = " + fmt(root));
}

void criterion_7_plateau() {
  const auto spec = figure_preset("fig5").members[2].spec;  // (3.1, 2.9)
  const auto records = run_sweep(spec);
  const double early = (phi_at(records, 2.0) - phi_at(records, 1.0)) / 1.0;
  const double late = (phi_at(records, 3.5) - phi_at(records, 2.5)) / 1.0;
  report(7, early < 0.5 * late, "plateau: slope over u in [1,2] under half of [2.5,3.5]",
         "early = " + fmt(early) + ", late = " + fmt(late));
}

void criterion_8_state_concentration() {
  const auto high = run_sweep(figure_preset("fig3b").members[0].spec);
  const auto& record_high = record_at(high, 20.0);
  const double p10 = record_high.p[DotState{1, 0}.index()];
  const bool high_ok = p10 >= 0.99;

  const auto low = run_sweep(figure_preset("fig3a").members[0].spec);
  const auto& record_low = record_at(low, 20.0);
  const double p00 = record_low.p[DotState{0, 0}.index()];
  const double p01 = record_low.p[DotState{0, 1}.index()];
  const bool low_mass_ok = p00 + p01 >= 0.99;
  const bool low_split_ok = std::abs(p00 - p01) <= 0.02;

  report(8, high_ok && low_mass_ok && low_split_ok,
         "large-u state concentration",
         "p(1,0) = " + fmt(p10) + "; p(0,0)+p(0,1) = " + fmt(p00 + p01) +
             ", |p(0,0)-p(0,1)| = " + fmt(std::abs(p00 - p01)) +
             " (required <= 0.02)");
}

void criterion_9_oracle_agreement() {
  struct Point {
    const char* label;
    SystemParams params;
    std::uint64_t seed;
  };
  std::vector<Point> points;

  {
    auto spec = figure_preset("fig3a").members[0].spec;
    points.push_back({"fig3a u=2", resolve_point(spec, 2.0), 101});
  }
  {
    auto spec = figure_preset("fig3b").members[2].spec;  // T_D = 0.5
    points.push_back({"fig3b u=2", resolve_point(spec, 2.0), 102});
  }
  {
    auto spec = figure_preset("fig4").members[2].spec;  // all rates 0.1
    points.push_back({"fig4 u=5", resolve_point(spec, 5.0), 103});
  }
  {
    auto spec = figure_preset("fig5").members[0].spec;  // (0.4, 0.2)
    points.push_back({"fig5 u=3", resolve_point(spec, 3.0), 104});
  }
  {
    auto spec = figure_preset("fig6").members[0].spec;
    points.push_back({"fig6 u=4", resolve_point(spec, 4.0), 105});
  }

  bool ok = true;
  double worst = 0.0;
  for (const auto& point : points) {
    const auto stationary = steady_state(build_generator(point.params));
    const auto stats = sample_steady(point.params, point.seed, 10000000, 10000);
    const double tv =
        total_variation(StateDistribution{stats.occupation}, stationary);
    worst = std::max(worst, tv);
    if (tv > 0.005) ok = false;
  }
  report(9, ok, "trajectory oracle within TV 0.005 of the solver at 1e7 events",
         "worst TV = " + fmt(worst) + " over 5 points");
}

void criterion_10_solver_cross_checks() {
  std::mt19937_64 rng(1010);
  double worst_evolve = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Generator gen = build_generator(random_params(rng));
    const double t_end = 50.0 / spectral_gap(gen);
    const auto evolved = evolve(gen, uniform_distribution(), t_end);
    const auto stationary = steady_state(gen);
    for (int k = 0; k < kNumStates; ++k) {
      worst_evolve =
          std::max(worst_evolve, std::abs(evolved.p[k] - stationary.p[k]));
    }
  }
  double worst_eigen = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Generator gen = build_generator(random_params(rng));
    const auto solved = steady_state(gen);
    const auto oracle = eigen_steady_state(gen);
    for (int k = 0; k < kNumStates; ++k) {
      worst_eigen = std::max(worst_eigen, std::abs(solved.p[k] - oracle.p[k]));
    }
  }
  report(10, worst_evolve <= 1e-8 && worst_eigen <= 1e-9,
         "time integration and eigen-oracle agree with the direct solve",
         "evolve err = " + fmt(worst_evolve) + " (20 sets), eigen err = " +
             fmt(worst_eigen) + " (100 sets)");
}

void criterion_11_property_suite() {
  std::mt19937_64 rng(1011);
  bool ok = true;
  std::string bad;

  for (int i = 0; i < 100; ++i) {
    const SystemParams params = random_params(rng);
    const Generator gen = build_generator(params);
    for (int j = 0; j < kNumStates; ++j) {
      double column = 0.0;
      for (int k = 0; k < kNumStates; ++k) column += gen.g[k][j];
      if (std::abs(column) > 1e-12) ok = false, bad = "column sums";
    }
    if (gen.g[3][0] != 0.0 || gen.g[0][3] != 0.0 || gen.g[1][2] != 0.0 ||
        gen.g[2][1] != 0.0) {
      ok = false, bad = "diagonal jumps";
    }
  }

  std::uniform_real_distribution<double> factor(0.01, 100.0);
  for (int i = 0; i < 100; ++i) {
    const Generator gen = build_generator(random_params(rng));
    Generator scaled = gen;
    const double c = factor(rng);
    for (auto& row : scaled.g) {
      for (double& v : row) v *= c;
    }
    const auto a = steady_state(gen);
    const auto b = steady_state(scaled);
    for (int k = 0; k < kNumStates; ++k) {
      if (std::abs(a.p[k] - b.p[k]) > 1e-12) ok = false, bad = "rate rescaling";
    }
  }

  std::uniform_real_distribution<double> mass(1e-6, 1.0);
  for (int i = 0; i < 100; ++i) {
    StateDistribution p, q;
    double sp = 0.0, sq = 0.0;
    for (int k = 0; k < 4; ++k) {
      p.p[k] = mass(rng);
      q.p[k] = mass(rng);
      sp += p.p[k];
      sq += q.p[k];
    }
    for (int k = 0; k < 4; ++k) p.p[k] /= sp, q.p[k] /= sq;
    const double kl = kl_divergence(p, q);
    if (kl < -1e-12) ok = false, bad = "KL nonnegativity";
    if (kl_divergence(p, p) != 0.0) ok = false, bad = "KL identity";
  }

  std::uniform_real_distribution<double> offset(0.0, 20.0);
  std::uniform_real_distribution<double> temperature(0.05, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double mu = offset(rng) - 10.0, z = offset(rng), t = temperature(rng);
    if (std::abs(fermi(mu + z, mu, t) + fermi(mu - z, mu, t) - 1.0) > 1e-12) {
      ok = false, bad = "fermi symmetry";
    }
  }

  report(11, ok, "property suite: conservation, bipartite zeros, rescaling, KL, fermi",
         ok ? "100+ randomized cases per property" : "first failure: " + bad);
}

void criterion_12_nonsymmetric_rates() {
  const auto spec = figure_preset("fig4").members[2].spec;  // all rates 0.1
  const auto records = run_sweep(spec);
  bool monotone = true;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    if (records[i + 1].phi < records[i].phi) monotone = false;
  }
  const double end = phi_at(records, 20.0);
  report(12, monotone && end >= 1.0,
         "nonsymmetric all-0.1 rates: monotone rise reaching 1.0",
         "phi(20) = " + fmt(end) + ", monotone = " + (monotone ? "yes" : "no"));
}

}  // namespace

int main() {
  criterion_1_disconnection_identity();
  criterion_2_ln4_asymptote();
  criterion_3_ln2_asymptote();
  criterion_4_temperature_ordering();
  criterion_5_reference_near_uniform();
  criterion_6_crossover();
  criterion_7_plateau();
  criterion_8_state_concentration();
  criterion_9_oracle_agreement();
  criterion_10_solver_cross_checks();
  criterion_11_property_suite();
  criterion_12_nonsymmetric_rates();

  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures;
}
