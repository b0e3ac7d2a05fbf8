#include "qdotinfo/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qdotinfo {

namespace {

void validate_spec(const SweepSpec& spec) {
  param_field(spec.base, spec.swept_parameter);  // throws on unknown names
  if (spec.grid.empty()) {
    throw std::invalid_argument("sweep grid must be nonempty");
  }
  for (std::size_t i = 0; i + 1 < spec.grid.size(); ++i) {
    if (!(spec.grid[i] < spec.grid[i + 1])) {
      throw std::invalid_argument("sweep grid must be strictly increasing");
    }
  }
  for (const auto& binding : spec.bindings) {
    param_field(spec.base, binding.target);
  }
}

void apply_bindings(SystemParams& params, const std::vector<Binding>& bindings) {
  for (const auto& binding : bindings) {
    double value = 0.0;
    switch (binding.formula) {
      case Binding::Formula::kEpsXPlusHalfU:
        value = params.eps_x + params.u / 2.0;
        break;
      case Binding::Formula::kEpsXMinusHalfU:
        value = params.eps_x - params.u / 2.0;
        break;
      case Binding::Formula::kConstant:
        value = binding.constant;
        break;
    }
    param_field(params, binding.target) = value;
  }
}

// Shortest-of-17-significant-digits text for a double, locale independent.
std::string format_value(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

SweepSpec fig3_family_spec(const SystemParams& base, Binding::Formula tie) {
  SweepSpec spec;
  spec.base = base;
  spec.swept_parameter = "u";
  spec.grid = default_u_grid();
  spec.bindings = {{"mu_d", tie, 0.0}};
  return spec;
}

std::string temperature_label(double t_d) {
  std::ostringstream out;
  out << "td";
  out << t_d;
  std::string text = out.str();
  for (char& c : text) {
    if (c == '.') c = 'p';
  }
  return text;
}

}  // namespace

Binding parse_binding(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw std::invalid_argument("binding must look like <param>=<formula>: " + text);
  }
  Binding binding;
  binding.target = text.substr(0, eq);
  const std::string rhs = text.substr(eq + 1);
  if (rhs == "eps_x+u/2") {
    binding.formula = Binding::Formula::kEpsXPlusHalfU;
  } else if (rhs == "eps_x-u/2") {
    binding.formula = Binding::Formula::kEpsXMinusHalfU;
  } else {
    binding.formula = Binding::Formula::kConstant;
    const char* begin = rhs.data();
    const char* end = begin + rhs.size();
    const auto res = std::from_chars(begin, end, binding.constant);
    if (res.ec != std::errc{} || res.ptr != end) {
      throw std::invalid_argument("unsupported binding formula: " + rhs);
    }
  }
  return binding;
}

SystemParams resolve_point(const SweepSpec& spec, double value) {
  SystemParams params = spec.base;
  param_field(params, spec.swept_parameter) = value;
  apply_bindings(params, spec.bindings);
  return params;
}

SystemParams resolve_disconnected(const SweepSpec& spec, double value) {
  if (spec.disconnect == DisconnectMode::kKeepResolved) {
    SystemParams params = resolve_point(spec, value);
    params.u = 0.0;
    return params;
  }
  // Rebind: the u = 0 member of the same family.
  SystemParams params = spec.base;
  param_field(params, spec.swept_parameter) =
      spec.swept_parameter == "u" ? 0.0 : value;
  params.u = 0.0;
  apply_bindings(params, spec.bindings);
  return params;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  validate_spec(spec);
  std::vector<SweepRecord> records;
  records.reserve(spec.grid.size());
  for (double value : spec.grid) {
    try {
      const PhiResult phi =
          phi_mi(resolve_point(spec, value), resolve_disconnected(spec, value));
      SweepRecord record;
      record.swept_value = value;
      record.phi = phi.phi;
      record.p = phi.p.p;
      record.q = phi.q.p;
      record.entropy_p = shannon_entropy(phi.p);
      record.standard_mi = standard_mutual_information(phi.p);
      records.push_back(record);
    } catch (const std::exception& e) {
      throw SweepError("sweep failed at " + spec.swept_parameter + " = " +
                       format_value(value) + ": " + e.what());
    }
  }
  return records;
}

std::vector<double> default_u_grid() {
  std::vector<double> grid;
  grid.reserve(401);
  for (int i = 0; i <= 400; ++i) grid.push_back(i * 0.05);
  return grid;
}

FigurePreset figure_preset(const std::string& name) {
  // Shared caption constants of the figure family.
  SystemParams base;
  base.eps_x = 1.0;
  base.eps_y = 1.0;
  base.u = 0.0;
  base.mu_d = 1.0;  // overwritten by the mu_d binding at every grid point
  base.mu_h = 1.1;
  base.mu_l = 0.9;
  base.t_d = 0.1;
  base.t_s = 1.0;
  base.gamma_d = 100.0;
  base.gamma_h0 = 10.0;
  base.gamma_h1 = 0.1;
  base.gamma_l0 = 0.1;
  base.gamma_l1 = 10.0;

  FigurePreset preset;
  preset.name = name;

  if (name == "fig3a" || name == "fig3b") {
    const auto tie = name == "fig3a" ? Binding::Formula::kEpsXMinusHalfU
                                     : Binding::Formula::kEpsXPlusHalfU;
    for (double t_d : {0.1, 0.2, 0.5, 1.0}) {
      SystemParams member = base;
      member.t_d = t_d;
      preset.members.push_back(
          {temperature_label(t_d), fig3_family_spec(member, tie)});
    }
    return preset;
  }
  if (name == "fig4") {
    // Vary the against-the-slope rates jointly; the down-slope rates stay at
    // 0.1, so the last member is the fully nonsymmetric all-0.1 case.
    const struct {
      double gamma;
      const char* label;
    } members[] = {{10.0, "g10"}, {1.0, "g1"}, {0.1, "g0p1"}};
    for (const auto& m : members) {
      SystemParams member = base;
      member.gamma_h0 = m.gamma;
      member.gamma_l1 = m.gamma;
      preset.members.push_back(
          {m.label, fig3_family_spec(member, Binding::Formula::kEpsXPlusHalfU)});
    }
    return preset;
  }
  if (name == "fig5") {
    const struct {
      double mu_h;
      double mu_l;
      const char* label;
    } members[] = {{0.4, 0.2, "mu0p4_0p2"},
                   {1.1, 0.9, "mu1p1_0p9"},
                   {3.1, 2.9, "mu3p1_2p9"}};
    for (const auto& m : members) {
      SystemParams member = base;
      member.mu_h = m.mu_h;
      member.mu_l = m.mu_l;
      preset.members.push_back(
          {m.label, fig3_family_spec(member, Binding::Formula::kEpsXPlusHalfU)});
    }
    return preset;
  }
  if (name == "fig6") {
    SystemParams member = base;
    member.mu_h = 3.1;
    member.mu_l = 2.9;
    preset.members.push_back(
        {"states", fig3_family_spec(member, Binding::Formula::kEpsXPlusHalfU)});
    return preset;
  }
  throw std::invalid_argument("unknown figure preset: " + name);
}

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  if (records.empty()) {
    throw std::invalid_argument("emit_csv: no records");
  }
  out << "swept_value,phi,p00,p01,p10,p11,q00,q01,q10,q11,entropy_p,standard_mi\n";
  for (const auto& r : records) {
    out << format_value(r.swept_value) << ',' << format_value(r.phi);
    for (double v : r.p) out << ',' << format_value(v);
    for (double v : r.q) out << ',' << format_value(v);
    out << ',' << format_value(r.entropy_p) << ',' << format_value(r.standard_mi)
        << '\n';
  }
  if (!out) {
    throw std::runtime_error("emit_csv: stream write failure");
  }
}

}  // namespace qdotinfo
