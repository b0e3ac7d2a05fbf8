#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdotinfo/info.hpp"
#include "qdotinfo/params.hpp"

namespace qdotinfo {

// Parameter coupling applied at every grid point, after the swept value has
// been set. Only the potential-tying forms and plain constants are
// supported.
struct Binding {
  enum class Formula {
    kEpsXPlusHalfU,   // target := eps_x + u/2
    kEpsXMinusHalfU,  // target := eps_x - u/2
    kConstant,        // target := constant
  };

  std::string target;
  Formula formula = Formula::kConstant;
  double constant = 0.0;
};

// Parses "mu_d=eps_x+u/2", "mu_d=eps_x-u/2" or "<param>=<number>".
Binding parse_binding(const std::string& text);

// How the u = 0 reference distribution is formed at each grid point.
//   kRebind:       bindings are re-evaluated with u = 0, so a potential tied
//                  to eps_x +- u/2 returns to eps_x. The reference is the
//                  u = 0 member of the swept family. Default.
//   kKeepResolved: bound values stay as resolved at the grid point and only
//                  u itself is set to 0.
enum class DisconnectMode { kRebind, kKeepResolved };

struct SweepSpec {
  SystemParams base;
  std::string swept_parameter;  // one of the parameter names
  std::vector<double> grid;     // nonempty, strictly increasing
  std::vector<Binding> bindings;
  DisconnectMode disconnect = DisconnectMode::kRebind;
};

struct SweepRecord {
  double swept_value = 0.0;
  double phi = 0.0;
  std::array<double, 4> p{};
  std::array<double, 4> q{};
  double entropy_p = 0.0;
  double standard_mi = 0.0;
};

// A solver failure inside a sweep, annotated with the offending grid point.
class SweepError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interacting parameters at one grid value: swept value set, bindings
// applied in order.
SystemParams resolve_point(const SweepSpec& spec, double value);

// Reference (u = 0) parameters at one grid value per the spec's disconnect
// mode.
SystemParams resolve_disconnected(const SweepSpec& spec, double value);

// One record per grid value, in grid order. Bit-reproducible for identical
// specs.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

struct FigureMember {
  std::string label;
  SweepSpec spec;
};

struct FigurePreset {
  std::string name;
  std::vector<FigureMember> members;
};

// Built-in sweep families: fig3a, fig3b, fig4, fig5, fig6. Throws
// std::invalid_argument for an unknown name.
FigurePreset figure_preset(const std::string& name);

// 0 to 20 in steps of 0.05 (the default grid of the figure presets).
std::vector<double> default_u_grid();

// Locale-free CSV: fixed header
//   swept_value,phi,p00,p01,p10,p11,q00,q01,q10,q11,entropy_p,standard_mi
// then one row per record at 17 significant digits, LF line endings.
// Throws std::invalid_argument for an empty record list.
void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out);

}  // namespace qdotinfo
