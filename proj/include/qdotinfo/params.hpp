#pragma once

#include <array>
#include <string>

namespace qdotinfo {

inline constexpr int kNumStates = 4;

// Occupation pair (x, y): x is the detector dot, y the system dot.
// Flat index = 2*x + y, giving the order (0,0), (0,1), (1,0), (1,1).
struct DotState {
  int x = 0;
  int y = 0;

  constexpr int index() const noexcept { return 2 * x + y; }
  static constexpr DotState from_index(int idx) noexcept {
    return {(idx >> 1) & 1, idx & 1};
  }
};

// Reservoirs attached to the system dot: H is the higher potential, L the
// lower one.
enum class Reservoir { H = 0, L = 1 };

// All physical constants of one model instance. Temperatures are in energy
// units (Boltzmann constant absorbed); tunneling rates are inverse time.
struct SystemParams {
  double eps_x = 0.0;     // detector dot level
  double eps_y = 0.0;     // system dot level
  double u = 0.0;         // inter-dot Coulomb energy
  double mu_d = 0.0;      // detector reservoir potential
  double mu_h = 0.0;      // higher system reservoir potential
  double mu_l = 0.0;      // lower system reservoir potential
  double t_d = 0.0;       // detector-side temperature
  double t_s = 0.0;       // system-side temperature
  double gamma_d = 0.0;   // detector dot <-> reservoir rate
  double gamma_h0 = 0.0;  // system dot <-> H rate, detector empty
  double gamma_h1 = 0.0;  // system dot <-> H rate, detector filled
  double gamma_l0 = 0.0;  // system dot <-> L rate, detector empty
  double gamma_l1 = 0.0;  // system dot <-> L rate, detector filled

  bool operator==(const SystemParams&) const = default;
};

// The 13 parameter names in canonical serialization order.
const std::array<std::string, 13>& param_names();

// Access a parameter field by name. Throws std::invalid_argument for an
// unknown name.
double& param_field(SystemParams& params, const std::string& name);
double param_field(const SystemParams& params, const std::string& name);

// Throws std::invalid_argument if the parameters violate a model
// precondition: negative temperature or tunneling rate, u < 0,
// mu_h <= mu_l, a coordinate whose flip rates are all zero, or any
// non-finite value.
void validate(const SystemParams& params);

}  // namespace qdotinfo
