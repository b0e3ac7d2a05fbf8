#include "qdotinfo/params.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qdotinfo {

namespace {

using Field = double SystemParams::*;

constexpr std::pair<const char*, Field> kFields[] = {
    {"eps_x", &SystemParams::eps_x},       {"eps_y", &SystemParams::eps_y},
    {"u", &SystemParams::u},               {"mu_d", &SystemParams::mu_d},
    {"mu_h", &SystemParams::mu_h},         {"mu_l", &SystemParams::mu_l},
    {"t_d", &SystemParams::t_d},           {"t_s", &SystemParams::t_s},
    {"gamma_d", &SystemParams::gamma_d},   {"gamma_h0", &SystemParams::gamma_h0},
    {"gamma_h1", &SystemParams::gamma_h1}, {"gamma_l0", &SystemParams::gamma_l0},
    {"gamma_l1", &SystemParams::gamma_l1},
};

Field find_field(const std::string& name) {
  for (const auto& [key, field] : kFields) {
    if (name == key) return field;
  }
  throw std::invalid_argument("unknown parameter name: " + name);
}

}  // namespace

const std::array<std::string, 13>& param_names() {
  static const std::array<std::string, 13> names = [] {
    std::array<std::string, 13> out;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = kFields[i].first;
    return out;
  }();
  return names;
}

double& param_field(SystemParams& params, const std::string& name) {
  return params.*find_field(name);
}

double param_field(const SystemParams& params, const std::string& name) {
  return params.*find_field(name);
}

void validate(const SystemParams& params) {
  for (const auto& [key, field] : kFields) {
    if (!std::isfinite(params.*field)) {
      throw std::invalid_argument(std::string("non-finite parameter: ") + key);
    }
  }
  if (params.t_d < 0.0 || params.t_s < 0.0) {
    throw std::invalid_argument("temperatures must be >= 0");
  }
  if (params.u < 0.0) {
    throw std::invalid_argument("interaction energy u must be >= 0");
  }
  if (!(params.mu_h > params.mu_l)) {
    throw std::invalid_argument("mu_h must exceed mu_l");
  }
  const double rates[] = {params.gamma_d, params.gamma_h0, params.gamma_h1,
                          params.gamma_l0, params.gamma_l1};
  for (double rate : rates) {
    if (rate < 0.0) {
      throw std::invalid_argument("tunneling rates must be >= 0");
    }
  }
  // Every coordinate needs at least one positive flip rate, otherwise the
  // chain is reducible.
  if (params.gamma_d <= 0.0) {
    throw std::invalid_argument("gamma_d must be > 0 (detector frozen)");
  }
  if (params.gamma_h0 + params.gamma_l0 <= 0.0 ||
      params.gamma_h1 + params.gamma_l1 <= 0.0) {
    throw std::invalid_argument(
        "each detector state needs a positive system-dot rate");
  }
}

}  // namespace qdotinfo
