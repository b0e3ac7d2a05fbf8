#include "qdotinfo/fermi.hpp"

#include <cmath>
#include <stdexcept>

namespace qdotinfo {

double fermi(double energy, double mu, double temperature) {
  if (!(temperature >= 0.0)) {
    throw std::invalid_argument("fermi: temperature must be >= 0");
  }
  if (temperature == 0.0) {
    if (energy < mu) return 1.0;
    if (energy > mu) return 0.0;
    return 0.5;
  }
  const double z = (energy - mu) / temperature;
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

double detector_fill_fraction(const SystemParams& params, int y) {
  return fermi(params.eps_x + y * params.u, params.mu_d, params.t_d);
}

double system_fill_fraction(const SystemParams& params, int x, Reservoir res) {
  const double mu = res == Reservoir::H ? params.mu_h : params.mu_l;
  return fermi(params.eps_y + x * params.u, mu, params.t_s);
}

}  // namespace qdotinfo
