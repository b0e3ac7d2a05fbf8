#include "qdotinfo/info.hpp"

#include <cmath>
#include <limits>

#include "qdotinfo/generator.hpp"
#include "qdotinfo/solver.hpp"

namespace qdotinfo {

namespace {

// Tiny negative results from float rounding collapse to an exact 0.
double clamp_phi(double phi) {
  return (phi < 0.0 && phi >= -1e-12) ? 0.0 : phi;
}

}  // namespace

std::array<double, 4> kl_divergence_terms(const StateDistribution& p,
                                          const StateDistribution& q) {
  validate(p);
  validate(q);
  std::array<double, 4> terms{};
  for (int i = 0; i < kNumStates; ++i) {
    if (p.p[i] <= 0.0) continue;  // 0 ln 0 = 0
    if (q.p[i] <= 0.0) {
      terms[i] = std::numeric_limits<double>::infinity();
    } else {
      terms[i] = p.p[i] * std::log(p.p[i] / q.p[i]);
    }
  }
  return terms;
}

double kl_divergence(const StateDistribution& p, const StateDistribution& q) {
  double sum = 0.0;
  for (double term : kl_divergence_terms(p, q)) sum += term;
  return sum;
}

StateDistribution disconnected_distribution(const SystemParams& params) {
  SystemParams disconnected = params;
  disconnected.u = 0.0;
  return steady_state(build_generator(disconnected));
}

PhiResult phi_mi(const SystemParams& interacting,
                 const SystemParams& disconnected) {
  PhiResult result;
  result.p = steady_state(build_generator(interacting));
  SystemParams reference = disconnected;
  reference.u = 0.0;
  result.q = steady_state(build_generator(reference));
  result.per_state_terms = kl_divergence_terms(result.p, result.q);
  double phi = 0.0;
  for (double term : result.per_state_terms) phi += term;
  result.phi = clamp_phi(phi);
  return result;
}

PhiResult phi_mi(const SystemParams& params) { return phi_mi(params, params); }

double shannon_entropy(const StateDistribution& p) {
  validate(p);
  double h = 0.0;
  for (double v : p.p) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

double standard_mutual_information(const StateDistribution& p) {
  validate(p);
  const auto px = p.x_marginal();
  const auto py = p.y_marginal();
  StateDistribution product;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) product.p[2 * x + y] = px[x] * py[y];
  }
  return clamp_phi(kl_divergence(p, product));
}

}  // namespace qdotinfo
