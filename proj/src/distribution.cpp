#include "qdotinfo/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace qdotinfo {

std::array<double, 2> StateDistribution::x_marginal() const {
  return {p[0] + p[1], p[2] + p[3]};
}

std::array<double, 2> StateDistribution::y_marginal() const {
  return {p[0] + p[2], p[1] + p[3]};
}

void validate(const StateDistribution& dist, double tol) {
  double sum = 0.0;
  for (double v : dist.p) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0 + tol) {
      throw std::invalid_argument("distribution entry outside [0, 1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw std::invalid_argument("distribution does not sum to 1");
  }
}

double total_variation(const StateDistribution& a, const StateDistribution& b) {
  double l1 = 0.0;
  for (int i = 0; i < 4; ++i) l1 += std::abs(a.p[i] - b.p[i]);
  return 0.5 * l1;
}

}  // namespace qdotinfo
