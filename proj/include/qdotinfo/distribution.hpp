#pragma once

#include <array>

namespace qdotinfo {

// Probability vector over the four electronic states in canonical order
// (0,0), (0,1), (1,0), (1,1).
struct StateDistribution {
  std::array<double, 4> p{};

  double operator[](int i) const { return p[i]; }
  std::array<double, 2> x_marginal() const;  // {P(x=0), P(x=1)}
  std::array<double, 2> y_marginal() const;

  bool operator==(const StateDistribution&) const = default;
};

inline constexpr StateDistribution uniform_distribution() {
  return {{0.25, 0.25, 0.25, 0.25}};
}

// Throws std::invalid_argument unless all entries lie in [0, 1] and the sum
// is 1 within `tol`.
void validate(const StateDistribution& dist, double tol = 1e-9);

// Half the L1 distance between two probability vectors.
double total_variation(const StateDistribution& a, const StateDistribution& b);

}  // namespace qdotinfo
