#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "qdotinfo/distribution.hpp"
#include "qdotinfo/generator.hpp"

namespace qdotinfo::testing {

// Independent stationary-distribution oracle: dense eigendecomposition, the
// eigenvector of the eigenvalue nearest zero, normalized to unit sum. Kept
// entirely separate from the production elimination-based solve.
inline StateDistribution eigen_steady_state(const Generator& gen) {
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = gen.g[i][j];
  }
  Eigen::EigenSolver<Eigen::Matrix4d> solver(m);
  int best = 0;
  double best_mag = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 4; ++k) {
    const double mag = std::abs(solver.eigenvalues()(k));
    if (mag < best_mag) {
      best_mag = mag;
      best = k;
    }
  }
  StateDistribution dist;
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    dist.p[i] = solver.eigenvectors()(i, best).real();
    sum += dist.p[i];
  }
  for (double& v : dist.p) v /= sum;
  return dist;
}

// Spectral gap: the smallest |Re(lambda)| among the nonstationary modes.
// 1/gap is the slowest relaxation time.
inline double spectral_gap(const Generator& gen) {
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = gen.g[i][j];
  }
  Eigen::EigenSolver<Eigen::Matrix4d> solver(m);
  int zero_index = 0;
  double best_mag = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 4; ++k) {
    const double mag = std::abs(solver.eigenvalues()(k));
    if (mag < best_mag) {
      best_mag = mag;
      zero_index = k;
    }
  }
  double gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 4; ++k) {
    if (k == zero_index) continue;
    gap = std::min(gap, std::abs(solver.eigenvalues()(k).real()));
  }
  return gap;
}

}  // namespace qdotinfo::testing
