#include "qdotinfo/solver.hpp"

#include <algorithm>
#include <cmath>

namespace qdotinfo {

namespace {

constexpr double kNegativeClamp = 1e-12;
constexpr double kResidualTol = 1e-10;

double residual_inf_norm(const Generator& gen, const StateDistribution& dist) {
  double out = 0.0;
  for (int i = 0; i < kNumStates; ++i) {
    double r = 0.0;
    for (int j = 0; j < kNumStates; ++j) r += gen.g[i][j] * dist.p[j];
    out = std::max(out, std::abs(r));
  }
  return out;
}

}  // namespace

namespace detail {

StateDistribution steady_state_replacing_row(const Generator& gen, int row) {
  if (row < 0 || row >= kNumStates) {
    throw std::invalid_argument("steady_state: row index out of range");
  }
  // Augmented system [G | 0] with `row` swapped for the normalization
  // constraint sum(p) = 1.
  double a[kNumStates][kNumStates + 1];
  for (int i = 0; i < kNumStates; ++i) {
    for (int j = 0; j < kNumStates; ++j) {
      a[i][j] = i == row ? 1.0 : gen.g[i][j];
    }
    a[i][kNumStates] = i == row ? 1.0 : 0.0;
  }

  const double pivot_tol = 1e-14 * std::max(1.0, gen.max_abs_entry());
  for (int col = 0; col < kNumStates; ++col) {
    int pivot = col;
    for (int r = col + 1; r < kNumStates; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) <= pivot_tol) {
      throw SolverError("steady_state: singular system (reducible chain)", gen);
    }
    if (pivot != col) std::swap(a[pivot], a[col]);
    for (int r = col + 1; r < kNumStates; ++r) {
      const double factor = a[r][col] / a[col][col];
      a[r][col] = 0.0;
      for (int j = col + 1; j <= kNumStates; ++j) a[r][j] -= factor * a[col][j];
    }
  }

  StateDistribution dist;
  for (int i = kNumStates - 1; i >= 0; --i) {
    double v = a[i][kNumStates];
    for (int j = i + 1; j < kNumStates; ++j) v -= a[i][j] * dist.p[j];
    dist.p[i] = v / a[i][i];
  }

  double sum = 0.0;
  for (double& v : dist.p) {
    if (v < -kNegativeClamp || v > 1.0 + kNegativeClamp) {
      throw SolverError("steady_state: solution outside [0, 1]", gen);
    }
    v = std::clamp(v, 0.0, 1.0);
    sum += v;
  }
  if (!(sum > 0.0)) {
    throw SolverError("steady_state: vanishing solution", gen);
  }
  for (double& v : dist.p) v /= sum;

  if (residual_inf_norm(gen, dist) > kResidualTol) {
    throw SolverError("steady_state: residual check failed", gen);
  }
  return dist;
}

}  // namespace detail

StateDistribution steady_state(const Generator& gen) {
  return detail::steady_state_replacing_row(gen, 0);
}

StateDistribution evolve(const Generator& gen, const StateDistribution& p0,
                         double t_end, std::optional<double> dt) {
  if (!std::isfinite(t_end) || t_end <= 0.0) {
    throw std::invalid_argument("evolve: t_end must be positive and finite");
  }
  validate(p0);

  const double max_exit = gen.max_exit_rate();
  if (max_exit == 0.0) return p0;  // nothing moves
  const double step = dt ? *dt : 0.1 / max_exit;
  if (!std::isfinite(step) || step <= 0.0) {
    throw std::invalid_argument("evolve: dt must be positive and finite");
  }

  using Vec = std::array<double, 4>;
  const auto apply = [&gen](const Vec& v) {
    Vec out{};
    for (int i = 0; i < kNumStates; ++i) {
      double s = 0.0;
      for (int j = 0; j < kNumStates; ++j) s += gen.g[i][j] * v[j];
      out[i] = s;
    }
    return out;
  };
  const auto axpy = [](const Vec& v, double h, const Vec& d) {
    Vec out;
    for (int i = 0; i < kNumStates; ++i) out[i] = v[i] + h * d[i];
    return out;
  };

  Vec p = p0.p;
  double t = 0.0;
  while (t < t_end) {
    const double h = std::min(step, t_end - t);
    const Vec k1 = apply(p);
    const Vec k2 = apply(axpy(p, 0.5 * h, k1));
    const Vec k3 = apply(axpy(p, 0.5 * h, k2));
    const Vec k4 = apply(axpy(p, h, k3));
    for (int i = 0; i < kNumStates; ++i) {
      p[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    t += h;
  }

  double sum = 0.0;
  for (double v : p) sum += v;
  if (std::abs(sum - 1.0) > 1e-9 * std::max(1.0, t_end)) {
    throw SolverError("evolve: probability mass drifted", gen);
  }
  StateDistribution out;
  for (int i = 0; i < kNumStates; ++i) {
    out.p[i] = std::clamp(p[i] / sum, 0.0, 1.0);
  }
  return out;
}

}  // namespace qdotinfo
