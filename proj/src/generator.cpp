#include "qdotinfo/generator.hpp"

#include <algorithm>
#include <cmath>

#include "qdotinfo/fermi.hpp"

namespace qdotinfo {

RateTable build_rate_table(const SystemParams& params) {
  validate(params);
  RateTable rates;
  for (int y = 0; y < 2; ++y) {
    const double f = detector_fill_fraction(params, y);
    rates.detector_fill[y] = params.gamma_d * f;
    rates.detector_empty[y] = params.gamma_d * (1.0 - f);
  }
  const double gammas[2][2] = {{params.gamma_h0, params.gamma_l0},
                               {params.gamma_h1, params.gamma_l1}};
  for (int x = 0; x < 2; ++x) {
    for (int c = 0; c < 2; ++c) {
      const auto res = c == 0 ? Reservoir::H : Reservoir::L;
      const double f = system_fill_fraction(params, x, res);
      rates.system_fill[x][c] = gammas[x][c] * f;
      rates.system_empty[x][c] = gammas[x][c] * (1.0 - f);
    }
  }
  return rates;
}

Generator build_generator(const RateTable& rates) {
  Generator gen;
  auto add = [&gen](DotState from, DotState to, double rate) {
    gen.g[to.index()][from.index()] += rate;
  };
  for (int y = 0; y < 2; ++y) {
    add({0, y}, {1, y}, rates.detector_fill[y]);
    add({1, y}, {0, y}, rates.detector_empty[y]);
  }
  for (int x = 0; x < 2; ++x) {
    add({x, 0}, {x, 1}, rates.system_fill[x][0] + rates.system_fill[x][1]);
    add({x, 1}, {x, 0}, rates.system_empty[x][0] + rates.system_empty[x][1]);
  }
  for (int j = 0; j < kNumStates; ++j) {
    double column = 0.0;
    for (int i = 0; i < kNumStates; ++i) {
      if (i != j) column += gen.g[i][j];
    }
    gen.g[j][j] = -column;
  }
  return gen;
}

Generator build_generator(const SystemParams& params) {
  return build_generator(build_rate_table(params));
}

double Generator::max_exit_rate() const {
  double out = 0.0;
  for (int j = 0; j < kNumStates; ++j) out = std::max(out, std::abs(g[j][j]));
  return out;
}

double Generator::max_abs_entry() const {
  double out = 0.0;
  for (const auto& row : g) {
    for (double v : row) out = std::max(out, std::abs(v));
  }
  return out;
}

}  // namespace qdotinfo
