#pragma once

#include <array>

#include "qdotinfo/params.hpp"

namespace qdotinfo {

// Per-transition jump rates with the two system-reservoir channels kept
// separate. The generator sums the channels; the trajectory sampler picks
// events per channel.
struct RateTable {
  std::array<double, 2> detector_fill{};   // x: 0 -> 1, indexed by y
  std::array<double, 2> detector_empty{};  // x: 1 -> 0, indexed by y
  // system flips indexed by [x][channel], channel 0 = H, 1 = L
  std::array<std::array<double, 2>, 2> system_fill{};   // y: 0 -> 1
  std::array<std::array<double, 2>, 2> system_empty{};  // y: 1 -> 0
};

RateTable build_rate_table(const SystemParams& params);

// Column-convention Markov generator over the four states: g[i][j] for
// i != j is the rate of the jump state_j -> state_i, the diagonal holds the
// negated off-diagonal column sum, and entries between states differing in
// both coordinates stay exactly zero. Time evolution reads dp/dt = G p.
struct Generator {
  std::array<std::array<double, 4>, 4> g{};

  double rate(int from, int to) const { return g[to][from]; }
  double max_exit_rate() const;  // max_j |g[j][j]|
  double max_abs_entry() const;
};

Generator build_generator(const RateTable& rates);
Generator build_generator(const SystemParams& params);

}  // namespace qdotinfo
