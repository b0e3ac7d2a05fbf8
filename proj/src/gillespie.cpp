#include "qdotinfo/gillespie.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qdotinfo/generator.hpp"

namespace qdotinfo {

TrajectoryStats sample_steady(const SystemParams& params, std::uint64_t seed,
                              std::uint64_t n_events,
                              std::uint64_t burn_in_events) {
  if (n_events == 0) {
    throw std::invalid_argument("sample_steady: n_events must be > 0");
  }
  if (burn_in_events >= n_events) {
    throw std::invalid_argument("sample_steady: burn-in must leave events to tally");
  }
  const RateTable rates = build_rate_table(params);

  // Three event channels per state: detector flip, system flip via H,
  // system flip via L.
  struct StateEvents {
    double rate[3];
    double total;
    int next[3];
  };
  StateEvents table[kNumStates];
  for (int idx = 0; idx < kNumStates; ++idx) {
    const DotState s = DotState::from_index(idx);
    StateEvents& ev = table[idx];
    ev.rate[0] = s.x == 0 ? rates.detector_fill[s.y] : rates.detector_empty[s.y];
    ev.next[0] = DotState{1 - s.x, s.y}.index();
    for (int c = 0; c < 2; ++c) {
      ev.rate[1 + c] = s.y == 0 ? rates.system_fill[s.x][c]
                                : rates.system_empty[s.x][c];
      ev.next[1 + c] = DotState{s.x, 1 - s.y}.index();
    }
    ev.total = ev.rate[0] + ev.rate[1] + ev.rate[2];
  }

  std::mt19937_64 rng(seed);
  const auto uniform01 = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  };

  TrajectoryStats stats;
  stats.seed = seed;
  stats.n_events = n_events;

  int state = DotState{0, 0}.index();
  std::array<double, 4> dwell{};
  for (std::uint64_t k = 1; k <= n_events; ++k) {
    const StateEvents& ev = table[state];
    if (ev.total <= 0.0) {
      throw AbsorbingStateError(
          "sample_steady: zero exit rate in state " + std::to_string(state),
          state);
    }
    const double wait = -std::log1p(-uniform01()) / ev.total;
    const double pick = uniform01() * ev.total;
    if (k > burn_in_events) {
      dwell[state] += wait;
      stats.total_time += wait;
    }
    if (pick < ev.rate[0]) {
      state = ev.next[0];
    } else if (pick < ev.rate[0] + ev.rate[1]) {
      state = ev.next[1];
    } else {
      state = ev.next[2];
    }
  }

  if (!(stats.total_time > 0.0)) {
    throw AbsorbingStateError("sample_steady: no time accumulated", state);
  }
  for (int i = 0; i < kNumStates; ++i) {
    stats.occupation[i] = dwell[i] / stats.total_time;
  }
  return stats;
}

}  // namespace qdotinfo
