#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "qdotinfo/params.hpp"

namespace qdotinfo {

// Raised when the sampler reaches a state with zero total exit rate.
class AbsorbingStateError : public std::runtime_error {
 public:
  AbsorbingStateError(const std::string& message, int state_index)
      : std::runtime_error(message), state_index_(state_index) {}
  int state_index() const noexcept { return state_index_; }

 private:
  int state_index_;
};

// Time-weighted occupation statistics gathered from one trajectory.
struct TrajectoryStats {
  std::array<double, 4> occupation{};
  double total_time = 0.0;
  std::uint64_t n_events = 0;
  std::uint64_t seed = 0;

  bool operator==(const TrajectoryStats&) const = default;
};

inline constexpr std::uint64_t kDefaultBurnInEvents = 10000;

// Direct Gillespie sampling of the jump process: from the current state the
// waiting time is exponential at the total exit rate and the event (detector
// flip, system flip via H, system flip via L) is drawn proportionally to its
// rate. The walk starts at (0,0); dwell times belonging to the first
// burn_in_events jumps are excluded from the tally. Fully deterministic for
// a fixed seed (mt19937_64 with uniform doubles taken from the top 53 bits).
TrajectoryStats sample_steady(const SystemParams& params, std::uint64_t seed,
                              std::uint64_t n_events,
                              std::uint64_t burn_in_events = kDefaultBurnInEvents);

}  // namespace qdotinfo
