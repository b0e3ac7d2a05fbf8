#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qdotinfo/distribution.hpp"
#include "qdotinfo/generator.hpp"

namespace qdotinfo {

// Raised when a stationary solve cannot produce a valid distribution: the
// chain is reducible (singular system) or the residual check fails. Carries
// the offending generator.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& message, const Generator& gen)
      : std::runtime_error(message), generator_(gen) {}
  const Generator& generator() const noexcept { return generator_; }

 private:
  Generator generator_;
};

// Stationary distribution of the generator: solves G p = 0 with sum(p) = 1
// by replacing row 0 with the normalization constraint and eliminating with
// partial pivoting. Entries in [-1e-12, 0) are clamped to 0 and the vector
// renormalized; the residual ||G p||_inf must come out <= 1e-10.
StateDistribution steady_state(const Generator& gen);

// Integrates dp/dt = G p with classical fixed-step RK4 up to t_end > 0.
// When dt is not given it defaults to 0.1 / max_exit_rate, which sits well
// inside the RK4 stability region. The result is renormalized; mass drift
// beyond 1e-9 per unit time is a SolverError.
StateDistribution evolve(const Generator& gen, const StateDistribution& p0,
                         double t_end,
                         std::optional<double> dt = std::nullopt);

namespace detail {
// The row replaced by the normalization constraint is immaterial thanks to
// pivoting; exposed so tests can verify that claim.
StateDistribution steady_state_replacing_row(const Generator& gen, int row);
}  // namespace detail

}  // namespace qdotinfo
