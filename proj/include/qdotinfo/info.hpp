#pragma once

#include <array>

#include "qdotinfo/distribution.hpp"
#include "qdotinfo/params.hpp"

namespace qdotinfo {

// Relative entropy sum_i p_i ln(p_i / q_i) in nats, with the convention
// 0 ln 0 = 0. Returns +infinity deliberately (not as a float accident) when
// p carries mass where q has none. Throws std::invalid_argument when either
// input sums to something off 1 by more than 1e-9.
double kl_divergence(const StateDistribution& p, const StateDistribution& q);

// The four per-state terms p_i ln(p_i / q_i); terms with p_i = 0 are
// exactly 0.
std::array<double, 4> kl_divergence_terms(const StateDistribution& p,
                                          const StateDistribution& q);

// Steady state of the same model with the inter-dot coupling removed:
// u := 0 while every other parameter keeps its already-resolved value.
StateDistribution disconnected_distribution(const SystemParams& params);

// Divergence of the interacting steady state from the disconnected (u = 0)
// one, with the per-state breakdown.
struct PhiResult {
  double phi = 0.0;
  StateDistribution p;  // interacting steady state
  StateDistribution q;  // disconnected steady state
  std::array<double, 4> per_state_terms{};
};

PhiResult phi_mi(const SystemParams& params);

// Same summary with an explicitly chosen reference model; the sweep layer
// uses this to form the reference from the u = 0 member of a swept family.
PhiResult phi_mi(const SystemParams& interacting,
                 const SystemParams& disconnected);

// -sum p_i ln p_i, in [0, ln 4].
double shannon_entropy(const StateDistribution& p);

// KL of the joint against the product of its own marginals, in [0, ln 2]
// for two binary coordinates. Distinct from phi_mi, which compares against
// the u = 0 steady state rather than a product.
double standard_mutual_information(const StateDistribution& p);

}  // namespace qdotinfo
