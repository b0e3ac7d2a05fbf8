#pragma once

#include "qdotinfo/params.hpp"

namespace qdotinfo {

// Fermi-Dirac occupation 1/(1 + exp((energy - mu)/temperature)), evaluated
// in an overflow-free branch. temperature = 0 is the step-function limit,
// returning 1/2 at exact degeneracy. Throws std::invalid_argument for a
// negative temperature.
double fermi(double energy, double mu, double temperature);

// Occupation the detector reservoir offers its dot while the system dot
// holds y electrons: fermi(eps_x + y*u, mu_d, t_d).
double detector_fill_fraction(const SystemParams& params, int y);

// Occupation reservoir `res` offers the system dot while the detector dot
// holds x electrons: fermi(eps_y + x*u, mu_res, t_s).
double system_fill_fraction(const SystemParams& params, int x, Reservoir res);

}  // namespace qdotinfo
