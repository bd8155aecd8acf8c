#pragma once

#include <cstdint>
#include <string>

#include "sglab/grid.hpp"

namespace sglab {

// C-infinity bump on (-1,1), equal to 1 at 0.
double bump(double u);

FieldSnapshot profile_bump(int n);
FieldSnapshot profile_modes(int n);
FieldSnapshot profile_rough(int n, std::uint64_t seed, double spectral_decay);
FieldSnapshot named_profile(const std::string& name, int n, std::uint64_t seed = 7);

// Rescale f so that besov_norm(f, eta) == target_norm.
FieldSnapshot scaled_to_besov(const FieldSnapshot& f, double eta, double target_norm);

}  // namespace sglab
