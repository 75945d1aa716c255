#pragma once

#include <g2kit/action.hpp>

#include <random>

namespace support {

/// Adds +1 to one randomly chosen coefficient of mu (a constant in a
/// section, an anchor-part constant, or a fiber-linear entry), preserving shapes.
g2kit::StrictActionData perturb_action(const g2kit::StrictActionData& s, std::mt19937_64& rng);

}  // namespace support
