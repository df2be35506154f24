#ifndef SHADOWLAB_SPACES_INTERNAL_HPP
#define SHADOWLAB_SPACES_INTERNAL_HPP

#include <cstdint>
#include <vector>

#include "shadowlab/level.hpp"

namespace shadowlab {

/// Every shifted subfamily of a level, as sorted masks.
std::vector<LevelMask> shifted_level_masks(const Level &level, std::uint64_t budget);

/// Every up-closed family in 2^[n] (n <= 6); bit w stands for the set with word w.
std::vector<std::uint64_t> up_set_masks(int n, std::uint64_t budget);

Family family_from_power_mask(int n, std::uint64_t mask);

} // namespace shadowlab

#endif
