#ifndef SHADOWLAB_LEVEL_HPP
#define SHADOWLAB_LEVEL_HPP

#include <cstdint>
#include <vector>

#include "shadowlab/family.hpp"

namespace shadowlab {

/// A subfamily of one level C([n],k), one bit per k-set (bit i = i-th set in colex order).
using LevelMask = std::uint64_t;

/**
 * Indexes the level C([n],k) in colex order so that small uniform families
 * (at most 64 possible members) can be handled as single words. Colex
 * initial segments are then the masks with the low t bits set.
 */
class Level {
public:
    /// Requires C(n,k) <= 64.
    Level(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int count() const { return static_cast<int>(sets_.size()); }
    SetWord set(int index) const { return sets_[static_cast<std::size_t>(index)]; }
    /// Index of a k-subset of [n], -1 if it is not one.
    int index_of(SetWord s) const;

    LevelMask full() const { return count() == 64 ? ~LevelMask{0} : (LevelMask{1} << count()) - 1; }
    LevelMask mask_of(const Family &f) const;
    Family to_family(LevelMask mask) const;

    /// Members of the level containing / avoiding an element.
    LevelMask containing(int element) const { return containing_[static_cast<std::size_t>(element)]; }

    /// Immediate shadow as a mask over C([n],k-1); requires C(n,k-1) <= 64.
    LevelMask shadow_mask(LevelMask family) const;
    const Level &lower() const;

private:
    int n_;
    int k_;
    std::vector<SetWord> sets_;
    std::vector<int> index_;                 // dense over 2^n words when n <= 16
    std::vector<LevelMask> containing_;      // by element, index 0 unused
    std::vector<LevelMask> shadow_of_;       // by set index, over the lower level
    std::vector<Level> lower_;               // zero or one entry
};

} // namespace shadowlab

#endif
