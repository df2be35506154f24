#include "shadowlab/level.hpp"

#include <algorithm>
#include <bit>

#include "shadowlab/binom.hpp"
#include "shadowlab/error.hpp"

namespace shadowlab {

Level::Level(int n, int k) : n_(n), k_(k)
{
    require(n >= 0 && n <= max_ground_size && k >= 0 && k <= n, ErrorCode::out_of_range, "bad level parameters");
    require(binom(n, k) <= 64, ErrorCode::out_of_range,
            "level C(" + std::to_string(n) + "," + std::to_string(k) + ") has more than 64 sets");
    for_each_subset_of_size(SetWord::prefix(n), k, [&](SetWord s) { sets_.push_back(s); });
    if (n <= 16) {
        index_.assign(std::size_t{1} << n, -1);
        for (int i = 0; i < count(); ++i)
            index_[sets_[static_cast<std::size_t>(i)].bits()] = i;
    }
    containing_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < count(); ++i)
        sets_[static_cast<std::size_t>(i)].for_each(
            [&](int e) { containing_[static_cast<std::size_t>(e)] |= LevelMask{1} << i; });
    if (k >= 1 && binom(n, k - 1) <= 64) {
        lower_.emplace_back(n, k - 1);
        const Level &low = lower_.front();
        shadow_of_.resize(sets_.size());
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            LevelMask m = 0;
            sets_[i].for_each([&](int e) { m |= LevelMask{1} << low.index_of(sets_[i].without(e)); });
            shadow_of_[i] = m;
        }
    }
}

int Level::index_of(SetWord s) const
{
    if (!index_.empty())
        return s.bits() < index_.size() ? index_[s.bits()] : -1;
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
    return (it != sets_.end() && *it == s) ? static_cast<int>(it - sets_.begin()) : -1;
}

LevelMask Level::mask_of(const Family &f) const
{
    require(f.ground_size() == n_, ErrorCode::invalid_argument, "family ground size does not match the level");
    LevelMask m = 0;
    for (SetWord s : f) {
        const int i = index_of(s);
        require(i >= 0, ErrorCode::invalid_argument, "member " + to_brace_string(s) + " is not in the level");
        m |= LevelMask{1} << i;
    }
    return m;
}

Family Level::to_family(LevelMask mask) const
{
    std::vector<SetWord> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (LevelMask w = mask; w != 0; w &= w - 1)
        out.push_back(sets_[static_cast<std::size_t>(std::countr_zero(w))]);
    return Family(n_, std::move(out), k_);
}

LevelMask Level::shadow_mask(LevelMask family) const
{
    require(!lower_.empty(), ErrorCode::out_of_range, "lower level too large for mask shadows");
    LevelMask m = 0;
    for (LevelMask w = family; w != 0; w &= w - 1)
        m |= shadow_of_[static_cast<std::size_t>(std::countr_zero(w))];
    return m;
}

const Level &Level::lower() const
{
    require(!lower_.empty(), ErrorCode::out_of_range, "lower level unavailable");
    return lower_.front();
}

} // namespace shadowlab
