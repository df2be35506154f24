#ifndef SHADOWLAB_SET_WORD_HPP
#define SHADOWLAB_SET_WORD_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <vector>

namespace shadowlab {

/// Largest supported ground set.
inline constexpr int max_ground_size = 64;

/**
 * A subset of the ground set [N], N <= 64, packed into one machine word.
 *
 * Element e (1-based) lives in bit e-1. With that layout the numeric order of
 * two words of equal cardinality is exactly their colex order, so sorted
 * member lists are colex-sorted for free.
 */
class SetWord {
public:
    constexpr SetWord() = default;
    constexpr explicit SetWord(std::uint64_t bits) : bits_(bits) {}

    static constexpr SetWord singleton(int e) { return SetWord(std::uint64_t{1} << (e - 1)); }

    /// [lo, hi]; empty when hi < lo.
    static constexpr SetWord interval(int lo, int hi)
    {
        if (hi < lo)
            return SetWord();
        return SetWord(prefix(hi).bits_ & ~prefix(lo - 1).bits_);
    }

    /// [1, m].
    static constexpr SetWord prefix(int m)
    {
        if (m <= 0)
            return SetWord();
        if (m >= 64)
            return SetWord(~std::uint64_t{0});
        return SetWord((std::uint64_t{1} << m) - 1);
    }

    static SetWord of(std::initializer_list<int> elements)
    {
        SetWord s;
        for (int e : elements)
            s.bits_ |= std::uint64_t{1} << (e - 1);
        return s;
    }

    static SetWord of(std::span<const int> elements)
    {
        SetWord s;
        for (int e : elements)
            s.bits_ |= std::uint64_t{1} << (e - 1);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int cardinality() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int e) const { return (bits_ >> (e - 1)) & 1U; }
    constexpr bool subset_of(SetWord other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(SetWord other) const { return (bits_ & other.bits_) == 0; }

    /// Smallest element, 0 for the empty set.
    constexpr int min_element() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
    /// Largest element, 0 for the empty set.
    constexpr int max_element() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

    constexpr SetWord with(int e) const { return SetWord(bits_ | (std::uint64_t{1} << (e - 1))); }
    constexpr SetWord without(int e) const { return SetWord(bits_ & ~(std::uint64_t{1} << (e - 1))); }

    std::vector<int> elements() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(cardinality()));
        for_each([&](int e) { out.push_back(e); });
        return out;
    }

    template <class Fn>
    constexpr void for_each(Fn &&fn) const
    {
        for (std::uint64_t w = bits_; w != 0; w &= w - 1)
            fn(std::countr_zero(w) + 1);
    }

    constexpr SetWord operator&(SetWord o) const { return SetWord(bits_ & o.bits_); }
    constexpr SetWord operator|(SetWord o) const { return SetWord(bits_ | o.bits_); }
    constexpr SetWord operator^(SetWord o) const { return SetWord(bits_ ^ o.bits_); }
    /// Set difference.
    constexpr SetWord operator-(SetWord o) const { return SetWord(bits_ & ~o.bits_); }

    constexpr bool operator==(const SetWord &) const = default;
    constexpr std::strong_ordering operator<=>(const SetWord &) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Next word with the same popcount (Gosper's hack). Undefined for 0.
constexpr std::uint64_t next_same_popcount(std::uint64_t v)
{
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

/**
 * Calls fn(SetWord) for every k-subset of `within`, in colex order.
 * fn may return bool; returning false stops the walk.
 */
template <class Fn>
void for_each_subset_of_size(SetWord within, int k, Fn &&fn)
{
    const int m = within.cardinality();
    if (k < 0 || k > m)
        return;
    // Walk k-subsets of [m] and scatter them through the positions of `within`.
    std::uint64_t positions[64];
    int idx = 0;
    within.for_each([&](int e) { positions[idx++] = std::uint64_t{1} << (e - 1); });
    auto scatter = [&](std::uint64_t compact) {
        std::uint64_t out = 0;
        for (std::uint64_t w = compact; w != 0; w &= w - 1)
            out |= positions[std::countr_zero(w)];
        return SetWord(out);
    };
    auto call = [&](SetWord s) {
        if constexpr (std::is_same_v<decltype(fn(s)), bool>)
            return fn(s);
        else {
            fn(s);
            return true;
        }
    };
    if (k == 0) {
        call(SetWord());
        return;
    }
    const std::uint64_t last = (k == 64) ? ~std::uint64_t{0} : (((std::uint64_t{1} << k) - 1) << (m - k));
    for (std::uint64_t c = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;; c = next_same_popcount(c)) {
        if (!call(scatter(c)))
            return;
        if (c == last)
            return;
    }
}

} // namespace shadowlab

#endif
