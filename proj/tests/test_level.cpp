#include <doctest.h>

#include <bit>

#include "oracle.hpp"
#include "shadowlab/error.hpp"
#include "shadowlab/level.hpp"

using namespace shadowlab;

TEST_CASE("level indexing follows colex order")
{
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            if (oracle::pascal(n, k) > 64)
                continue;
            const Level lvl(n, k);
            auto expected = oracle::level(n, k);
            REQUIRE(lvl.count() == static_cast<int>(expected.size()));
            for (int i = 0; i < lvl.count(); ++i) {
                CHECK(lvl.set(i).bits() == expected[static_cast<std::size_t>(i)]);
                CHECK(lvl.index_of(lvl.set(i)) == i);
            }
            if (k < n)
                CHECK(lvl.index_of(SetWord::prefix(k + 1)) == -1);
        }
}

TEST_CASE("level masks round trip and colex segments are low bits")
{
    const Level lvl(6, 3);
    CHECK(lvl.full() == (LevelMask{1} << 20) - 1);
    for (LevelMask m : {LevelMask{0}, LevelMask{0b1011}, LevelMask{0xF0F0F}, lvl.full()}) {
        const Family f = lvl.to_family(m);
        CHECK(f.uniformity() == 3);
        CHECK(lvl.mask_of(f) == m);
    }
    // The first t sets in colex are exactly the low t bits.
    auto ws = oracle::level(6, 3);
    std::sort(ws.begin(), ws.end(), oracle::colex_less);
    for (int t = 0; t <= 20; ++t) {
        oracle::Words seg(ws.begin(), ws.begin() + t);
        CHECK(lvl.mask_of(oracle::family(6, seg)) == (t == 0 ? 0 : (LevelMask{1} << t) - 1));
    }
}

TEST_CASE("containing masks and shadow masks agree with brute force")
{
    const Level lvl(6, 3);
    for (int e = 1; e <= 6; ++e)
        CHECK(std::popcount(lvl.containing(e)) == oracle::pascal(5, 2));

    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const LevelMask m = rng() & lvl.full();
        const Family f = lvl.to_family(m);
        const auto sh = oracle::shadow(oracle::words_of(f), 2);
        const LevelMask sm = lvl.shadow_mask(m);
        CHECK(static_cast<std::size_t>(std::popcount(sm)) == sh.size());
        const Family back = lvl.lower().to_family(sm);
        CHECK(oracle::words_of(back) == oracle::Words(sh.begin(), sh.end()));
    }
}

TEST_CASE("levels larger than a word are rejected")
{
    CHECK_THROWS_AS(Level(8, 4), Error);
    CHECK_NOTHROW(Level(7, 2));
}
