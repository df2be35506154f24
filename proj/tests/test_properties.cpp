// Randomized cross-module properties, each checked against a brute-force oracle.
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "shadowlab/binom.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/diversity.hpp"
#include "shadowlab/orders.hpp"

using namespace shadowlab;

namespace {

struct Sample {
    int n;
    int k;
    oracle::Words words;
    Family family;
};

Sample draw(std::mt19937_64 &rng, int max_n = 8)
{
    const int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 2));
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
    auto ws = oracle::random_family(rng, n, k, p);
    if (ws.empty())
        ws.push_back((oracle::Word{1} << k) - 1);
    Family f = oracle::family(n, ws);
    return {n, k, std::move(ws), std::move(f)};
}

} // namespace

TEST_CASE("shadows never beat the colex segment of the same size")
{
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 1500; ++rep) {
        const Sample s = draw(rng);
        const auto sh = oracle::shadow(s.words, s.k - 1).size();
        CHECK(immediate_shadow_size(s.family) == sh);
        const Family seg = colex_segment(s.n, static_cast<long long>(s.family.size()), s.k);
        CHECK(immediate_shadow_size(seg) <= sh);
        CHECK(kk_bound(static_cast<double>(s.family.size()), s.k) <= static_cast<double>(sh) + 1e-9);
        // Shadows of colex segments are colex segments.
        CHECK(is_colex_segment(shadow(seg, s.k - 1)));
    }
}

TEST_CASE("shifting preserves size and intersection properties and shrinks shadows")
{
    std::mt19937_64 rng(202);
    for (int rep = 0; rep < 800; ++rep) {
        const Sample s = draw(rng, 7);
        const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(s.n));
        int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(s.n));
        if (j == i)
            j = (i % s.n) + 1;
        const Family g = shift_ij(s.family, std::min(i, j), std::max(i, j));
        const auto gw = oracle::words_of(g);
        CHECK(g.size() == s.family.size());
        CHECK(oracle::shadow(gw, s.k - 1).size() <= oracle::shadow(s.words, s.k - 1).size());
        CHECK(oracle::matching(gw) <= oracle::matching(s.words));
        for (int t = 1; t <= 2; ++t)
            if (oracle::r_wise(s.words, 2, t))
                CHECK(oracle::r_wise(gw, 2, t));
    }
}

TEST_CASE("gamma plus max degree is the size; complements and traces")
{
    std::mt19937_64 rng(303);
    for (int rep = 0; rep < 1000; ++rep) {
        const Sample s = draw(rng);
        CHECK(diversity(s.family).value + max_degree(s.family).count == s.family.size());
        CHECK(complement_family(complement_family(s.family)) == s.family);
        CHECK(kk_diversity(s.family, s.n).value == 0);
        // Traces partition the family by intersection pattern with X cup Y.
        const int e = 1 + static_cast<int>(rng() % static_cast<unsigned>(s.n));
        const SetWord x = SetWord::singleton(e);
        CHECK(trace(s.family, x, SetWord()).size() + trace(s.family, SetWord(), x).size() == s.family.size());
    }
}

TEST_CASE("cross-intersecting pairs stay cross-intersecting as lex segments")
{
    std::mt19937_64 rng(404);
    int tested = 0;
    for (int rep = 0; rep < 4000 && tested < 300; ++rep) {
        const int n = 5 + static_cast<int>(rng() % 3);
        const int a = 2 + static_cast<int>(rng() % 2), b = 2 + static_cast<int>(rng() % 2);
        if (a + b > n)
            continue;
        const auto wa = oracle::random_family(rng, n, a, 0.15);
        const auto wb = oracle::random_family(rng, n, b, 0.15);
        if (wa.empty() || wb.empty() || !oracle::cross_t(wa, wb, 1))
            continue;
        ++tested;
        const Family la = lex_segment(n, static_cast<long long>(wa.size()), a);
        const Family lb = lex_segment(n, static_cast<long long>(wb.size()), b);
        CHECK(oracle::cross_t(oracle::words_of(la), oracle::words_of(lb), 1));
    }
    CHECK(tested > 50);
}

TEST_CASE("maximum influence of the Kalai family decreases with n")
{
    double prev = 2.0;
    for (int n = 3; n <= 13; n += 2) {
        const auto inf = influences(kalai_circle(n));
        const double mx = *std::max_element(inf.begin(), inf.end());
        if (n == 3)
            CHECK(mx == doctest::Approx(0.5));
        CHECK(mx <= prev + 1e-12);
        // Rotation invariance makes all influences equal.
        for (double v : inf)
            CHECK(v == doctest::Approx(mx));
        prev = mx;
    }
}
