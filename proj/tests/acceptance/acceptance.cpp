// Acceptance suite: one PASS/FAIL line per criterion. Each criterion runs the
// verification engine and, where feasible, an independent brute-force check.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../oracle.hpp"
#include "shadowlab/binom.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/diversity.hpp"
#include "shadowlab/error.hpp"
#include "shadowlab/orders.hpp"
#include "shadowlab/verifier.hpp"

using namespace shadowlab;

namespace {

struct Result {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string &what)
    {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
        }
    }
    void note(const std::string &what) { detail += (detail.empty() ? "" : "; ") + what; }
};

Report run(const std::string &claim, const std::string &space, std::size_t witness_limit = 32)
{
    VerifyOptions o;
    o.witness_limit = witness_limit;
    return verify(claim, InstanceSpace::parse(space), o);
}

void expect_clean(Result &r, const Report &rep)
{
    r.expect(rep.passed(), rep.claim + " on " + rep.space + " has " + std::to_string(rep.counterexamples.size()) +
                               " counterexample(s)" +
                               (rep.counterexamples.empty() ? "" : ": " + rep.counterexamples.front().detail));
    r.expect(!rep.exploratory, rep.space + " was labelled exploratory");
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---- 1 -----------------------------------------------------------------------

Result kruskal_katona()
{
    Result r;
    const Report rep = run("kruskal-katona", "all-families:n=6,k=3");
    expect_clean(r, rep);
    r.expect(rep.checked + rep.skipped == (1u << 20), "expected 2^20 families, saw " + std::to_string(rep.checked + rep.skipped));
    // Independent oracle on a seeded slice: brute-force shadow vs the colex segment.
    std::mt19937_64 rng(1);
    for (int rep_i = 0; rep_i < 2000; ++rep_i) {
        const auto ws = oracle::random_family(rng, 6, 3, 0.5);
        const auto sh = oracle::shadow(ws, 2).size();
        auto lvl = oracle::level(6, 3);
        std::sort(lvl.begin(), lvl.end(), oracle::colex_less);
        const oracle::Words seg(lvl.begin(), lvl.begin() + static_cast<long>(ws.size()));
        const auto seg_sh = oracle::shadow(seg, 2).size();
        if (sh < seg_sh || (ws.size() > 0 && static_cast<double>(seg_sh) < kk_bound(static_cast<double>(ws.size()), 3) - 1e-9)) {
            r.expect(false, "oracle slice");
            break;
        }
    }
    r.note(std::to_string(rep.checked) + " families, " + std::to_string(rep.equality_count) + " tight");
    return r;
}

// ---- 2 -----------------------------------------------------------------------

Result compression()
{
    Result r;
    const Report small = run("colex-compression-shadow", "all-families:n=5,k=2");
    const Report rnd = run("colex-compression-shadow", "random-sample:n=7,k=3,count=100000,seed=1");
    expect_clean(r, small);
    expect_clean(r, rnd);
    r.expect(small.checked + small.skipped == 1024, "all 1024 subfamilies of C([5],2)");
    r.expect(rnd.checked + rnd.skipped == 100000, "100000 random families");
    // Oracle: recompute every shadow along a few traces by brute force.
    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; ++i) {
        const auto ws = oracle::random_family(rng, 7, 3, 0.3);
        if (ws.empty())
            continue;
        Family f = oracle::family(7, ws);
        const CompressResult c = compress_to_colex(f);
        std::size_t prev = oracle::shadow(ws, 2).size();
        for (const ShiftStep &s : c.trace.steps) {
            f = daykin_shift(f, s.u, s.v);
            const std::size_t cur = oracle::shadow(oracle::words_of(f), 2).size();
            if (cur > prev) {
                r.expect(false, "oracle trace");
                return r;
            }
            prev = cur;
        }
        r.expect(f == colex_segment(7, static_cast<long long>(ws.size()), 3), "trace ends at colex segment");
    }
    r.note(std::to_string(small.checked + rnd.checked) + " traces");
    return r;
}

// ---- 3 -----------------------------------------------------------------------

Result correlation()
{
    Result r;
    for (auto [n, k] : {std::pair{5, 2}, std::pair{6, 3}}) {
        const std::string space =
            "all-shifted-families:n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",pairs=1";
        const Report rep = run("shifted-correlation", space, 1000000);
        expect_clean(r, rep);
        const Family full = full_level(n, k);
        // Every pair with the full level is tight: |F cap L| C(n,k) = |F| C(n,k).
        std::size_t with_full = 0, shifted_count = 0;
        enumerate(InstanceSpace::parse("all-shifted-families:n=" + std::to_string(n) + ",k=" + std::to_string(k)),
                  [&](InstanceKey, const Instance &) { ++shifted_count; });
        for (const auto &w : rep.equality_witnesses)
            with_full += w.instance.families[0] == full;
        r.expect(with_full == shifted_count, "(full level, F) witnesses at n=" + std::to_string(n) + ": " +
                                                 std::to_string(with_full) + " of " + std::to_string(shifted_count));
        // Oracle: exact integer recount of each inequality.
        std::vector<oracle::Words> fams;
        enumerate(InstanceSpace::parse("all-shifted-families:n=" + std::to_string(n) + ",k=" + std::to_string(k)),
                  [&](InstanceKey, const Instance &inst) { fams.push_back(oracle::words_of(inst.families[0])); });
        const long long c = oracle::pascal(n, k);
        for (const auto &a : fams)
            for (const auto &b : fams) {
                std::set<oracle::Word> sa(a.begin(), a.end());
                long long common = 0;
                for (auto w : b)
                    common += sa.count(w);
                if (common * c < static_cast<long long>(a.size() * b.size())) {
                    r.expect(false, "oracle pair");
                    return r;
                }
            }
        r.note("(" + std::to_string(n) + "," + std::to_string(k) + "): " + std::to_string(rep.checked) + " pairs, " +
               std::to_string(rep.equality_count) + " tight");
    }
    return r;
}

// ---- 4 -----------------------------------------------------------------------

Result cross_stability_sharpness()
{
    Result r;
    const Report grid = run("cross-stability", "constructions-grid:a=3..4,b=3..4,n=6..10,u=3..4,v=3..4", 1000);
    expect_clean(r, grid);
    int points = 0;
    for (int a = 3; a <= 4; ++a)
        for (int b = 3; b <= 4; ++b)
            for (int n = a + b; n <= 10; ++n)
                for (int u = 3; u <= a; ++u)
                    for (int v = 3; v <= b; ++v) {
                        ++points;
                        const Family fa = l_uv(n, a, u, v), fb = l_uv(n, b, v, u);
                        const BoundParams p{{"n", n}, {"a", a}, {"b", b}, {"u", u}, {"v", v}};
                        const auto sa = *evaluate_bound(BoundName::cross_size_a, p).exact;
                        const auto sb = *evaluate_bound(BoundName::cross_size_b, p).exact;
                        const std::string at = "(n,a,b,u,v)=(" + std::to_string(n) + "," + std::to_string(a) + "," +
                                               std::to_string(b) + "," + std::to_string(u) + "," + std::to_string(v) + ")";
                        r.expect(oracle::cross_t(oracle::words_of(fa), oracle::words_of(fb), 1), at + " cross-intersecting");
                        r.expect(static_cast<BigInt>(fa.size()) == sa && static_cast<BigInt>(fb.size()) == sb,
                                 at + " sizes meet thresholds");
                        r.expect(static_cast<long long>(oracle::gamma(oracle::words_of(fa), n)) ==
                                     oracle::pascal(n - u - 1, n - a - 1),
                                 at + " gamma(A)");
                    }
    r.expect(grid.checked == static_cast<std::uint64_t>(points),
             "grid covered " + std::to_string(grid.checked) + " of " + std::to_string(points) + " points");
    r.expect(grid.equality_count == grid.checked, "every grid point is sharp");
    // The L_{2,2} boundary pair breaks the diversity conclusion and must be recorded.
    const Report pruned = verify_cross_pair_space(6, 3, 3, 3, 3);
    r.expect(pruned.passed(), "pruned exhaustive search at n=6, a=b=3");
    bool boundary = false;
    for (const auto &b : pruned.expected_boundary)
        boundary |= b.find("L_{2,2}") != std::string::npos;
    r.expect(boundary, "L_{2,2} expected-boundary record");
    const Family l22 = l_uv(6, 3, 2, 2);
    r.expect(diversity(l22).value >= static_cast<std::size_t>(oracle::pascal(2, 2)), "L_{2,2} diversity at the limit");
    r.note(std::to_string(points) + " grid points sharp; " +
           (pruned.expected_boundary.empty() ? std::string("no boundary record") : pruned.expected_boundary.front()));
    return r;
}

// ---- 5 -----------------------------------------------------------------------

Result kk_stability_sharpness()
{
    Result r;
    const Report grid = run("kk-stability", "constructions-grid:n=4..9,k=1..4,x=0..6,y=0..6", 1000);
    expect_clean(r, grid);
    r.expect(grid.equality_count == grid.checked && grid.checked > 0, "every grid point is sharp");
    int points = 0;
    for (int n = 4; n <= 9; ++n)
        for (int k = 1; k <= 4 && k < n; ++k)
            for (int x = k - 1; x <= n - 3; ++x)
                for (int y = n - k; y <= n - 3; ++y) {
                    ++points;
                    const Family f = kk_xy(n, k, x, y);
                    const auto ws = oracle::words_of(f);
                    const BoundParams p{{"n", n}, {"k", k}, {"x", x}, {"y", y}};
                    const std::string at = "(n,k,x,y)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                           std::to_string(x) + "," + std::to_string(y) + ")";
                    r.expect(static_cast<BigInt>(f.size()) == *evaluate_bound(BoundName::kk_stability_size, p).exact,
                             at + " size");
                    r.expect(static_cast<long long>(oracle::kk_gamma(ws, n + 1, n)) == oracle::pascal(x, k - 1),
                             at + " gamma_KK");
                    r.expect(static_cast<BigInt>(oracle::shadow(ws, k - 1).size()) ==
                                 *evaluate_bound(BoundName::kk_stability, p).exact,
                             at + " shadow");
                }
    r.expect(grid.checked == static_cast<std::uint64_t>(points), "grid covered every point");
    const Family ex = kk_xy(6, 3, 2, 3);
    r.expect(ex.size() == 20 && immediate_shadow_size(ex) == 17, "KK_{2,3}(6,3): 20 members, shadow 17");
    r.note(std::to_string(points) + " grid points sharp");
    return r;
}

// ---- 6 -----------------------------------------------------------------------

Result rwise_sharpness()
{
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    const Family f = rwise_example(61, 4, 3, 1);
    const std::size_t g = diversity(f).value;
    const bool three_wise = is_r_wise_t_intersecting(f, 3, 1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.expect(g == 57, "gamma = " + std::to_string(g));
    r.expect(static_cast<BigInt>(g) == *evaluate_bound(BoundName::rwise_gamma, {{"n", 61}, {"k", 4}, {"r", 3}, {"t", 1}}).exact,
             "gamma equals the bound");
    r.expect(three_wise, "3-wise intersecting");
    r.expect(secs <= 1.0, "runtime " + fmt(secs) + " s");
    const auto ws = oracle::words_of(f);
    r.expect(oracle::gamma(ws, 61) == 57 && oracle::r_wise(ws, 3, 1), "oracle agrees");
    const Report grid = run("rwise-diversity", "constructions-grid:n=61,k=4,r=3,t=1");
    expect_clean(r, grid);
    r.note(std::to_string(f.size()) + " members, gamma 57, " + fmt(secs) + " s");
    return r;
}

// ---- 7 -----------------------------------------------------------------------

Result graphs()
{
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    const Report rep = run("graph-s-diversity", "all-graphs:n=2..7", 64);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect_clean(r, rep);
    // Labelled graphs without isolated vertices on 2..7 vertices.
    r.expect(rep.checked == 1 + 4 + 41 + 768 + 27449 + 1887284, "checked " + std::to_string(rep.checked));
    r.expect(rep.equality_count == 3, "equality exactly at K3, K5, K7");
    for (const auto &w : rep.equality_witnesses) {
        const Family &g = w.instance.families[0];
        r.expect(g.size() == static_cast<std::size_t>(oracle::pascal(g.ground_size(), 2)) && g.ground_size() % 2 == 1,
                 "equality witness is complete on an odd number of vertices");
    }
    r.expect(secs <= 300.0, "runtime " + fmt(secs) + " s");
    r.note(std::to_string(rep.checked) + " graphs, " + fmt(secs) + " s");
    return r;
}

// ---- 8 -----------------------------------------------------------------------

Result real_binomials()
{
    Result r;
    const double x = inv_gbinom(4, 2), closed = (1 + std::sqrt(33.0)) / 2;
    r.expect(std::abs(x - closed) <= 1e-9, "inv_gbinom(4,2) = " + fmt(x));
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> un(1, 60);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const int n = un(rng);
        const int k = std::uniform_int_distribution<int>(1, n)(rng);
        if (binom(n, k) != binom(n - 1, k) + binom(n - 1, k - 1))
            ++bad;
        const double lhs = gbinom(n, k), rhs = gbinom(n - 1, k) + gbinom(n - 1, k - 1);
        if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, lhs))
            ++bad;
        if (n <= 40 && static_cast<long long>(binom(n, k)) != oracle::pascal(n, k))
            ++bad;
    }
    r.expect(bad == 0, std::to_string(bad) + " Pascal identity failures");
    int grid = 0;
    for (int m = 3; m <= 20; ++m)
        for (int s = 2; s <= 8; ++s)
            for (int t = 2; t <= 8; ++t) {
                if (m < s + t - 1)
                    continue;
                ++grid;
                r.expect(fgh_f_exact(m - 2, m, t, s) == fgh_f_exact(m - 3, m, t, s),
                         "f(m-2) = f(m-3) at m=" + std::to_string(m) + ",s=" + std::to_string(s) + ",t=" + std::to_string(t));
            }
    const Report rep = run("fgh-analytics", "constructions-grid:m=3..20,s=2..8,t=2..8");
    expect_clean(r, rep);
    r.note("inv_gbinom(4,2) = " + fmt(x) + "; 10^4 Pascal points; " + std::to_string(grid) + " exact endpoint identities");
    return r;
}

// ---- 9 -----------------------------------------------------------------------

Result kalai()
{
    Result r;
    double prev = 2.0, fitted = 0.0;
    std::string seq;
    for (int n = 3; n <= 15; n += 2) {
        const Family f = kalai_circle(n);
        const std::string at = "n=" + std::to_string(n);
        r.expect(f.size() == (std::size_t{1} << (n - 1)), at + " size");
        r.expect(is_intersecting(f), at + " intersecting");
        r.expect(is_up_closed(f), at + " up-closed");
        bool anti = true;
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
            anti = anti && (f.contains(SetWord(w)) != f.contains(SetWord::prefix(n) - SetWord(w)));
        r.expect(anti, at + " complement-antisymmetric");
        double mx = 0;
        for (int i = 1; i <= n; ++i)
            mx = std::max(mx, influence(f, i));
        if (n == 3)
            r.expect(mx == 0.5, "max influence at n=3 is exactly 1/2");
        r.expect(mx <= prev, at + " max influence increased");
        prev = mx;
        const double scaled = mx * n / std::log(static_cast<double>(n));
        if (n >= 5)
            fitted = std::max(fitted, scaled);
        seq += (seq.empty() ? "" : ",") + fmt(mx);
    }
    const Report rep = run("influence-diversity", "constructions-grid:n=3..15");
    expect_clean(r, rep);
    r.note("max influence " + seq + "; fitted C = " + fmt(fitted) + " (exploratory trend)");
    return r;
}

// ---- 10 ----------------------------------------------------------------------

Result katona()
{
    Result r;
    const Report grid = run("katona-t-intersecting", "constructions-grid:n=1..12,t=1..4");
    expect_clean(r, grid);
    r.expect(grid.equality_count == grid.checked && grid.checked > 0, "Katona families meet the bound");
    for (int n = 1; n <= 12; ++n)
        for (int t = 1; t <= 4; ++t) {
            const Family f = katona_family(n, t);
            r.expect(oracle::r_wise(oracle::words_of(f), 2, t), "oracle t-intersection n=" + std::to_string(n));
        }
    for (int n : {4, 5}) {
        const std::string space = "all-up-sets:n=" + std::to_string(n) + ",t=2";
        const Report rep = run("katona-t-intersecting", space, 100000);
        expect_clean(r, rep);
        // Oracle: the largest 2-intersecting up-set, found by full enumeration.
        std::size_t best = 0;
        bool katona_max = false;
        enumerate(InstanceSpace::parse("all-up-sets:n=" + std::to_string(n)), [&](InstanceKey, const Instance &inst) {
            const auto ws = oracle::words_of(inst.families[0]);
            if (oracle::r_wise(ws, 2, 2))
                best = std::max(best, ws.size());
        });
        const Family kf = katona_family(n, 2);
        for (const auto &w : rep.equality_witnesses)
            katona_max |= w.instance.families[0] == kf;
        r.expect(static_cast<BigInt>(best) == katona_bound(n, 2), "oracle maximum at n=" + std::to_string(n));
        r.expect(katona_max, "Katona family among the maximal up-sets at n=" + std::to_string(n));
        r.note("n=" + std::to_string(n) + ": max 2-intersecting up-set " + std::to_string(best));
    }
    return r;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<Result()>>> criteria = {
        {"kruskal-katona exhaustive over C([6],3)", kruskal_katona},
        {"colex compression never grows the shadow", compression},
        {"shifted correlation in exact integers", correlation},
        {"cross-intersecting stability sharpness", cross_stability_sharpness},
        {"shadow stability sharpness", kk_stability_sharpness},
        {"r-wise intersecting sharpness", rwise_sharpness},
        {"graph s-diversity exhaustive", graphs},
        {"real binomial oracle", real_binomials},
        {"Kalai circle family", kalai},
        {"Katona families", katona},
    };
    int failed = 0;
    int index = 0;
    for (const auto &[name, fn] : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Result res;
        try {
            res = fn();
        } catch (const std::exception &e) {
            res.ok = false;
            res.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !res.ok;
        std::printf("%s %2d %s (%.1f s): %s\n", res.ok ? "PASS" : "FAIL", index, name, secs, res.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
