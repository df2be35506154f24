// Brute-force reference implementations used to cross-check the library.
// Deliberately naive: explicit loops over words, no shared code with src/.
#ifndef SHADOWLAB_TEST_ORACLE_HPP
#define SHADOWLAB_TEST_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "shadowlab/family.hpp"

namespace oracle {

using Word = std::uint64_t;
using Words = std::vector<Word>;

inline Words words_of(const shadowlab::Family &f)
{
    Words out;
    for (auto s : f)
        out.push_back(s.bits());
    return out;
}

inline shadowlab::Family family(int n, const Words &ws)
{
    std::vector<shadowlab::SetWord> m;
    for (Word w : ws)
        m.emplace_back(w);
    return shadowlab::Family(n, std::move(m));
}

inline Word set(std::initializer_list<int> elems)
{
    Word w = 0;
    for (int e : elems)
        w |= Word{1} << (e - 1);
    return w;
}

// Pascal's triangle, independent of binom().
inline long long pascal(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::vector<std::vector<long long>> t(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        t[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t[n][k];
}

inline Words level(int n, int k)
{
    Words out;
    for (Word w = 0; w < (Word{1} << n); ++w)
        if (std::popcount(w) == k)
            out.push_back(w);
    return out;
}

inline std::set<Word> shadow(const Words &f, int l)
{
    std::set<Word> out;
    for (Word m : f)
        for (Word sub = m;; sub = (sub - 1) & m) {
            if (std::popcount(sub) == l)
                out.insert(sub);
            if (sub == 0)
                break;
        }
    return out;
}

inline std::size_t degree(const Words &f, int e)
{
    return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [&](Word w) { return (w >> (e - 1)) & 1; }));
}

inline std::size_t gamma(const Words &f, int n)
{
    std::size_t best = f.size();
    for (int e = 1; e <= n; ++e)
        best = std::min(best, f.size() - degree(f, e));
    return best;
}

inline std::size_t s_gamma(const Words &f, int n, int s)
{
    std::size_t best = SIZE_MAX;
    for (Word r : level(n, s)) {
        const auto c = static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [&](Word w) { return (w & r) == 0; }));
        best = std::min(best, c);
    }
    return best;
}

inline std::size_t kk_gamma(const Words &f, int ground, int n)
{
    std::size_t best = SIZE_MAX;
    for (Word x : level(ground, n)) {
        const auto c = static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [&](Word w) { return (w & ~x) != 0; }));
        best = std::min(best, c);
    }
    return best;
}

inline int matching(const Words &f, std::size_t from = 0, Word used = 0)
{
    int best = 0;
    for (std::size_t i = from; i < f.size(); ++i)
        if ((f[i] & used) == 0)
            best = std::max(best, 1 + matching(f, i + 1, used | f[i]));
    return best;
}

// Colex: A < B iff the largest element of the symmetric difference lies in B.
inline bool colex_less(Word a, Word b)
{
    const Word d = a ^ b;
    return d != 0 && (b & (Word{1} << (63 - std::countl_zero(d))));
}

// Lex: A < B iff the smallest element of the symmetric difference lies in A.
inline bool lex_less(Word a, Word b)
{
    const Word d = a ^ b;
    return d != 0 && (a & (d & (~d + 1)));
}

inline bool cross_t(const Words &a, const Words &b, int t)
{
    for (Word x : a)
        for (Word y : b)
            if (std::popcount(x & y) < t)
                return false;
    return true;
}

inline bool r_wise(const Words &f, int r, int t, std::size_t from = 0, Word acc = ~Word{0}, int depth = 0)
{
    // Tuples with repetition: iterate indices non-decreasing.
    if (depth == r)
        return std::popcount(acc) >= t;
    for (std::size_t i = from; i < f.size(); ++i)
        if (!r_wise(f, r, t, i, acc & f[i], depth + 1))
            return false;
    return true;
}

inline Words random_family(std::mt19937_64 &rng, int n, int k, double p)
{
    std::bernoulli_distribution coin(p);
    Words out;
    for (Word w : (k < 0 ? [&] {
             Words all;
             for (Word x = 0; x < (Word{1} << n); ++x)
                 all.push_back(x);
             return all;
         }()
                         : level(n, k)))
        if (coin(rng))
            out.push_back(w);
    return out;
}

inline Word relabel(Word w, const std::vector<int> &perm)
{
    Word out = 0;
    for (int e = 1; e <= static_cast<int>(perm.size()); ++e)
        if ((w >> (e - 1)) & 1)
            out |= Word{1} << (perm[static_cast<std::size_t>(e - 1)] - 1);
    return out;
}

// min over permutations of the members outside the first t sets of C([n],k) in colex.
inline std::size_t colex_gamma(const Words &f, int n, int k, long long t)
{
    Words lvl = level(n, k);
    std::sort(lvl.begin(), lvl.end(), colex_less);
    std::set<Word> seg(lvl.begin(), lvl.begin() + t);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::size_t best = SIZE_MAX;
    do {
        std::size_t c = 0;
        for (Word w : f)
            c += !seg.count(relabel(w, perm));
        best = std::min(best, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace oracle

#endif
