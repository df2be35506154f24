#include "shadowlab/constructions.hpp"

#include <algorithm>
#include <functional>

#include "shadowlab/error.hpp"
#include "shadowlab/orders.hpp"

namespace shadowlab {

namespace {

struct ConstructionEntry {
    ConstructionName name;
    std::string_view text;
};

constexpr ConstructionEntry construction_table[] = {
    {ConstructionName::star, "star"},
    {ConstructionName::full_level, "full_level"},
    {ConstructionName::L_uv, "L_uv"},
    {ConstructionName::KK_xy, "KK_xy"},
    {ConstructionName::A2, "A2"},
    {ConstructionName::rwise_example, "rwise_example"},
    {ConstructionName::katona_t, "katona_t"},
    {ConstructionName::kalai_circle, "kalai_circle"},
    {ConstructionName::lex_seg, "lex_seg"},
    {ConstructionName::colex_seg, "colex_seg"},
};

/// Largest ground set for families drawn from all of 2^[n].
constexpr int max_power_set_n = 24;

void check(bool ok, const std::string &what) { require(ok, ErrorCode::invalid_argument, what); }

void check_ground(int n) { check(n >= 1 && n <= max_ground_size, "n must lie in [1, 64]"); }

void check_level(int n, int k)
{
    check_ground(n);
    check(k >= 0 && k <= n, "k must lie in [0, n]");
}

Family level_where(int n, int k, const std::function<bool(SetWord)> &keep)
{
    std::vector<SetWord> out;
    for_each_subset_of_size(SetWord::prefix(n), k, [&](SetWord s) {
        if (keep(s))
            out.push_back(s);
    });
    return Family(n, std::move(out), k);
}

Family power_set_where(int n, const std::function<bool(SetWord)> &keep)
{
    check(n >= 1 && n <= max_power_set_n, "families over all of 2^[n] need 1 <= n <= 24");
    std::vector<SetWord> out;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t w = 0; w < end; ++w)
        if (keep(SetWord(w)))
            out.push_back(SetWord(w));
    return Family(n, std::move(out));
}

long long param(const ConstructionSpec &spec, const char *key)
{
    auto it = spec.params.find(key);
    require(it != spec.params.end(), ErrorCode::invalid_argument,
            std::string(to_string(spec.name)) + " needs parameter --" + key);
    return it->second;
}

std::optional<int> optional_param(const ConstructionSpec &spec, const char *key)
{
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        return std::nullopt;
    return static_cast<int>(it->second);
}

/// Run lengths around the circle, longest first.
std::vector<int> cyclic_runs(int n, SetWord s, bool ones)
{
    const SetWord target = ones ? s : SetWord::prefix(n) - s;
    if (target.empty())
        return {};
    if (target.cardinality() == n)
        return {n};
    // Start right after a position that is not in the target so no run wraps.
    int start = 1;
    while (target.contains(start))
        ++start;
    std::vector<int> runs;
    int current = 0;
    for (int step = 1; step <= n; ++step) {
        const int pos = (start - 1 + step) % n + 1;
        if (target.contains(pos))
            ++current;
        else if (current > 0) {
            runs.push_back(current);
            current = 0;
        }
    }
    if (current > 0)
        runs.push_back(current);
    std::sort(runs.rbegin(), runs.rend());
    return runs;
}

} // namespace

std::optional<ConstructionName> construction_from_string(std::string_view name)
{
    for (const auto &e : construction_table)
        if (e.text == name)
            return e.name;
    return std::nullopt;
}

std::string_view to_string(ConstructionName name)
{
    for (const auto &e : construction_table)
        if (e.name == name)
            return e.text;
    return "?";
}

std::vector<ConstructionName> all_constructions()
{
    std::vector<ConstructionName> out;
    for (const auto &e : construction_table)
        out.push_back(e.name);
    return out;
}

Family star(int n, std::optional<int> k)
{
    if (k) {
        check_level(n, *k);
        return level_where(n, *k, [](SetWord s) { return s.contains(1); });
    }
    return power_set_where(n, [](SetWord s) { return s.contains(1); });
}

Family full_level(int n, int k)
{
    check_level(n, k);
    return level_where(n, k, [](SetWord) { return true; });
}

Family l_uv(int n, int k, int u, int v)
{
    check_level(n, k);
    check(u >= 1 && v >= 1, "L_uv needs u, v >= 1");
    check(u + 1 <= n && v + 1 <= n, "L_uv needs u + 1 <= n and v + 1 <= n");
    const SetWord head_v = SetWord::interval(2, v + 1);
    const SetWord head_u = SetWord::interval(2, u + 1);
    return level_where(n, k, [&](SetWord s) { return (s.contains(1) && !s.disjoint(head_v)) || head_u.subset_of(s); });
}

Family kk_xy(int n, int k, int x, int y)
{
    check_level(n, k);
    check(k >= 1, "KK_xy needs k >= 1");
    check(n + 1 <= max_ground_size, "KK_xy needs n + 1 <= 64");
    check(x >= 0 && x <= n, "KK_xy needs 0 <= x <= n");
    check(y >= 0 && y <= n, "KK_xy needs 0 <= y <= n");
    const SetWord tail = SetWord::interval(y + 1, n);
    std::vector<SetWord> out;
    for_each_subset_of_size(SetWord::prefix(n), k, [&](SetWord s) {
        if (!tail.subset_of(s))
            out.push_back(s);
    });
    for_each_subset_of_size(SetWord::prefix(x), k - 1, [&](SetWord s) { out.push_back(s.with(n + 1)); });
    return Family(n + 1, std::move(out), k);
}

Family a2(int n, int k, int s)
{
    check_level(n, k);
    check(s >= 1 && 2 * s + 1 <= n, "A2 needs s >= 1 and 2s + 1 <= n");
    const SetWord core = SetWord::prefix(2 * s + 1);
    return level_where(n, k, [&](SetWord a) { return (a & core).cardinality() >= 2; });
}

Family rwise_example(int n, std::optional<int> k, int r, int t)
{
    check(r >= 2 && t >= 1, "rwise_example needs r >= 2 and t >= 1");
    check_ground(n);
    check(r + t <= n, "rwise_example needs r + t <= n");
    const SetWord core = SetWord::prefix(r + t);
    auto keep = [&](SetWord a) { return (a & core).cardinality() >= r + t - 1; };
    if (k) {
        check_level(n, *k);
        return level_where(n, *k, keep);
    }
    return power_set_where(n, keep);
}

Family katona_family(int n, int t)
{
    check(t >= 1, "katona_t needs t >= 1");
    if ((n + t) % 2 == 0)
        return power_set_where(n, [&](SetWord x) { return x.cardinality() >= (n + t) / 2; });
    const SetWord rest = SetWord::interval(2, n);
    return power_set_where(n, [&](SetWord x) { return (x & rest).cardinality() >= (n + t - 1) / 2; });
}

bool kalai_member(int n, SetWord s)
{
    check(n >= 3 && n <= max_ground_size, "kalai_circle needs 3 <= n <= 64");
    const auto ones = cyclic_runs(n, s, true);
    const auto zeros = cyclic_runs(n, s, false);
    const std::size_t len = std::max(ones.size(), zeros.size());
    for (std::size_t i = 0; i < len; ++i) {
        const int u = i < ones.size() ? ones[i] : 0;
        const int z = i < zeros.size() ? zeros[i] : 0;
        if (u != z)
            return u > z;
    }
    // Equal profiles (even n only): keep the smaller word of the complementary pair.
    return s < SetWord::prefix(n) - s;
}

Family kalai_circle(int n)
{
    check(n >= 3 && n <= max_power_set_n, "kalai_circle needs 3 <= n <= 24");
    return power_set_where(n, [&](SetWord s) { return kalai_member(n, s); });
}

Family build(const ConstructionSpec &spec)
{
    auto i = [&](const char *key) { return static_cast<int>(param(spec, key)); };
    switch (spec.name) {
    case ConstructionName::star:
        return star(i("n"), optional_param(spec, "k"));
    case ConstructionName::full_level:
        return full_level(i("n"), i("k"));
    case ConstructionName::L_uv:
        return l_uv(i("n"), i("k"), i("u"), i("v"));
    case ConstructionName::KK_xy:
        return kk_xy(i("n"), i("k"), i("x"), i("y"));
    case ConstructionName::A2:
        return a2(i("n"), i("k"), i("s"));
    case ConstructionName::rwise_example:
        return rwise_example(i("n"), optional_param(spec, "k"), i("r"), i("t"));
    case ConstructionName::katona_t:
        return katona_family(i("n"), i("t"));
    case ConstructionName::kalai_circle:
        return kalai_circle(i("n"));
    case ConstructionName::lex_seg:
        return lex_segment(i("n"), param(spec, "t"), i("k"));
    case ConstructionName::colex_seg:
        return colex_segment(i("n"), param(spec, "t"), i("k"));
    }
    fail(ErrorCode::invalid_argument, "unknown construction");
}

} // namespace shadowlab
