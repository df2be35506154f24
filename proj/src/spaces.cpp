#include <algorithm>
#include <bit>
#include <charconv>
#include <random>

#include "shadowlab/binom.hpp"
#include "shadowlab/error.hpp"
#include "shadowlab/level.hpp"
#include "shadowlab/verifier.hpp"
#include "spaces_internal.hpp"

namespace shadowlab {

namespace {

struct KindEntry {
    SpaceKind kind;
    std::string_view text;
};

constexpr KindEntry kind_table[] = {
    {SpaceKind::all_families, "all-families"},
    {SpaceKind::all_shifted_families, "all-shifted-families"},
    {SpaceKind::all_cross_pairs, "all-cross-pairs"},
    {SpaceKind::all_graphs, "all-graphs"},
    {SpaceKind::all_up_sets, "all-up-sets"},
    {SpaceKind::constructions_grid, "constructions-grid"},
    {SpaceKind::random_sample, "random-sample"},
};

long long parse_ll(std::string_view s, std::string_view context)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        fail(ErrorCode::parse, "expected an integer for " + std::string(context) + ", got '" + std::string(s) + "'");
    return v;
}

void check_budget(std::uint64_t count, std::uint64_t budget, const std::string &what)
{
    if (count > budget)
        fail(ErrorCode::budget_exceeded, what + " holds " + std::to_string(count) + " instances, budget is " +
                                             std::to_string(budget));
}

/// 2^e capped at 2^63 so comparisons with budgets stay meaningful.
std::uint64_t pow2_capped(long long e) { return e >= 63 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << e); }

constexpr std::uint64_t block = 4096;

// ---- all-families ---------------------------------------------------------------

class AllFamiliesStream : public InstanceStream {
public:
    AllFamiliesStream(int n, int k, std::uint64_t budget) : level_(n, k)
    {
        total_ = pow2_capped(level_.count());
        check_budget(total_, budget, "all-families");
    }

    std::uint64_t units() const override { return (total_ + block - 1) / block; }

    void visit(std::uint64_t unit, const std::function<void(InstanceKey, const Instance &)> &fn) const override
    {
        const std::uint64_t end = std::min(total_, (unit + 1) * block);
        Instance inst;
        inst.families.resize(1);
        for (std::uint64_t mask = unit * block; mask < end; ++mask) {
            inst.families[0] = level_.to_family(mask);
            fn({mask, 0}, inst);
        }
    }

private:
    Level level_;
    std::uint64_t total_ = 0;
};

// ---- all-shifted-families ---------------------------------------------------------

class ShiftedStream : public InstanceStream {
public:
    ShiftedStream(int n, int k, bool pairs, std::uint64_t budget) : level_(n, k), pairs_(pairs)
    {
        masks_ = shifted_level_masks(level_, budget);
        const std::uint64_t count = masks_.size();
        if (pairs_) {
            check_budget(count > (std::uint64_t{1} << 32) ? ~std::uint64_t{0} : count * count, budget,
                         "all-shifted-families pairs");
        }
    }

    std::uint64_t units() const override { return masks_.size(); }

    void visit(std::uint64_t unit, const std::function<void(InstanceKey, const Instance &)> &fn) const override
    {
        Instance inst;
        if (!pairs_) {
            inst.families = {level_.to_family(masks_[unit])};
            fn({unit, 0}, inst);
            return;
        }
        inst.families = {level_.to_family(masks_[unit]), Family()};
        for (std::uint64_t j = 0; j < masks_.size(); ++j) {
            inst.families[1] = level_.to_family(masks_[j]);
            fn({unit, j}, inst);
        }
    }

private:
    Level level_;
    bool pairs_;
    std::vector<LevelMask> masks_;
};

// ---- all-cross-pairs ----------------------------------------------------------------

class CrossPairsStream : public InstanceStream {
public:
    CrossPairsStream(int n, int a, int b, std::uint64_t budget) : la_(n, a), lb_(n, b)
    {
        require(n >= a + b, ErrorCode::invalid_argument, "all-cross-pairs needs n >= a + b");
        a_total_ = pow2_capped(la_.count());
        check_budget(a_total_, budget, "all-cross-pairs (first family)");
        disjoint_.resize(static_cast<std::size_t>(lb_.count()));
        for (int j = 0; j < lb_.count(); ++j)
            for (int i = 0; i < la_.count(); ++i)
                if (la_.set(i).disjoint(lb_.set(j)))
                    disjoint_[static_cast<std::size_t>(j)] |= LevelMask{1} << i;
        std::uint64_t total = 0;
        for (std::uint64_t am = 0; am < a_total_; ++am) {
            total += pow2_capped(std::popcount(compatible(am)));
            check_budget(total, budget, "all-cross-pairs");
        }
    }

    LevelMask compatible(LevelMask a_mask) const
    {
        LevelMask out = 0;
        for (int j = 0; j < lb_.count(); ++j)
            if ((a_mask & disjoint_[static_cast<std::size_t>(j)]) == 0)
                out |= LevelMask{1} << j;
        return out;
    }

    std::uint64_t units() const override { return a_total_; }

    void visit(std::uint64_t unit, const std::function<void(InstanceKey, const Instance &)> &fn) const override
    {
        const LevelMask bmax = compatible(unit);
        Instance inst;
        inst.families = {la_.to_family(unit), Family()};
        // Submasks of bmax in increasing numeric order.
        std::uint64_t index = 0;
        LevelMask sub = 0;
        while (true) {
            inst.families[1] = lb_.to_family(sub);
            fn({unit, index++}, inst);
            if (sub == bmax)
                break;
            sub = (sub - bmax) & bmax;
        }
    }

private:
    Level la_;
    Level lb_;
    std::uint64_t a_total_ = 0;
    std::vector<LevelMask> disjoint_;
};

// ---- all-graphs ---------------------------------------------------------------------

class GraphsStream : public InstanceStream {
public:
    GraphsStream(ParamRange vertices, std::uint64_t budget)
    {
        require(vertices.lo >= 1 && vertices.hi <= 11 && vertices.lo <= vertices.hi, ErrorCode::out_of_range,
                "all-graphs needs 1 <= n <= 11");
        std::uint64_t total = 0;
        for (long long v = vertices.lo; v <= vertices.hi; ++v) {
            Part p{static_cast<int>(v), Level(static_cast<int>(v), 2), 0, 0};
            p.count = pow2_capped(p.edges.count());
            total += p.count;
            check_budget(total, budget, "all-graphs");
            p.first_unit = units_;
            units_ += (p.count + block - 1) / block;
            parts_.push_back(std::move(p));
        }
    }

    std::uint64_t units() const override { return units_; }

    void visit(std::uint64_t unit, const std::function<void(InstanceKey, const Instance &)> &fn) const override
    {
        std::size_t idx = 0;
        while (idx + 1 < parts_.size() && parts_[idx + 1].first_unit <= unit)
            ++idx;
        const Part &p = parts_[idx];
        const std::uint64_t local = unit - p.first_unit;
        const std::uint64_t end = std::min(p.count, (local + 1) * block);
        const LevelMask all_vertices = SetWord::prefix(p.n).bits();
        Instance inst;
        inst.families.resize(1);
        for (std::uint64_t mask = local * block; mask < end; ++mask) {
            std::uint64_t covered = 0;
            for (LevelMask w = mask; w != 0; w &= w - 1)
                covered |= p.edges.set(std::countr_zero(w)).bits();
            if (covered != all_vertices)
                continue;
            inst.families[0] = p.edges.to_family(mask);
            fn({unit * block + (mask - local * block), 0}, inst);
        }
    }

private:
    struct Part {
        int n;
        Level edges;
        std::uint64_t count;
        std::uint64_t first_unit;
    };
    std::vector<Part> parts_;
    std::uint64_t units_ = 0;
};

// ---- all-up-sets --------------------------------------------------------------------

class UpSetsStream : public InstanceStream {
public:
    UpSetsStream(int n, std::uint64_t budget) : n_(n) { masks_ = up_set_masks(n, budget); }

    std::uint64_t units() const override { return (masks_.size() + block - 1) / block; }

    void visit(std::uint64_t unit, const std::function<void(InstanceKey, const Instance &)> &fn) const override
    {
        const std::uint64_t end = std::min<std::uint64_t>(masks_.size(), (unit + 1) * block);
        Instance inst;
        inst.families.resize(1);
        for (std::uint64_t i = unit * block; i < end; ++i) {
            inst.families[0] = family_from_power_mask(n_, masks_[i]);
            fn({i, 0}, inst);
        }
    }

private:
    int n_;
    std::vector<std::uint64_t> masks_;
};

// ---- constructions-grid ---------------------------------------------------------------

class GridStream : public InstanceStream {
public:
    GridStream(const InstanceSpace &space, std::uint64_t budget)
    {
        std::uint64_t total = 1;
        for (const auto &[key, range] : space.params) {
            require(range.lo <= range.hi, ErrorCode::invalid_argument, "empty range for " + key);
            keys_.push_back(key);
            ranges_.push_back(range);
            const auto width = static_cast<std::uint64_t>(range.hi - range.lo + 1);
            require(width <= budget && total <= budget / width + 1, ErrorCode::budget_exceeded, "grid too large");
            total *= width;
        }
        check_budget(total, budget, "constructions-grid");
        total_ = total;
    }

    std::uint64_t units() const override { return total_; }

    void visit(std::uint64_t unit, const std::function<void(InstanceKey, const Instance &)> &fn) const override
    {
        Instance inst;
        std::uint64_t rest = unit;
        // Last key varies fastest.
        for (std::size_t i = keys_.size(); i-- > 0;) {
            const auto width = static_cast<std::uint64_t>(ranges_[i].hi - ranges_[i].lo + 1);
            inst.params[keys_[i]] = static_cast<double>(ranges_[i].lo + static_cast<long long>(rest % width));
            rest /= width;
        }
        fn({unit, 0}, inst);
    }

private:
    std::vector<std::string> keys_;
    std::vector<ParamRange> ranges_;
    std::uint64_t total_ = 1;
};

// ---- random-sample ------------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class RandomStream : public InstanceStream {
public:
    RandomStream(const InstanceSpace &space, std::uint64_t budget)
        : n_(static_cast<int>(space.get("n"))), count_(static_cast<std::uint64_t>(space.get("count"))),
          seed_(static_cast<std::uint64_t>(space.get_or("seed", 1))),
          permille_(static_cast<int>(space.get_or("density", 500)))
    {
        require(n_ >= 1 && n_ <= max_ground_size, ErrorCode::out_of_range, "random-sample needs 1 <= n <= 64");
        require(permille_ >= 0 && permille_ <= 1000, ErrorCode::out_of_range, "density is in permille, 0..1000");
        check_budget(count_, budget, "random-sample");
        if (space.has("k")) {
            const int k = static_cast<int>(space.get("k"));
            require(k >= 0 && k <= n_ && binom(n_, k) <= (1 << 16), ErrorCode::out_of_range,
                    "random-sample level too large");
            k_ = k;
            for_each_subset_of_size(SetWord::prefix(n_), k, [&](SetWord s) { candidates_.push_back(s); });
        } else {
            require(n_ <= 16, ErrorCode::out_of_range, "non-uniform random-sample needs n <= 16");
            for (std::uint64_t w = 0; w < (std::uint64_t{1} << n_); ++w)
                candidates_.emplace_back(w);
        }
    }

    std::uint64_t units() const override { return (count_ + block - 1) / block; }

    void visit(std::uint64_t unit, const std::function<void(InstanceKey, const Instance &)> &fn) const override
    {
        const std::uint64_t end = std::min(count_, (unit + 1) * block);
        Instance inst;
        inst.families.resize(1);
        for (std::uint64_t i = unit * block; i < end; ++i) {
            std::mt19937_64 rng(splitmix64(seed_ ^ splitmix64(i)));
            std::vector<SetWord> members;
            for (SetWord s : candidates_)
                if (static_cast<int>(rng() % 1000) < permille_)
                    members.push_back(s);
            inst.families[0] = Family(n_, std::move(members), k_);
            fn({i, 0}, inst);
        }
    }

private:
    int n_;
    std::uint64_t count_;
    std::uint64_t seed_;
    int permille_;
    std::optional<int> k_;
    std::vector<SetWord> candidates_;
};

} // namespace

// ---- shared helpers ------------------------------------------------------------------

std::vector<LevelMask> shifted_level_masks(const Level &level, std::uint64_t budget)
{
    // Immediate predecessors under the shifting order; colex index order is a
    // linear extension, so deciding sets in index order visits each down-set once.
    std::vector<LevelMask> preds(static_cast<std::size_t>(level.count()), 0);
    for (int i = 0; i < level.count(); ++i) {
        const SetWord s = level.set(i);
        s.for_each([&](int e) {
            if (e > 1 && !s.contains(e - 1))
                preds[static_cast<std::size_t>(i)] |= LevelMask{1} << level.index_of(s.without(e).with(e - 1));
        });
    }
    std::vector<LevelMask> out;
    std::function<void(int, LevelMask)> rec = [&](int i, LevelMask current) {
        if (i == level.count()) {
            out.push_back(current);
            check_budget(out.size(), budget, "all-shifted-families");
            return;
        }
        rec(i + 1, current);
        if ((preds[static_cast<std::size_t>(i)] & ~current) == 0)
            rec(i + 1, current | (LevelMask{1} << i));
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> up_set_masks(int n, std::uint64_t budget)
{
    require(n >= 0 && n <= 6, ErrorCode::out_of_range, "all-up-sets needs n <= 6");
    // Bit w of a mask is the set with word w. Up-sets on [m] split into the
    // part avoiding m and the part containing m, the former inside the latter.
    std::vector<std::uint64_t> current{0b0, 0b1};
    for (int m = 1; m <= n; ++m) {
        const int half = 1 << (m - 1);
        std::vector<std::uint64_t> next;
        for (std::uint64_t lo : current)
            for (std::uint64_t hi : current)
                if ((lo & ~hi) == 0) {
                    next.push_back(lo | (hi << half));
                    check_budget(next.size(), budget, "all-up-sets");
                }
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

Family family_from_power_mask(int n, std::uint64_t mask)
{
    std::vector<SetWord> members;
    for (std::uint64_t w = mask; w != 0; w &= w - 1)
        members.emplace_back(static_cast<std::uint64_t>(std::countr_zero(w)));
    return Family(n, std::move(members));
}

std::optional<SpaceKind> space_kind_from_string(std::string_view s)
{
    for (const auto &e : kind_table)
        if (e.text == s)
            return e.kind;
    return std::nullopt;
}

std::string_view to_string(SpaceKind kind)
{
    for (const auto &e : kind_table)
        if (e.kind == kind)
            return e.text;
    return "?";
}

InstanceSpace InstanceSpace::parse(std::string_view text)
{
    InstanceSpace out;
    const auto colon = text.find(':');
    const std::string_view kind = text.substr(0, colon);
    const auto parsed = space_kind_from_string(kind);
    if (!parsed)
        fail(ErrorCode::parse, "unknown instance space kind '" + std::string(kind) + "'");
    out.kind = *parsed;
    std::string_view rest = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            fail(ErrorCode::parse, "expected key=value in space description, got '" + std::string(item) + "'");
        const std::string key(item.substr(0, eq));
        const std::string_view value = item.substr(eq + 1);
        const auto dots = value.find("..");
        ParamRange r;
        if (dots == std::string_view::npos) {
            r.lo = r.hi = parse_ll(value, key);
        } else {
            r.lo = parse_ll(value.substr(0, dots), key);
            r.hi = parse_ll(value.substr(dots + 2), key);
            require(r.lo <= r.hi, ErrorCode::parse, "empty range for " + key);
        }
        out.params[key] = r;
    }
    return out;
}

std::string InstanceSpace::describe() const
{
    std::string out(to_string(kind));
    char sep = ':';
    for (const auto &[key, r] : params) {
        out += sep;
        out += key + "=" + std::to_string(r.lo);
        if (r.hi != r.lo)
            out += ".." + std::to_string(r.hi);
        sep = ',';
    }
    return out;
}

long long InstanceSpace::get(std::string_view key) const
{
    auto it = params.find(key);
    require(it != params.end(), ErrorCode::invalid_argument,
            std::string(to_string(kind)) + " needs parameter " + std::string(key));
    require(it->second.lo == it->second.hi, ErrorCode::invalid_argument,
            "parameter " + std::string(key) + " must be a single value here");
    return it->second.lo;
}

long long InstanceSpace::get_or(std::string_view key, long long fallback) const
{
    return has(key) ? get(key) : fallback;
}

ParamRange InstanceSpace::range(std::string_view key) const
{
    auto it = params.find(key);
    require(it != params.end(), ErrorCode::invalid_argument,
            std::string(to_string(kind)) + " needs parameter " + std::string(key));
    return it->second;
}

std::unique_ptr<InstanceStream> open_space(const InstanceSpace &space, std::uint64_t budget)
{
    auto small = [&](std::string_view key) { return static_cast<int>(space.get(key)); };
    switch (space.kind) {
    case SpaceKind::all_families:
        return std::make_unique<AllFamiliesStream>(small("n"), small("k"), budget);
    case SpaceKind::all_shifted_families:
        return std::make_unique<ShiftedStream>(small("n"), small("k"), space.get_or("pairs", 0) != 0, budget);
    case SpaceKind::all_cross_pairs:
        return std::make_unique<CrossPairsStream>(small("n"), small("a"), small("b"), budget);
    case SpaceKind::all_graphs:
        return std::make_unique<GraphsStream>(space.range("n"), budget);
    case SpaceKind::all_up_sets:
        return std::make_unique<UpSetsStream>(small("n"), budget);
    case SpaceKind::constructions_grid:
        return std::make_unique<GridStream>(space, budget);
    case SpaceKind::random_sample:
        return std::make_unique<RandomStream>(space, budget);
    }
    fail(ErrorCode::invalid_argument, "unknown space kind");
}

void enumerate(const InstanceSpace &space, const std::function<void(InstanceKey, const Instance &)> &fn,
               std::uint64_t budget)
{
    auto stream = open_space(space, budget);
    for (std::uint64_t u = 0; u < stream->units(); ++u)
        stream->visit(u, fn);
}

} // namespace shadowlab
