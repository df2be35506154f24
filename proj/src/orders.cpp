#include "shadowlab/orders.hpp"

#include <algorithm>

#include <json.hpp>

#include "shadowlab/binom.hpp"
#include "shadowlab/error.hpp"

namespace shadowlab {

namespace {

void check_same_size(SetWord a, SetWord b)
{
    require(a.cardinality() == b.cardinality(), ErrorCode::invalid_argument,
            "lex and colex compare sets of equal size only");
}

/// Sorted member list plus O(1) membership for small grounds.
class WorkingFamily {
public:
    explicit WorkingFamily(const Family &f) : n_(f.ground_size()), members_(f.begin(), f.end())
    {
        if (n_ <= 20) {
            dense_.assign((std::size_t{1} << n_) / 64 + 1, 0);
            for (SetWord s : members_)
                set_bit(s);
        }
    }

    bool contains(SetWord s) const
    {
        if (!dense_.empty())
            return (dense_[s.bits() >> 6] >> (s.bits() & 63)) & 1U;
        return std::binary_search(members_.begin(), members_.end(), s);
    }

    const std::vector<SetWord> &members() const { return members_; }

    bool has_pattern_violation(SetWord u, SetWord v) const
    {
        const SetWord both = u | v;
        for (SetWord s : members_)
            if ((s & both) == v && !contains((s - v) | u))
                return true;
        return false;
    }

    /// Applies S_{U,V} in place and returns the number of moved members.
    std::size_t apply(SetWord u, SetWord v)
    {
        const SetWord both = u | v;
        std::vector<std::pair<SetWord, SetWord>> moves;
        for (SetWord s : members_)
            if ((s & both) == v) {
                const SetWord image = (s - v) | u;
                if (!contains(image))
                    moves.emplace_back(s, image);
            }
        if (moves.empty())
            return 0;
        for (auto [from, to] : moves) {
            clear_bit(from);
            set_bit(to);
        }
        if (dense_.empty()) {
            for (auto [from, to] : moves)
                *std::lower_bound(members_.begin(), members_.end(), from) = to;
        } else {
            for (auto &s : members_)
                for (auto [from, to] : moves)
                    if (s == from) {
                        s = to;
                        break;
                    }
        }
        std::sort(members_.begin(), members_.end());
        return moves.size();
    }

    Family to_family(std::optional<int> k) const { return Family(n_, members_, k); }

private:
    void set_bit(SetWord s)
    {
        if (!dense_.empty())
            dense_[s.bits() >> 6] |= std::uint64_t{1} << (s.bits() & 63);
    }
    void clear_bit(SetWord s)
    {
        if (!dense_.empty())
            dense_[s.bits() >> 6] &= ~(std::uint64_t{1} << (s.bits() & 63));
    }

    int n_;
    std::vector<SetWord> members_;
    std::vector<std::uint64_t> dense_;
};

enum class SegmentOrder { lex, colex };

bool precedes(SetWord u, SetWord v, SegmentOrder order)
{
    // u, v disjoint and equal-sized here.
    return order == SegmentOrder::colex ? u < v : u.min_element() < v.min_element();
}

std::optional<ShiftPair> find_violation(const WorkingFamily &w, int n, int k, SegmentOrder order)
{
    const SetWord ground = SetWord::prefix(n);
    const auto &members = w.members();
    std::optional<ShiftPair> found;
    for (int size = 1; size <= k && size <= n - k && !found; ++size) {
        for_each_subset_of_size(ground, size, [&](SetWord v) {
            std::vector<SetWord> holders;
            for (SetWord s : members)
                if (v.subset_of(s))
                    holders.push_back(s);
            if (holders.empty())
                return true;
            for_each_subset_of_size(ground - v, size, [&](SetWord u) {
                if (!precedes(u, v, order))
                    return order == SegmentOrder::lex; // colex candidates arrive in increasing order
                for (SetWord s : holders)
                    if (s.disjoint(u) && !w.contains((s - v) | u)) {
                        found = ShiftPair{u, v};
                        return false;
                    }
                return true;
            });
            return !found;
        });
    }
    return found;
}

void check_shift_args(const Family &f, SetWord u, SetWord v)
{
    require(u.disjoint(v), ErrorCode::invalid_argument, "shift sets U and V must be disjoint");
    require(u.cardinality() == v.cardinality(), ErrorCode::invalid_argument, "shift sets U and V must have equal size");
    const SetWord ground = SetWord::prefix(f.ground_size());
    require(u.subset_of(ground) && v.subset_of(ground), ErrorCode::out_of_range, "shift sets must lie in the ground set");
}

} // namespace

Ordering compare(SetWord a, SetWord b, OrderKind order)
{
    if (order == OrderKind::shift_partial) {
        if (a.cardinality() != b.cardinality())
            return Ordering::incomparable;
        if (a == b)
            return Ordering::equal;
        const auto xs = a.elements();
        const auto ys = b.elements();
        bool all_le = true;
        bool all_ge = true;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            all_le = all_le && xs[i] <= ys[i];
            all_ge = all_ge && xs[i] >= ys[i];
        }
        if (all_le)
            return Ordering::less;
        if (all_ge)
            return Ordering::greater;
        return Ordering::incomparable;
    }
    check_same_size(a, b);
    if (a == b)
        return Ordering::equal;
    const SetWord diff = a ^ b;
    if (order == OrderKind::lex)
        return a.contains(diff.min_element()) ? Ordering::less : Ordering::greater;
    return b.contains(diff.max_element()) ? Ordering::less : Ordering::greater;
}

Family lex_segment(int n, long long t, int k)
{
    require(n >= 0 && n <= max_ground_size && k >= 0 && k <= n, ErrorCode::out_of_range, "bad segment parameters");
    require(t >= 0 && static_cast<BigInt>(t) <= binom(n, k), ErrorCode::out_of_range,
            "segment length " + std::to_string(t) + " outside [0, C(n,k)]");
    std::vector<SetWord> out;
    out.reserve(static_cast<std::size_t>(t));
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i + 1;
    for (long long produced = 0; produced < t; ++produced) {
        out.push_back(SetWord::of(std::span<const int>(idx)));
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos + 1)
            --pos;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < k; ++q)
            idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
    return Family(n, std::move(out), k);
}

Family colex_segment(int n, long long t, int k)
{
    require(n >= 0 && n <= max_ground_size && k >= 0 && k <= n, ErrorCode::out_of_range, "bad segment parameters");
    require(t >= 0 && static_cast<BigInt>(t) <= binom(n, k), ErrorCode::out_of_range,
            "segment length " + std::to_string(t) + " outside [0, C(n,k)]");
    std::vector<SetWord> out;
    out.reserve(static_cast<std::size_t>(t));
    if (t > 0)
        for_each_subset_of_size(SetWord::prefix(n), k, [&](SetWord s) {
            out.push_back(s);
            return static_cast<long long>(out.size()) < t;
        });
    return Family(n, std::move(out), k);
}

bool is_lex_segment(const Family &f)
{
    if (f.empty())
        return true;
    const int k = f.require_uniform("lex segment test");
    return std::ranges::equal(lex_segment(f.ground_size(), static_cast<long long>(f.size()), k).members(),
                              f.members());
}

bool is_colex_segment(const Family &f)
{
    if (f.empty())
        return true;
    const int k = f.require_uniform("colex segment test");
    return std::ranges::equal(colex_segment(f.ground_size(), static_cast<long long>(f.size()), k).members(),
                              f.members());
}

Family daykin_shift(const Family &f, SetWord u, SetWord v)
{
    check_shift_args(f, u, v);
    WorkingFamily w(f);
    w.apply(u, v);
    return w.to_family(f.uniformity());
}

Family shift_ij(const Family &f, int i, int j)
{
    require(i != j, ErrorCode::invalid_argument, "shift needs i != j");
    const int n = f.ground_size();
    require(i >= 1 && i <= n && j >= 1 && j <= n, ErrorCode::out_of_range, "shift elements outside the ground set");
    return daykin_shift(f, SetWord::singleton(i), SetWord::singleton(j));
}

bool is_shifted(const Family &f)
{
    for (SetWord s : f) {
        bool ok = true;
        s.for_each([&](int e) {
            if (ok && e > 1 && !s.contains(e - 1) && !f.contains(s.without(e).with(e - 1)))
                ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

Family replay(const Family &initial, const ShiftTrace &trace)
{
    Family f = initial;
    for (const ShiftStep &step : trace.steps)
        f = daykin_shift(f, step.u, step.v);
    return f;
}

std::string trace_to_json(const ShiftTrace &trace, int indent)
{
    nlohmann::json steps = nlohmann::json::array();
    for (const ShiftStep &step : trace.steps) {
        nlohmann::json j;
        if (step.kind == ShiftStep::Kind::ij) {
            j["op"] = "ij";
            j["i"] = step.u.min_element();
            j["j"] = step.v.min_element();
        } else {
            j["op"] = "daykin";
            j["U"] = step.u.elements();
            j["V"] = step.v.elements();
        }
        j["moved"] = step.moved;
        steps.push_back(std::move(j));
    }
    return nlohmann::json{{"steps", steps}}.dump(indent);
}

ShiftResult shift_to_shifted(const Family &f)
{
    const int n = f.ground_size();
    WorkingFamily w(f);
    ShiftTrace trace;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const std::size_t moved = w.apply(SetWord::singleton(i), SetWord::singleton(j));
                if (moved > 0) {
                    trace.steps.push_back({ShiftStep::Kind::ij, SetWord::singleton(i), SetWord::singleton(j), moved});
                    changed = true;
                }
            }
    }
    Family out = w.to_family(f.uniformity());
    if (!is_shifted(out))
        fail(ErrorCode::internal, "shift fixed point is not shifted");
    return {std::move(out), std::move(trace)};
}

std::optional<ShiftPair> find_colex_violation(const Family &f)
{
    if (f.empty())
        return std::nullopt;
    const int k = f.require_uniform("colex violation search");
    return find_violation(WorkingFamily(f), f.ground_size(), k, SegmentOrder::colex);
}

std::optional<ShiftPair> find_lex_violation(const Family &f)
{
    if (f.empty())
        return std::nullopt;
    const int k = f.require_uniform("lex violation search");
    return find_violation(WorkingFamily(f), f.ground_size(), k, SegmentOrder::lex);
}

CompressResult compress_to_colex(const Family &f)
{
    const int k = f.require_uniform("colex compression");
    const int n = f.ground_size();
    WorkingFamily w(f);
    CompressResult out;
    auto shadow_size = [&] { return k == 0 ? std::size_t{0} : immediate_shadow_size(Family(n, w.members(), k)); };
    out.shadow_sizes.push_back(shadow_size());
    while (auto pair = find_violation(w, n, k, SegmentOrder::colex)) {
        const std::size_t moved = w.apply(pair->u, pair->v);
        if (moved == 0)
            fail(ErrorCode::internal, "colex violation produced an empty shift");
        out.trace.steps.push_back({ShiftStep::Kind::daykin, pair->u, pair->v, moved});
        const std::size_t now = shadow_size();
        if (now > out.shadow_sizes.back())
            fail(ErrorCode::internal, "immediate shadow grew from " + std::to_string(out.shadow_sizes.back()) + " to " +
                                          std::to_string(now) + " under S_{" + to_brace_string(pair->u) + "," +
                                          to_brace_string(pair->v) + "}");
        out.shadow_sizes.push_back(now);
    }
    out.family = w.to_family(k);
    if (!is_colex_segment(out.family))
        fail(ErrorCode::internal, "colex compression stopped before reaching a colex segment");
    return out;
}

std::optional<CrossShiftStep> cross_lex_shift_step(const Family &a, const Family &b)
{
    require(a.ground_size() == b.ground_size(), ErrorCode::invalid_argument, "families have different ground sets");
    const int ka = a.require_uniform("cross shift");
    const int kb = b.require_uniform("cross shift");
    const int n = a.ground_size();
    require(n >= ka + kb, ErrorCode::invalid_argument, "cross shift needs n >= a + b");
    const Family pair[] = {a, b};
    require(is_cross_t_intersecting(pair, 1), ErrorCode::invalid_argument, "families are not cross-intersecting");

    auto pa = find_lex_violation(a);
    auto pb = find_lex_violation(b);
    if (!pa && !pb)
        return std::nullopt;
    ShiftPair chosen;
    if (pa && (!pb || pa->u.cardinality() <= pb->u.cardinality()))
        chosen = *pa;
    else
        chosen = *pb;

    CrossShiftStep step{daykin_shift(a, chosen.u, chosen.v), daykin_shift(b, chosen.u, chosen.v), chosen};
    const Family shifted[] = {step.a, step.b};
    if (!is_cross_t_intersecting(shifted, 1))
        fail(ErrorCode::internal, "lex shift S_{" + to_brace_string(chosen.u) + "," + to_brace_string(chosen.v) +
                                      "} broke cross-intersection");
    return step;
}

} // namespace shadowlab
