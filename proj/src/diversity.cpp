#include "shadowlab/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "shadowlab/binom.hpp"
#include "shadowlab/error.hpp"

namespace shadowlab {

std::string_view to_string(Metric m)
{
    switch (m) {
    case Metric::gamma:
        return "gamma";
    case Metric::s_gamma:
        return "s";
    case Metric::kk_gamma:
        return "kk";
    case Metric::colex_gamma:
        return "colex";
    }
    return "?";
}

std::string to_json(const DiversityValue &d)
{
    nlohmann::json j;
    j["metric"] = to_string(d.metric);
    j["value"] = d.value;
    std::visit(
        [&](const auto &w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, int>)
                j["witness"] = w;
            else if constexpr (std::is_same_v<W, SetWord>)
                j["witness"] = w.elements();
            else
                j["witness"] = w;
        },
        d.witness);
    return j.dump();
}

DiversityValue diversity(const Family &f)
{
    require(f.ground_size() >= 1, ErrorCode::invalid_argument, "diversity needs a nonempty ground set");
    const DegreeWitness top = max_degree(f);
    return {Metric::gamma, f.size() - top.count, top.element};
}

DiversityValue s_diversity(const Family &f, int s)
{
    const int n = f.ground_size();
    require(s >= 1 && s <= n, ErrorCode::out_of_range, "s must lie in [1, n]");
    DiversityValue best{Metric::s_gamma, f.size() + 1, SetWord()};
    for_each_subset_of_size(SetWord::prefix(n), s, [&](SetWord r) {
        std::size_t avoiding = 0;
        for (SetWord m : f)
            avoiding += m.disjoint(r) ? 1 : 0;
        if (avoiding < best.value) {
            best.value = avoiding;
            best.witness = r;
        }
        return best.value > 0;
    });
    return best;
}

DiversityValue kk_diversity(const Family &f, int n)
{
    const int ground = f.ground_size();
    if (!f.empty())
        f.require_uniform("Kruskal-Katona diversity");
    require(n >= 0 && n <= ground, ErrorCode::out_of_range,
            "window size " + std::to_string(n) + " exceeds the ground set size " + std::to_string(ground));
    DiversityValue best{Metric::kk_gamma, f.size() + 1, SetWord()};
    for_each_subset_of_size(SetWord::prefix(ground), n, [&](SetWord x) {
        std::size_t outside = 0;
        for (SetWord m : f)
            outside += m.subset_of(x) ? 0 : 1;
        if (outside < best.value) {
            best.value = outside;
            best.witness = x;
        }
        return best.value > 0;
    });
    return best;
}

namespace {

SetWord relabel(SetWord s, const Relabeling &pi)
{
    SetWord out;
    s.for_each([&](int e) { out = out.with(pi[static_cast<std::size_t>(e - 1)]); });
    return out;
}

/// Word of the k-set with colex index t (the first set outside the segment).
SetWord colex_threshold(int n, long long t, int k)
{
    SetWord found;
    long long index = 0;
    for_each_subset_of_size(SetWord::prefix(n), k, [&](SetWord s) {
        if (index++ == t) {
            found = s;
            return false;
        }
        return true;
    });
    return found;
}

std::size_t outside_count(const Family &f, const Relabeling &pi, SetWord threshold)
{
    std::size_t out = 0;
    for (SetWord m : f)
        out += relabel(m, pi) >= threshold ? 1 : 0;
    return out;
}

/**
 * Assigns ground elements to target positions from the top position down.
 * A member's image is compared with the threshold word bit by bit from the
 * top, so most members are decided (inside / outside) after a few levels.
 */
class ColexSearch {
public:
    ColexSearch(const Family &f, SetWord threshold) : members_(f.begin(), f.end()), threshold_(threshold), n_(f.ground_size())
    {
        const auto d = degrees(f);
        for (int e = 1; e <= n_; ++e)
            by_degree_.push_back(e);
        std::stable_sort(by_degree_.begin(), by_degree_.end(),
                         [&](int a, int b) { return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)]; });
        pi_.assign(static_cast<std::size_t>(n_), 0);
    }

    void run(std::size_t initial_best, Relabeling initial_witness)
    {
        best_ = initial_best;
        witness_ = std::move(initial_witness);
        std::vector<int> undecided(members_.size());
        std::iota(undecided.begin(), undecided.end(), 0);
        dfs(n_, 0, undecided, 0);
    }

    std::size_t best() const { return best_; }
    const Relabeling &witness() const { return witness_; }

private:
    void dfs(int position, std::uint64_t used, const std::vector<int> &undecided, std::size_t outside)
    {
        if (outside >= best_)
            return;
        if (position == 0) {
            // Undecided images equal the threshold word itself, which is outside.
            const std::size_t total = outside + undecided.size();
            if (total < best_) {
                best_ = total;
                witness_ = pi_;
            }
            return;
        }
        const bool threshold_bit = threshold_.contains(position);
        std::vector<int> next;
        next.reserve(undecided.size());
        for (int e : by_degree_) {
            if ((used >> e) & 1U)
                continue;
            std::size_t out = outside;
            next.clear();
            for (int idx : undecided) {
                const bool bit = members_[static_cast<std::size_t>(idx)].contains(e);
                if (bit == threshold_bit)
                    next.push_back(idx);
                else if (bit)
                    ++out;
            }
            pi_[static_cast<std::size_t>(e - 1)] = position;
            dfs(position - 1, used | (std::uint64_t{1} << e), next, out);
        }
    }

    std::vector<SetWord> members_;
    SetWord threshold_;
    int n_;
    std::vector<int> by_degree_;
    Relabeling pi_;
    std::size_t best_ = 0;
    Relabeling witness_;
};

} // namespace

DiversityValue colex_diversity(const Family &f, long long t)
{
    const int n = f.ground_size();
    require(n <= colex_diversity_max_n, ErrorCode::out_of_range,
            "colex diversity is exact only for n <= " + std::to_string(colex_diversity_max_n));
    Relabeling identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 1);
    if (f.empty())
        return {Metric::colex_gamma, 0, identity};
    const int k = f.require_uniform("colex diversity");
    const BigInt total = binom(n, k);
    require(t >= 0 && static_cast<BigInt>(t) <= total, ErrorCode::out_of_range, "t outside [0, C(n,k)]");
    if (static_cast<BigInt>(t) == total)
        return {Metric::colex_gamma, 0, identity};
    const SetWord threshold = colex_threshold(n, t, k);
    const std::size_t at_identity = outside_count(f, identity, threshold);
    if (at_identity == 0)
        return {Metric::colex_gamma, 0, identity};
    ColexSearch search(f, threshold);
    search.run(at_identity, identity);
    return {Metric::colex_gamma, search.best(), search.witness()};
}

std::size_t objective_at(const Family &f, const DiversityValue &d, long long param)
{
    switch (d.metric) {
    case Metric::gamma: {
        const int e = std::get<int>(d.witness);
        return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [&](SetWord m) { return !m.contains(e); }));
    }
    case Metric::s_gamma: {
        const SetWord r = std::get<SetWord>(d.witness);
        return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [&](SetWord m) { return m.disjoint(r); }));
    }
    case Metric::kk_gamma: {
        const SetWord x = std::get<SetWord>(d.witness);
        return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [&](SetWord m) { return !m.subset_of(x); }));
    }
    case Metric::colex_gamma: {
        if (f.empty())
            return 0;
        const int n = f.ground_size();
        const int k = f.require_uniform("colex diversity");
        if (static_cast<BigInt>(param) >= binom(n, k))
            return 0;
        return outside_count(f, std::get<Relabeling>(d.witness), colex_threshold(n, param, k));
    }
    }
    return 0;
}

double measure(const Family &f) { return std::ldexp(static_cast<double>(f.size()), -f.ground_size()); }

std::size_t boundary_pairs(const Family &f, int i)
{
    require(i >= 1 && i <= f.ground_size(), ErrorCode::out_of_range, "influence coordinate outside the ground set");
    std::size_t count = 0;
    const SetWord flip = SetWord::singleton(i);
    for (SetWord s : f)
        count += f.contains(s ^ flip) ? 0 : 1;
    return count;
}

namespace {

double influence_unchecked(const Family &f, int i)
{
    return std::ldexp(static_cast<double>(boundary_pairs(f, i)), 1 - f.ground_size());
}

void cross_check_up_closed(const Family &f, int i, double value)
{
    const std::size_t d = degree(f, i);
    const double via_degrees = std::ldexp(2.0 * static_cast<double>(d) - 2.0 * static_cast<double>(f.size() - d),
                                          -f.ground_size());
    if (std::abs(via_degrees - value) > 1e-12 * std::max(1.0, std::abs(value)))
        fail(ErrorCode::internal, "up-set influence disagrees with the degree formula at coordinate " + std::to_string(i));
}

} // namespace

double influence(const Family &f, int i)
{
    const double value = influence_unchecked(f, i);
    if (is_up_closed(f))
        cross_check_up_closed(f, i, value);
    return value;
}

std::vector<double> influences(const Family &f)
{
    const bool up = is_up_closed(f);
    std::vector<double> out;
    for (int i = 1; i <= f.ground_size(); ++i) {
        out.push_back(influence_unchecked(f, i));
        if (up)
            cross_check_up_closed(f, i, out.back());
    }
    return out;
}

double total_influence(const Family &f)
{
    const auto all = influences(f);
    return std::accumulate(all.begin(), all.end(), 0.0);
}

double influence_identity_residual(const Family &f)
{
    const auto all = influences(f);
    const double top = all.empty() ? 0.0 : *std::max_element(all.begin(), all.end());
    const double gamma = static_cast<double>(diversity(f).value);
    return 0.5 * top + 2.0 * std::ldexp(gamma, -f.ground_size()) - measure(f);
}

} // namespace shadowlab
