#include "shadowlab/family.hpp"

#include <algorithm>
#include <charconv>

#include "shadowlab/error.hpp"

namespace shadowlab {

namespace {

void check_ground(int n)
{
    require(n >= 0 && n <= max_ground_size, ErrorCode::out_of_range,
            "ground set size must be in [0, 64], got " + std::to_string(n));
}

void check_element(const Family &f, int e)
{
    require(e >= 1 && e <= f.ground_size(), ErrorCode::out_of_range,
            "element " + std::to_string(e) + " outside [1, " + std::to_string(f.ground_size()) + "]");
}

void check_word(int n, SetWord s, const char *what)
{
    require(s.subset_of(SetWord::prefix(n)), ErrorCode::out_of_range,
            std::string(what) + " " + to_brace_string(s) + " is not a subset of [" + std::to_string(n) + "]");
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, const std::string &context)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        fail(ErrorCode::parse, "expected an integer in " + context + ", got '" + std::string(s) + "'");
    return value;
}

} // namespace

Family::Family(int n, std::vector<SetWord> members, std::optional<int> k) : n_(n), k_(k), members_(std::move(members))
{
    check_ground(n);
    if (k)
        require(*k >= 0 && *k <= n, ErrorCode::out_of_range, "uniformity " + std::to_string(*k) + " outside [0, n]");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (SetWord s : members_) {
        check_word(n, s, "member");
        if (k)
            require(s.cardinality() == *k, ErrorCode::invalid_argument,
                    "member " + to_brace_string(s) + " contradicts uniformity " + std::to_string(*k));
    }
    if (!k && !members_.empty()) {
        const int size = members_.front().cardinality();
        if (std::all_of(members_.begin(), members_.end(), [&](SetWord s) { return s.cardinality() == size; }))
            k_ = size;
    }
}

int Family::require_uniform(const char *what) const
{
    require(k_.has_value(), ErrorCode::invalid_argument, std::string(what) + " requires a uniform family");
    return *k_;
}

bool Family::contains(SetWord s) const { return std::binary_search(members_.begin(), members_.end(), s); }

std::string to_brace_string(SetWord s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](int e) {
        if (!first)
            out += ',';
        out += std::to_string(e);
        first = false;
    });
    out += '}';
    return out;
}

std::string to_text(const Family &f)
{
    std::string out = "n=" + std::to_string(f.ground_size()) + " k=";
    out += f.uniformity() ? std::to_string(*f.uniformity()) : std::string("-");
    out += '\n';
    for (SetWord s : f) {
        bool first = true;
        s.for_each([&](int e) {
            if (!first)
                out += ',';
            out += std::to_string(e);
            first = false;
        });
        out += '\n';
    }
    return out;
}

Family parse_family(std::string_view text)
{
    auto next_line = [&](std::string_view &rest) {
        auto pos = rest.find('\n');
        std::string_view line = rest.substr(0, pos);
        rest = pos == std::string_view::npos ? std::string_view() : rest.substr(pos + 1);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        return line;
    };

    require(!text.empty(), ErrorCode::parse, "empty input: missing header line 'n=<N> k=<K|->'");
    std::string_view rest = text;
    std::string_view header = trim(next_line(rest));
    auto space = header.find(' ');
    if (space == std::string_view::npos || header.substr(0, 2) != "n=")
        fail(ErrorCode::parse, "bad header '" + std::string(header) + "', expected 'n=<N> k=<K|->'");
    std::string_view n_part = header.substr(2, space - 2);
    std::string_view k_part = trim(header.substr(space + 1));
    if (k_part.substr(0, 2) != "k=")
        fail(ErrorCode::parse, "bad header '" + std::string(header) + "', expected 'n=<N> k=<K|->'");
    k_part.remove_prefix(2);
    const int n = parse_int(n_part, "header");
    check_ground(n);
    std::optional<int> k;
    if (trim(k_part) != "-")
        k = parse_int(k_part, "header");

    std::vector<SetWord> members;
    int line_no = 1;
    while (!rest.empty()) {
        ++line_no;
        std::string_view line = trim(next_line(rest));
        SetWord s;
        const std::string where = "line " + std::to_string(line_no);
        while (!line.empty()) {
            auto comma = line.find(',');
            const int e = parse_int(line.substr(0, comma), where);
            if (e < 1 || e > n)
                fail(ErrorCode::parse, where + ": element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
            if (s.contains(e))
                fail(ErrorCode::parse, where + ": repeated element " + std::to_string(e));
            s = s.with(e);
            line = comma == std::string_view::npos ? std::string_view() : line.substr(comma + 1);
        }
        members.push_back(s);
    }
    try {
        return Family(n, std::move(members), k);
    } catch (const Error &e) {
        fail(ErrorCode::parse, e.what());
    }
}

Family shadow(const Family &f, int l)
{
    const int k = f.require_uniform("shadow");
    require(l >= 0 && l <= k, ErrorCode::out_of_range,
            "shadow level " + std::to_string(l) + " outside [0, " + std::to_string(k) + "]");
    if (l == k)
        return f;
    std::vector<SetWord> out;
    for (SetWord s : f)
        for_each_subset_of_size(s, l, [&](SetWord sub) { out.push_back(sub); });
    return Family(f.ground_size(), std::move(out), l);
}

std::size_t immediate_shadow_size(const Family &f)
{
    const int k = f.require_uniform("shadow");
    if (k == 0)
        return 0;
    std::vector<std::uint64_t> out;
    out.reserve(f.size() * static_cast<std::size_t>(k));
    for (SetWord s : f)
        s.for_each([&](int e) { out.push_back(s.without(e).bits()); });
    std::sort(out.begin(), out.end());
    return static_cast<std::size_t>(std::unique(out.begin(), out.end()) - out.begin());
}

Family trace(const Family &f, SetWord x, SetWord y)
{
    require(x.disjoint(y), ErrorCode::invalid_argument, "trace needs disjoint X and Y");
    check_word(f.ground_size(), x, "X");
    check_word(f.ground_size(), y, "Y");
    const SetWord both = x | y;
    std::vector<SetWord> out;
    for (SetWord s : f)
        if ((s & both) == x)
            out.push_back(s - x);
    std::optional<int> k;
    if (f.uniformity())
        k = *f.uniformity() - x.cardinality();
    if (k && *k < 0)
        k.reset();
    return Family(f.ground_size(), std::move(out), k);
}

std::size_t degree(const Family &f, int element)
{
    check_element(f, element);
    return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [&](SetWord s) { return s.contains(element); }));
}

std::vector<std::size_t> degrees(const Family &f)
{
    std::vector<std::size_t> d(static_cast<std::size_t>(f.ground_size()) + 1, 0);
    for (SetWord s : f)
        s.for_each([&](int e) { ++d[static_cast<std::size_t>(e)]; });
    return d;
}

DegreeWitness max_degree(const Family &f)
{
    const auto d = degrees(f);
    DegreeWitness best;
    for (int e = 1; e <= f.ground_size(); ++e)
        if (best.element == 0 || d[static_cast<std::size_t>(e)] > best.count)
            best = {e, d[static_cast<std::size_t>(e)]};
    return best;
}

DegreeWitness min_degree(const Family &f)
{
    const auto d = degrees(f);
    DegreeWitness best;
    for (int e = 1; e <= f.ground_size(); ++e)
        if (best.element == 0 || d[static_cast<std::size_t>(e)] < best.count)
            best = {e, d[static_cast<std::size_t>(e)]};
    return best;
}

namespace {

struct MatchingSearch {
    std::size_t best = 0;

    // `candidates` are members disjoint from everything chosen so far, in order.
    void run(const std::vector<SetWord> &candidates, std::size_t chosen)
    {
        if (chosen > best)
            best = chosen;
        if (candidates.empty())
            return;
        SetWord cover;
        int min_size = 64;
        for (SetWord s : candidates) {
            cover = cover | s;
            min_size = std::min(min_size, s.cardinality());
        }
        const std::size_t by_elements = static_cast<std::size_t>(cover.cardinality() / std::max(min_size, 1));
        if (chosen + std::min(candidates.size(), by_elements) <= best)
            return;

        const SetWord head = candidates.front();
        std::vector<SetWord> with_head;
        for (std::size_t i = 1; i < candidates.size(); ++i)
            if (candidates[i].disjoint(head))
                with_head.push_back(candidates[i]);
        run(with_head, chosen + 1);

        std::vector<SetWord> without_head(candidates.begin() + 1, candidates.end());
        run(without_head, chosen);
    }
};

} // namespace

std::size_t matching_number(const Family &f)
{
    std::vector<SetWord> nonempty;
    bool has_empty = false;
    for (SetWord s : f) {
        if (s.empty())
            has_empty = true;
        else
            nonempty.push_back(s);
    }
    MatchingSearch search;
    search.run(nonempty, 0);
    return search.best + (has_empty ? 1 : 0);
}

bool is_cross_t_intersecting(std::span<const Family> families, int t)
{
    require(families.size() >= 2, ErrorCode::invalid_argument, "cross intersection needs at least two families");
    const int n = families.front().ground_size();
    for (const Family &f : families) {
        require(f.ground_size() == n, ErrorCode::invalid_argument, "families have different ground sets");
        if (f.empty())
            return true;
    }
    // Level d holds the distinct partial intersections over the first d families.
    std::vector<std::uint64_t> level{SetWord::prefix(n).bits()};
    for (std::size_t idx = 0; idx < families.size(); ++idx) {
        const bool last = idx + 1 == families.size();
        std::vector<std::uint64_t> next;
        for (std::uint64_t partial : level)
            for (SetWord s : families[idx]) {
                const std::uint64_t x = partial & s.bits();
                if (std::popcount(x) < t)
                    return false;
                if (!last)
                    next.push_back(x);
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }
    return true;
}

namespace {

bool r_wise_from(std::span<const SetWord> members, std::size_t start, SetWord partial, int depth_left, int t)
{
    for (std::size_t i = start; i < members.size(); ++i) {
        const SetWord x = partial & members[i];
        if (x.cardinality() < t)
            return false;
        if (depth_left > 1 && !r_wise_from(members, i + 1, x, depth_left - 1, t))
            return false;
    }
    return true;
}

} // namespace

bool is_r_wise_t_intersecting(const Family &f, int r, int t)
{
    require(r >= 2, ErrorCode::invalid_argument, "r must be at least 2");
    require(t >= 1, ErrorCode::invalid_argument, "t must be at least 1");
    // An r-tuple with repetition intersects like its support, so distinct
    // subsets of size <= r suffice. Every member contains an inclusion-minimal
    // one, so only those need checking.
    if (f.uniformity())
        return r_wise_from(f.members(), 0, SetWord::prefix(f.ground_size()), r, t);
    std::vector<SetWord> by_size(f.begin(), f.end());
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](SetWord a, SetWord b) { return a.cardinality() < b.cardinality(); });
    std::vector<SetWord> minimal;
    for (SetWord s : by_size)
        if (std::none_of(minimal.begin(), minimal.end(), [&](SetWord m) { return m.subset_of(s); }))
            minimal.push_back(s);
    return r_wise_from(minimal, 0, SetWord::prefix(f.ground_size()), r, t);
}

Family complement_family(const Family &f)
{
    const SetWord ground = SetWord::prefix(f.ground_size());
    std::vector<SetWord> out;
    out.reserve(f.size());
    for (SetWord s : f)
        out.push_back(ground - s);
    std::optional<int> k;
    if (f.uniformity())
        k = f.ground_size() - *f.uniformity();
    return Family(f.ground_size(), std::move(out), k);
}

bool is_r_wise_t_union(const Family &f, int r, int t) { return is_r_wise_t_intersecting(complement_family(f), r, t); }

bool is_up_closed(const Family &f)
{
    const SetWord ground = SetWord::prefix(f.ground_size());
    for (SetWord s : f) {
        bool ok = true;
        (ground - s).for_each([&](int e) {
            if (ok && !f.contains(s.with(e)))
                ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

std::size_t intersection_size(const Family &f, const Family &g)
{
    require(f.ground_size() == g.ground_size(), ErrorCode::invalid_argument, "families have different ground sets");
    std::size_t count = 0;
    auto a = f.begin();
    auto b = g.begin();
    while (a != f.end() && b != g.end()) {
        if (*a < *b)
            ++a;
        else if (*b < *a)
            ++b;
        else {
            ++count;
            ++a;
            ++b;
        }
    }
    return count;
}

} // namespace shadowlab
