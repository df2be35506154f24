#include <algorithm>
#include <cmath>
#include <cstdio>

#include "shadowlab/binom.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/diversity.hpp"
#include "shadowlab/error.hpp"
#include "shadowlab/orders.hpp"
#include "shadowlab/verifier.hpp"

namespace shadowlab {

namespace {

constexpr double tol = 1e-9;

bool geq(double a, double b) { return a >= b - tol * std::max(1.0, std::abs(b)); }
bool approx(double a, double b) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::string num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string num(BigInt x) { return to_string(x); }
std::string num(std::size_t x) { return std::to_string(x); }

std::size_t gamma_of(const Family &f) { return f.ground_size() == 0 ? 0 : diversity(f).value; }

std::optional<int> unique_max_element(const Family &f)
{
    const auto d = degrees(f);
    const auto best = max_degree(f);
    int count = 0;
    for (int e = 1; e <= f.ground_size(); ++e)
        count += d[static_cast<std::size_t>(e)] == best.count;
    if (count != 1)
        return std::nullopt;
    return best.element;
}

BigInt big(std::size_t x) { return static_cast<BigInt>(x); }

int iparam(const Instance &inst, std::string_view key)
{
    auto it = inst.params.find(key);
    require(it != inst.params.end(), ErrorCode::invalid_argument,
            "instance needs parameter " + std::string(key));
    return static_cast<int>(std::lround(it->second));
}

/// Parameters a claim reads from the space itself (r, t, ...).
struct Context {
    InstanceSpace space;
    std::optional<int> r;
    std::optional<int> t;
    int colex_n = -1;
    int colex_k = -1;
    std::vector<std::size_t> colex_shadow; // by size, for the space's level
};

using CheckFn = std::function<Outcome(const Instance &, const Context &)>;

struct Definition {
    std::string id;
    std::string statement;
    std::vector<SpaceKind> kinds;
    CheckFn check;
    std::function<void(Context &)> prepare;
    std::function<bool(const InstanceSpace &)> exploratory;
    std::function<std::vector<std::string>(const InstanceSpace &)> boundary;
};

class GenericClaim : public Claim {
public:
    explicit GenericClaim(Definition d) : def_(std::move(d)) {}

    std::string_view id() const override { return def_.id; }
    std::string_view statement() const override { return def_.statement; }
    bool supports(SpaceKind kind) const override
    {
        return std::find(def_.kinds.begin(), def_.kinds.end(), kind) != def_.kinds.end();
    }
    void prepare(const InstanceSpace &space) override
    {
        ctx_ = Context{};
        ctx_.space = space;
        if (space.kind != SpaceKind::constructions_grid) {
            if (space.has("r"))
                ctx_.r = static_cast<int>(space.get("r"));
            if (space.has("t"))
                ctx_.t = static_cast<int>(space.get("t"));
        }
        if (def_.prepare)
            def_.prepare(ctx_);
    }
    Outcome check(const Instance &instance) const override { return def_.check(instance, ctx_); }
    bool exploratory(const InstanceSpace &space) const override
    {
        return def_.exploratory ? def_.exploratory(space) : false;
    }
    std::vector<std::string> boundary_records(const InstanceSpace &space) const override
    {
        return def_.boundary ? def_.boundary(space) : std::vector<std::string>{};
    }

private:
    Definition def_;
    Context ctx_;
};

const std::vector<SpaceKind> family_kinds{SpaceKind::all_families, SpaceKind::all_shifted_families,
                                          SpaceKind::all_up_sets, SpaceKind::all_graphs,
                                          SpaceKind::random_sample};

std::vector<SpaceKind> with_grid(std::vector<SpaceKind> kinds)
{
    kinds.push_back(SpaceKind::constructions_grid);
    return kinds;
}

const std::vector<SpaceKind> cross_kinds{SpaceKind::all_cross_pairs};

/// (r,t) pairs to test: the space's own, or a small default sweep.
std::vector<std::pair<int, int>> rt_pairs(const Context &ctx, std::vector<std::pair<int, int>> fallback)
{
    if (ctx.r || ctx.t)
        return {{ctx.r.value_or(2), ctx.t.value_or(1)}};
    return fallback;
}

struct Uniform {
    int n;
    int k;
};

std::optional<Uniform> uniform(const Family &f)
{
    auto k = f.uniformity();
    if (!k)
        return std::nullopt;
    return Uniform{f.ground_size(), *k};
}

// ---- shadows ---------------------------------------------------------------------

Outcome check_lovasz(const Instance &inst, const Context &)
{
    const Family &f = inst.families.at(0);
    auto u = uniform(f);
    if (!u || u->k < 1 || f.empty())
        return Outcome::skip();
    const double shadow = static_cast<double>(immediate_shadow_size(f));
    const double bound = kk_bound(static_cast<double>(f.size()), u->k);
    if (!geq(shadow, bound))
        return Outcome::violate("|shadow| = " + num(shadow) + " < " + num(bound));
    return Outcome::hold(approx(shadow, bound));
}

std::size_t colex_shadow_size(int n, std::size_t m, int k)
{
    return immediate_shadow_size(colex_segment(n, static_cast<long long>(m), k));
}

Outcome check_kk(const Instance &inst, const Context &ctx)
{
    const Family &f = inst.families.at(0);
    auto u = uniform(f);
    if (!u || u->k < 1 || f.empty())
        return Outcome::skip();
    const std::size_t shadow = immediate_shadow_size(f);
    const std::size_t colex = (u->n == ctx.colex_n && u->k == ctx.colex_k) ? ctx.colex_shadow[f.size()]
                                                                            : colex_shadow_size(u->n, f.size(), u->k);
    if (shadow < colex)
        return Outcome::violate("|shadow| = " + num(shadow) + " < colex shadow " + num(colex));
    const double lovasz = kk_bound(static_cast<double>(f.size()), u->k);
    if (!geq(static_cast<double>(colex), lovasz))
        return Outcome::violate("colex shadow " + num(colex) + " < " + num(lovasz));
    return Outcome::hold(shadow == colex);
}

void prepare_kk(Context &ctx)
{
    const auto &s = ctx.space;
    if (!s.has("n") || !s.has("k") || s.range("n").lo != s.range("n").hi || s.range("k").lo != s.range("k").hi)
        return;
    const int n = static_cast<int>(s.get("n"));
    const int k = static_cast<int>(s.get("k"));
    if (k < 1 || k > n || binom(n, k) > 4096)
        return;
    const auto total = static_cast<std::size_t>(binom(n, k));
    ctx.colex_shadow.resize(total + 1);
    for (std::size_t m = 0; m <= total; ++m)
        ctx.colex_shadow[m] = colex_shadow_size(n, m, k);
    ctx.colex_n = n;
    ctx.colex_k = k;
}

Outcome check_compression(const Instance &inst, const Context &)
{
    const Family &f = inst.families.at(0);
    auto u = uniform(f);
    if (!u || u->k < 1)
        return Outcome::skip();
    try {
        const CompressResult r = compress_to_colex(f);
        for (std::size_t i = 1; i < r.shadow_sizes.size(); ++i)
            if (r.shadow_sizes[i] > r.shadow_sizes[i - 1])
                return Outcome::violate("shadow grew at step " + std::to_string(i));
        if (!(r.family == colex_segment(u->n, static_cast<long long>(f.size()), u->k)))
            return Outcome::violate("compression did not end at the colex segment");
        if (!(replay(f, r.trace) == r.family))
            return Outcome::violate("trace replay differs from the result");
        return Outcome::hold(r.shadow_sizes.front() == r.shadow_sizes.back());
    } catch (const Error &e) {
        if (e.code() != ErrorCode::internal)
            throw;
        return Outcome::violate(e.what());
    }
}

// ---- intersecting families: size versus diversity ------------------------------------

Outcome check_kz(const Instance &inst, const Context &)
{
    if (inst.families.empty()) {
        const int n = iparam(inst, "n"), k = iparam(inst, "k"), u = iparam(inst, "u");
        if (!(n > 2 * k && u >= 3 && u <= k))
            return Outcome::skip();
        const Family f = l_uv(n, k, u, u);
        const BigInt size = binom(n - 1, k - 1) + binom(n - u - 1, n - k - 1) - binom(n - u - 1, k - 1);
        const BigInt g = binom(n - u - 1, n - k - 1);
        if (!is_intersecting(f))
            return Outcome::violate("L_uu is not intersecting");
        if (big(f.size()) != size || big(gamma_of(f)) != g)
            return Outcome::violate("|L_uu| = " + num(f.size()) + ", gamma = " + num(gamma_of(f)) +
                                    "; expected " + num(size) + ", " + num(g));
        return Outcome::hold(true);
    }
    const Family &f = inst.families.at(0);
    auto uf = uniform(f);
    if (!uf || uf->k < 3 || uf->n <= 2 * uf->k || !is_intersecting(f))
        return Outcome::skip();
    const int n = uf->n, k = uf->k;
    const double g = static_cast<double>(gamma_of(f));
    std::vector<double> us;
    for (int u = 3; u <= k; ++u)
        us.push_back(u);
    if (g >= 1) {
        const double w = inv_gbinom(g, n - k - 1);
        const double ustar = n - 1 - w;
        if (ustar >= 3 && ustar <= k)
            us.push_back(ustar);
    }
    bool any = false;
    bool eq = false;
    const double size = static_cast<double>(f.size());
    for (double u : us) {
        const double thr = gbinom(n - u - 1, n - k - 1);
        if (!geq(g, thr))
            continue;
        any = true;
        const double bound = gbinom(n - 1, k - 1) + thr - gbinom(n - u - 1, k - 1);
        if (!geq(bound, size))
            return Outcome::violate("u = " + num(u) + ": |F| = " + num(size) + " > " + num(bound));
        eq = eq || approx(size, bound);
    }
    return any ? Outcome::hold(eq) : Outcome::skip();
}

// ---- cross-intersecting pairs ------------------------------------------------------------

struct CrossPair {
    int n;
    int a;
    int b;
};

std::optional<CrossPair> cross_pair(const Instance &inst)
{
    if (inst.families.size() != 2)
        return std::nullopt;
    auto ua = uniform(inst.families[0]);
    auto ub = uniform(inst.families[1]);
    if (!ua || !ub || ua->n != ub->n || ua->k < 1 || ub->k < 1 || ua->n < ua->k + ub->k)
        return std::nullopt;
    if (!is_cross_t_intersecting(inst.families, 1))
        return std::nullopt;
    return CrossPair{ua->n, ua->k, ub->k};
}

Outcome check_cross_ekr(const Instance &inst, const Context &)
{
    if (inst.families.empty()) {
        const int n = iparam(inst, "n"), a = iparam(inst, "a"), b = iparam(inst, "b");
        if (a < 1 || b < 1 || n < a + b)
            return Outcome::skip();
        const Family sa = star(n, a), sb = star(n, b);
        const Family pair[] = {sa, sb};
        if (!is_cross_t_intersecting(pair, 1) || big(sa.size()) != binom(n - 1, a - 1) ||
            big(sb.size()) != binom(n - 1, b - 1))
            return Outcome::violate("star pair does not meet the bound");
        return Outcome::hold(true);
    }
    auto p = cross_pair(inst);
    if (!p)
        return Outcome::skip();
    const Family &A = inst.families[0], &B = inst.families[1];
    if (big(A.size()) < binom(p->n - 1, p->a - 1))
        return Outcome::skip();
    const BigInt bound = binom(p->n - 1, p->b - 1);
    if (big(B.size()) > bound)
        return Outcome::violate("|B| = " + num(B.size()) + " > " + num(bound));
    return Outcome::hold(big(B.size()) == bound);
}

Outcome check_cross_stability_grid(const Instance &inst)
{
    const int n = iparam(inst, "n"), a = iparam(inst, "a"), b = iparam(inst, "b");
    const int u = iparam(inst, "u"), v = iparam(inst, "v");
    if (!(n >= a + b && u >= 3 && u <= a && v >= 3 && v <= b))
        return Outcome::skip();
    const Family A = l_uv(n, a, u, v), B = l_uv(n, b, v, u);
    const Family pair[] = {A, B};
    if (!is_cross_t_intersecting(pair, 1))
        return Outcome::violate("L_uv pair is not cross-intersecting");
    const BigInt ta = binom(n - 1, a - 1) - binom(n - v - 1, a - 1) + binom(n - u - 1, n - a - 1);
    const BigInt tb = binom(n - 1, b - 1) - binom(n - u - 1, b - 1) + binom(n - v - 1, n - b - 1);
    const BigInt ga = binom(n - u - 1, n - a - 1), gb = binom(n - v - 1, n - b - 1);
    if (big(A.size()) != ta || big(B.size()) != tb)
        return Outcome::violate("sizes " + num(A.size()) + "," + num(B.size()) + " differ from thresholds " +
                                num(ta) + "," + num(tb));
    if (big(gamma_of(A)) != ga || big(gamma_of(B)) != gb)
        return Outcome::violate("diversities " + num(gamma_of(A)) + "," + num(gamma_of(B)) + " differ from " +
                                num(ga) + "," + num(gb));
    return Outcome::hold(true);
}

Outcome check_cross_stability(const Instance &inst, const Context &)
{
    if (inst.families.empty())
        return check_cross_stability_grid(inst);
    auto p = cross_pair(inst);
    if (!p)
        return Outcome::skip();
    const Family &A = inst.families[0], &B = inst.families[1];
    const int n = p->n, a = p->a, b = p->b;
    std::vector<std::pair<double, double>> uv;
    if (inst.params.count("u") && inst.params.count("v")) {
        uv.emplace_back(inst.params.find("u")->second, inst.params.find("v")->second);
    } else {
        for (int u = 3; u <= a; ++u)
            for (int v = 3; v <= b; ++v)
                uv.emplace_back(u, v);
    }
    const double sa = static_cast<double>(A.size()), sb = static_cast<double>(B.size());
    bool any = false;
    bool eq = false;
    std::optional<std::pair<double, double>> gammas;
    for (auto [u, v] : uv) {
        const double ta = gbinom(n - 1, a - 1) - gbinom(n - v - 1, a - 1) + gbinom(n - u - 1, n - a - 1);
        const double tb = gbinom(n - 1, b - 1) - gbinom(n - u - 1, b - 1) + gbinom(n - v - 1, n - b - 1);
        const bool ge_a = geq(sa, ta), ge_b = geq(sb, tb);
        if (!ge_a || !ge_b)
            continue;
        const bool strict = !approx(sa, ta) || !approx(sb, tb);
        if (!strict) {
            eq = true;
            continue;
        }
        any = true;
        if (!gammas)
            gammas.emplace(static_cast<double>(gamma_of(A)), static_cast<double>(gamma_of(B)));
        const double ga = gbinom(n - u - 1, n - a - 1), gb = gbinom(n - v - 1, n - b - 1);
        const std::string at = "(u,v) = (" + num(u) + "," + num(v) + "): ";
        if (!(gammas->first < ga - tol) || !(gammas->second < gb - tol))
            return Outcome::violate(at + "gamma(A) = " + num(gammas->first) + ", gamma(B) = " +
                                    num(gammas->second) + ", limits " + num(ga) + ", " + num(gb));
        const auto ea = unique_max_element(A), eb = unique_max_element(B);
        if (!ea || !eb || *ea != *eb)
            return Outcome::violate(at + "no common unique element of largest degree");
    }
    if (!any)
        return eq ? Outcome{Outcome::Status::skipped, true, "sizes meet both thresholds with equality"}
                  : Outcome::skip();
    return Outcome::hold(eq);
}

std::vector<std::string> cross_stability_boundary(const InstanceSpace &space)
{
    std::vector<std::string> out;
    auto range_of = [&](std::string_view key) {
        return space.has(key) ? space.range(key) : ParamRange{0, -1};
    };
    const ParamRange nr = range_of("n"), ar = range_of("a"), br = range_of("b");
    if (space.has("u") && space.has("v") && !(space.range("u") == ParamRange{3, 3} && space.range("v") == ParamRange{3, 3}) &&
        space.kind == SpaceKind::all_cross_pairs)
        return out;
    for (long long n = nr.lo; n <= nr.hi; ++n)
        for (long long a = std::max(3LL, ar.lo); a <= ar.hi; ++a)
            for (long long b = std::max(3LL, br.lo); b <= br.hi; ++b) {
                if (n < a + b || out.size() >= 64)
                    continue;
                const int ni = static_cast<int>(n), ai = static_cast<int>(a), bi = static_cast<int>(b);
                const Family A = l_uv(ni, ai, 2, 2), B = l_uv(ni, bi, 2, 2);
                const BigInt ta = binom(ni - 1, ai - 1) - binom(ni - 4, ai - 1) + binom(ni - 4, ni - ai - 1);
                const BigInt tb = binom(ni - 1, bi - 1) - binom(ni - 4, bi - 1) + binom(ni - 4, ni - bi - 1);
                const BigInt ga = binom(ni - 4, ni - ai - 1), gb = binom(ni - 4, ni - bi - 1);
                out.push_back("L_{2,2}(" + std::to_string(n) + "," + std::to_string(a) + "), L_{2,2}(" +
                              std::to_string(n) + "," + std::to_string(b) + "): sizes " + num(A.size()) + "," +
                              num(B.size()) + " vs thresholds " + num(ta) + "," + num(tb) +
                              " at u=v=3 (non-strict), gamma " + num(gamma_of(A)) + "," + num(gamma_of(B)) +
                              " vs limits " + num(ga) + "," + num(gb));
            }
    return out;
}

Outcome check_cross_complement(const Instance &inst, const Context &)
{
    auto p = cross_pair(inst);
    if (!p || p->a == p->n)
        return Outcome::skip();
    const Family &A = inst.families[0], &B = inst.families[1];
    if (A.empty())
        return Outcome::skip();
    const int n = p->n, a = p->a, b = p->b;
    const double sa = static_cast<double>(A.size()), sb = static_cast<double>(B.size());
    std::vector<double> xs;
    for (int x = n - a; x <= n; ++x)
        if (geq(sa, gbinom(x, n - a)))
            xs.push_back(x);
    xs.push_back(std::clamp(inv_gbinom(sa, n - a), static_cast<double>(n - a), static_cast<double>(n)));
    bool eq = false;
    for (double x : xs) {
        const double bound = gbinom(n, b) - gbinom(x, b);
        if (sb > bound + 1e-6 * std::max(1.0, bound))
            return Outcome::violate("x = " + num(x) + ": |B| = " + num(sb) + " > " + num(bound));
        eq = eq || approx(sb, bound);
    }
    return Outcome::hold(eq);
}

Outcome check_cross_lex_segments(const Instance &inst, const Context &)
{
    auto p = cross_pair(inst);
    if (!p)
        return Outcome::skip();
    const Family la = lex_segment(p->n, static_cast<long long>(inst.families[0].size()), p->a);
    const Family lb = lex_segment(p->n, static_cast<long long>(inst.families[1].size()), p->b);
    const Family pair[] = {la, lb};
    if (!is_cross_t_intersecting(pair, 1))
        return Outcome::violate("lex segments of sizes " + num(la.size()) + "," + num(lb.size()) +
                                " are not cross-intersecting");
    return Outcome::hold();
}

Outcome check_cross_lex_shift(const Instance &inst, const Context &)
{
    auto p = cross_pair(inst);
    if (!p)
        return Outcome::skip();
    Family A = inst.families[0], B = inst.families[1];
    try {
        for (int steps = 0;; ++steps) {
            if (steps > 100000)
                return Outcome::violate("no fixed point after 100000 steps");
            auto step = cross_lex_shift_step(A, B);
            if (!step)
                break;
            A = std::move(step->a);
            B = std::move(step->b);
            const Family pair[] = {A, B};
            if (!is_cross_t_intersecting(pair, 1))
                return Outcome::violate("cross-intersection lost after step " + std::to_string(steps));
        }
    } catch (const Error &e) {
        if (e.code() != ErrorCode::internal)
            throw;
        return Outcome::violate(e.what());
    }
    if (A.size() != inst.families[0].size() || B.size() != inst.families[1].size())
        return Outcome::violate("sizes changed");
    if (!is_lex_segment(A) || !is_lex_segment(B))
        return Outcome::violate("fixed point is not a pair of lex segments");
    return Outcome::hold();
}

// ---- Kruskal-Katona stability ------------------------------------------------------------

Outcome check_kk_stability(const Instance &inst, const Context &)
{
    if (inst.families.empty()) {
        const int n = iparam(inst, "n"), k = iparam(inst, "k"), x = iparam(inst, "x"), y = iparam(inst, "y");
        if (!(n > k && k > 0 && x >= k - 1 && x <= n - 3 && y >= n - k && y <= n - 3))
            return Outcome::skip();
        const Family f = kk_xy(n, k, x, y);
        const BigInt size = binom(n, k) - binom(y, n - k) + binom(x, k - 1);
        const BigInt g = binom(x, k - 1);
        const BigInt rhs = binom(n, k - 1) - binom(y, n - k + 1) + binom(x, k - 2);
        const std::size_t gkk = kk_diversity(f, n).value;
        const std::size_t sh = immediate_shadow_size(f);
        if (big(f.size()) != size || big(gkk) != g || big(sh) != rhs)
            return Outcome::violate("|KK| = " + num(f.size()) + ", gamma_KK = " + num(gkk) + ", |shadow| = " +
                                    num(sh) + "; expected " + num(size) + ", " + num(g) + ", " + num(rhs));
        return Outcome::hold(true);
    }
    const Family &f = inst.families.at(0);
    auto u = uniform(f);
    if (!u || u->k < 1 || f.empty())
        return Outcome::skip();
    const int k = u->k;
    const BigInt size = big(f.size());
    const BigInt sh = big(immediate_shadow_size(f));
    bool any = false;
    bool eq = false;
    for (int n = k + 1; n <= u->n; ++n) {
        std::optional<BigInt> gkk;
        for (int x = k - 1; x <= n - 3; ++x)
            for (int y = n - k; y <= n - 3; ++y) {
                if (size < binom(n, k) - binom(y, n - k) + binom(x, k - 1))
                    continue;
                if (!gkk)
                    gkk = big(kk_diversity(f, n).value);
                if (*gkk < binom(x, k - 1))
                    continue;
                any = true;
                const BigInt rhs = binom(n, k - 1) - binom(y, n - k + 1) + binom(x, k - 2);
                if (sh < rhs)
                    return Outcome::violate("n=" + std::to_string(n) + ", x=" + std::to_string(x) +
                                            ", y=" + std::to_string(y) + ": |shadow| = " + num(sh) + " < " +
                                            num(rhs));
                eq = eq || sh == rhs;
            }
    }
    return any ? Outcome::hold(eq) : Outcome::skip();
}

// ---- shifting --------------------------------------------------------------------------

Outcome check_shifted_trace(const Instance &inst, const Context &ctx)
{
    const Family &f = inst.families.at(0);
    if (f.empty() || !is_shifted(f))
        return Outcome::skip();
    const Family avoid1 = trace(f, SetWord(), SetWord::singleton(1));
    bool any = false;
    for (auto [r, t] : rt_pairs(ctx, {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}})) {
        if (!is_r_wise_t_intersecting(f, r, t))
            continue;
        any = true;
        if (!is_r_wise_t_intersecting(avoid1, r, t + r - 1))
            return Outcome::violate("r=" + std::to_string(r) + ", t=" + std::to_string(t) +
                                    ": members avoiding 1 are not " + std::to_string(t + r - 1) + "-intersecting");
    }
    return any ? Outcome::hold() : Outcome::skip();
}

Outcome check_shifted_correlation(const Instance &inst, const Context &)
{
    if (inst.families.size() != 2)
        return Outcome::skip();
    const Family &f1 = inst.families[0], &f2 = inst.families[1];
    auto u1 = uniform(f1), u2 = uniform(f2);
    if (!u1 || !u2 || u1->n != u2->n || u1->k != u2->k || !is_shifted(f1) || !is_shifted(f2))
        return Outcome::skip();
    const BigInt lhs = big(intersection_size(f1, f2)) * binom(u1->n, u1->k);
    const BigInt rhs = big(f1.size()) * big(f2.size());
    if (lhs < rhs)
        return Outcome::violate("|F1 cap F2| C(n,k) = " + num(lhs) + " < |F1||F2| = " + num(rhs));
    return Outcome::hold(lhs == rhs);
}

void require_pairs(Context &ctx)
{
    require(ctx.space.kind == SpaceKind::all_shifted_families && ctx.space.get_or("pairs", 0) == 1,
            ErrorCode::invalid_argument, "this claim needs all-shifted-families with pairs=1");
}

Outcome check_shift_preserves(const Instance &inst, const Context &ctx)
{
    const Family &f = inst.families.at(0);
    const int n = f.ground_size();
    const std::size_t nu = matching_number(f);
    std::vector<std::pair<int, int>> held;
    for (auto rt : rt_pairs(ctx, {{2, 1}, {2, 2}, {3, 1}}))
        if (is_r_wise_t_intersecting(f, rt.first, rt.second))
            held.push_back(rt);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Family s = shift_ij(f, i, j);
            const std::string at = "S_" + std::to_string(i) + "," + std::to_string(j) + ": ";
            if (matching_number(s) > nu)
                return Outcome::violate(at + "matching number grew");
            for (auto [r, t] : held)
                if (!is_r_wise_t_intersecting(s, r, t))
                    return Outcome::violate(at + "lost " + std::to_string(r) + "-wise " + std::to_string(t) +
                                            "-intersection");
        }
    return Outcome::hold();
}

std::size_t difference_size(const Family &x, const Family &y)
{
    std::size_t out = 0;
    for (SetWord s : x)
        out += !y.contains(s);
    return out;
}

Outcome check_shift_degrees(const Instance &inst, const Context &)
{
    const Family &f = inst.families.at(0);
    const int n = f.ground_size();
    if (n < 2)
        return Outcome::skip();
    const auto df = degrees(f);
    const std::size_t gf = gamma_of(f);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const SetWord si = SetWord::singleton(i), sj = SetWord::singleton(j);
            const Family fij = trace(f, si, sj);  // i in, j out
            const Family fji = trace(f, sj, si);  // j in, i out
            const std::size_t d1 = difference_size(fji, fij);
            const std::size_t d2 = difference_size(fij, fji);
            const Family s = shift_ij(f, i, j);
            const auto ds = degrees(s);
            const std::string at = "S_" + std::to_string(i) + "," + std::to_string(j) + ": ";
            for (int x = 1; x <= n; ++x)
                if (x != i && x != j && ds[static_cast<std::size_t>(x)] != df[static_cast<std::size_t>(x)])
                    return Outcome::violate(at + "degree of " + std::to_string(x) + " changed");
            const auto dsi = ds[static_cast<std::size_t>(i)], dsj = ds[static_cast<std::size_t>(j)];
            if (dsj > dsi || dsi != df[static_cast<std::size_t>(i)] + d1 || dsi != df[static_cast<std::size_t>(j)] + d2)
                return Outcome::violate(at + "degrees of i, j do not match");
            const std::size_t gs = gamma_of(s);
            if (gs + std::min(d1, d2) < gf)
                return Outcome::violate(at + "diversity fell to " + num(gs) + " from " + num(gf));
            if (2 * std::min(d1, d2) > d1 + d2)
                return Outcome::violate(at + "symmetric difference bound fails");
        }
    return Outcome::hold();
}

Outcome check_shifted_degrees(const Instance &inst, const Context &)
{
    const Family &f = inst.families.at(0);
    const int n = f.ground_size();
    if (n < 1 || !is_shifted(f))
        return Outcome::skip();
    const auto d = degrees(f);
    for (int e = 1; e < n; ++e)
        if (d[static_cast<std::size_t>(e)] < d[static_cast<std::size_t>(e + 1)])
            return Outcome::violate("degree of " + std::to_string(e) + " below degree of " + std::to_string(e + 1));
    const std::size_t g = gamma_of(f);
    const std::size_t avoid1 = trace(f, SetWord(), SetWord::singleton(1)).size();
    if (g != avoid1 || g != f.size() - d[1])
        return Outcome::violate("gamma = " + num(g) + ", members avoiding 1 = " + num(avoid1));
    return Outcome::hold();
}

Outcome check_shifted_t_diversity(const Instance &inst, const Context &ctx)
{
    const Family &f = inst.families.at(0);
    auto u = uniform(f);
    if (!u || u->k < 1 || f.empty() || !is_shifted(f))
        return Outcome::skip();
    const int n = u->n, k = u->k;
    bool any = false;
    bool eq = false;
    const std::size_t g = gamma_of(f);
    for (int t = 1; t <= k; ++t) {
        if (ctx.t && *ctx.t != t)
            continue;
        if (n < 1 + (k - t) * (t + 2) || !is_r_wise_t_intersecting(f, 2, t))
            continue;
        any = true;
        const BigInt bound = binom(n - t - 2, k - t - 1);
        if (big(g) > bound)
            return Outcome::violate("t=" + std::to_string(t) + ": gamma = " + num(g) + " > " + num(bound));
        eq = eq || big(g) == bound;
    }
    return any ? Outcome::hold(eq) : Outcome::skip();
}

/// 2^e for possibly negative e, as an exact rational comparison gamma <= 2^e.
bool within_power_of_two(std::size_t g, int e) { return e < 0 ? g == 0 : big(g) <= (BigInt{1} << e); }

Outcome check_shifted_rwise(const Instance &inst, const Context &ctx)
{
    if (inst.families.empty()) {
        const int n = iparam(inst, "n"), r = iparam(inst, "r"), t = iparam(inst, "t");
        if (!(r >= 3 && t >= 1 && t <= (1 << r) - 2 * r && n >= r + t))
            return Outcome::skip();
        const Family f = rwise_example(n, std::nullopt, r, t);
        if (!is_r_wise_t_intersecting(f, r, t) || !is_shifted(f))
            return Outcome::violate("example is not a shifted r-wise t-intersecting family");
        const std::size_t g = gamma_of(f);
        if (big(g) != (BigInt{1} << (n - r - t)))
            return Outcome::violate("gamma = " + num(g) + ", expected 2^" + std::to_string(n - r - t));
        return Outcome::hold(true);
    }
    const Family &f = inst.families.at(0);
    const int n = f.ground_size();
    if (f.empty() || !is_shifted(f))
        return Outcome::skip();
    std::vector<std::pair<int, int>> sweep;
    for (int r = 3; r <= 4; ++r)
        for (int t = 1; t <= std::min(n, (1 << r) - 2 * r); ++t)
            sweep.emplace_back(r, t);
    bool any = false;
    bool eq = false;
    const std::size_t g = gamma_of(f);
    for (auto [r, t] : rt_pairs(ctx, sweep)) {
        if (r < 3 || t < 1 || t > (1 << r) - 2 * r || !is_r_wise_t_intersecting(f, r, t))
            continue;
        any = true;
        if (!within_power_of_two(g, n - r - t))
            return Outcome::violate("r=" + std::to_string(r) + ", t=" + std::to_string(t) + ": gamma = " + num(g));
        eq = eq || (n >= r + t && big(g) == (BigInt{1} << (n - r - t)));
    }
    return any ? Outcome::hold(eq) : Outcome::skip();
}

// ---- r-wise t-intersecting uniform families ------------------------------------------------

Outcome check_rwise(const Instance &inst, const Context &ctx)
{
    if (inst.families.empty()) {
        const int n = iparam(inst, "n"), k = iparam(inst, "k"), r = iparam(inst, "r"), t = iparam(inst, "t");
        if (!(r >= 2 && t >= 1 && k >= r + t - 1 && n >= k + 1))
            return Outcome::skip();
        const Family f = rwise_example(n, k, r, t);
        if (!is_r_wise_t_intersecting(f, r, t))
            return Outcome::violate("example is not r-wise t-intersecting");
        const std::size_t g = gamma_of(f);
        const BigInt bound = binom(n - r - t, k - r - t + 1);
        if (big(g) != bound)
            return Outcome::violate("gamma = " + num(g) + ", expected " + num(bound));
        return Outcome::hold(true);
    }
    const Family &f = inst.families.at(0);
    auto u = uniform(f);
    if (!u || f.empty())
        return Outcome::skip();
    const int n = u->n, k = u->k;
    std::vector<std::pair<int, int>> sweep;
    for (int r = 3; r <= std::max(3, k); ++r)
        for (int t = 1; r + t - 1 <= k; ++t)
            sweep.emplace_back(r, t);
    bool any = false;
    bool eq = false;
    const std::size_t g = gamma_of(f);
    for (auto [r, t] : rt_pairs(ctx, sweep)) {
        if (r < 3 || t < 1 || !is_r_wise_t_intersecting(f, r, t))
            continue;
        any = true;
        const BigInt bound = binom(n - r - t, k - r - t + 1);
        if (big(g) > bound)
            return Outcome::violate("r=" + std::to_string(r) + ", t=" + std::to_string(t) + ": gamma = " + num(g) +
                                    " > " + num(bound));
        eq = eq || big(g) == bound;
    }
    return any ? Outcome::hold(eq) : Outcome::skip();
}

bool rwise_exploratory(const InstanceSpace &space)
{
    if (space.kind == SpaceKind::constructions_grid)
        return false;
    if (!space.has("n") || !space.has("k"))
        return true;
    const long long n = space.range("n").lo, k = space.range("k").hi;
    const long long r = space.has("r") ? space.range("r").hi : k;
    const long long t = space.has("t") ? space.range("t").hi : k;
    return n <= std::max(15LL, 2 * (r + t)) * k;
}

// ---- s-diversity ---------------------------------------------------------------------------

std::size_t members_avoiding(const Family &f, SetWord r)
{
    std::size_t out = 0;
    for (SetWord s : f)
        out += s.disjoint(r);
    return out;
}

Outcome check_a2(const Instance &inst, const Context &)
{
    if (inst.families.empty()) {
        const int n = iparam(inst, "n"), k = iparam(inst, "k"), s = iparam(inst, "s");
        if (!(s >= 1 && k >= 2 && n > k * (s + 1)))
            return Outcome::skip();
        const Family f = a2(n, k, s);
        const std::size_t nu = matching_number(f);
        const std::size_t at_prefix = members_avoiding(f, SetWord::prefix(s));
        const std::size_t gs = s_diversity(f, s).value;
        if (nu != static_cast<std::size_t>(s))
            return Outcome::violate("matching number " + num(nu) + ", expected " + std::to_string(s));
        if (gs != at_prefix)
            return Outcome::violate("gamma_s = " + num(gs) + " but " + num(at_prefix) + " members avoid [s]");
        return Outcome::hold(true);
    }
    const Family &f = inst.families.at(0);
    auto u = uniform(f);
    if (!u || u->k < 2 || f.empty())
        return Outcome::skip();
    const int s = static_cast<int>(matching_number(f));
    if (u->n <= u->k * (s + 1))
        return Outcome::skip();
    const std::size_t bound = members_avoiding(a2(u->n, u->k, s), SetWord::prefix(s));
    const std::size_t gs = s_diversity(f, s).value;
    if (gs > bound)
        return Outcome::violate("s=" + std::to_string(s) + ": gamma_s = " + num(gs) + " > " + num(bound));
    return Outcome::hold(gs == bound);
}

Outcome check_graph(const Instance &inst, const Context &)
{
    const Family &g = inst.families.at(0);
    auto u = uniform(g);
    if (!u || u->k != 2 || g.empty())
        return Outcome::skip();
    SetWord covered;
    for (SetWord e : g)
        covered = covered | e;
    if (covered.cardinality() != u->n)
        return Outcome::skip();
    const int n = u->n;
    const int s = static_cast<int>(matching_number(g));
    const std::size_t gs = s_diversity(g, s).value;
    const auto top = static_cast<std::size_t>(binom(s + 1, 2));
    const bool complete_2s1 = n == 2 * s + 1 && g.size() == static_cast<std::size_t>(binom(n, 2));
    if (gs > top)
        return Outcome::violate("gamma_s = " + num(gs) + " > C(s+1,2) = " + num(top));
    if ((gs == top) != complete_2s1)
        return Outcome::violate("equality case mismatch: gamma_s = " + num(gs) + ", n = " + std::to_string(n));
    if (n > 2 * s + 1) {
        const auto second = static_cast<std::size_t>(binom(s, 2)) + 1;
        if (gs > second)
            return Outcome::violate("not inside K_{2s+1} but gamma_s = " + num(gs) + " > " + num(second));
    }
    return Outcome::hold(gs == top);
}

// ---- nonuniform families -----------------------------------------------------------------

Outcome check_duality(const Instance &inst, const Context &ctx)
{
    const Family &f = inst.families.at(0);
    if (f.ground_size() < 1)
        return Outcome::skip();
    const Family c = complement_family(f);
    for (auto [r, t] : rt_pairs(ctx, {{2, 1}, {2, 2}, {3, 1}}))
        if (is_r_wise_t_intersecting(f, r, t) != is_r_wise_t_union(c, r, t))
            return Outcome::violate("r=" + std::to_string(r) + ", t=" + std::to_string(t) + ": properties differ");
    if (gamma_of(f) != min_degree(c).count)
        return Outcome::violate("gamma = " + num(gamma_of(f)) + ", minimum degree of complements = " +
                                num(min_degree(c).count));
    return Outcome::hold();
}

Outcome check_katona(const Instance &inst, const Context &ctx)
{
    if (inst.families.empty()) {
        const int n = iparam(inst, "n"), t = iparam(inst, "t");
        if (!(t >= 1 && n >= t && n <= 20))
            return Outcome::skip();
        const Family f = katona_family(n, t);
        if (!is_r_wise_t_intersecting(f, 2, t))
            return Outcome::violate("example is not t-intersecting");
        if (big(f.size()) != katona_bound(n, t))
            return Outcome::violate("|F| = " + num(f.size()) + ", bound " + num(katona_bound(n, t)));
        return Outcome::hold(true);
    }
    const Family &f = inst.families.at(0);
    const int n = f.ground_size();
    bool any = false;
    bool eq = false;
    for (int t = 1; t <= n; ++t) {
        if ((ctx.t && *ctx.t != t) || !is_r_wise_t_intersecting(f, 2, t))
            continue;
        any = true;
        const BigInt bound = katona_bound(n, t);
        if (big(f.size()) > bound)
            return Outcome::violate("t=" + std::to_string(t) + ": |F| = " + num(f.size()) + " > " + num(bound));
        eq = eq || big(f.size()) == bound;
    }
    return any ? Outcome::hold(eq) : Outcome::skip();
}

Outcome check_t_diversity(const Instance &inst, const Context &ctx)
{
    if (inst.families.empty()) {
        const int n = iparam(inst, "n"), t = iparam(inst, "t");
        if (!(t >= 2 && n >= t + 1 && n <= 20))
            return Outcome::skip();
        const Family f = katona_family(n, t);
        const std::size_t g = gamma_of(f);
        const BigInt bound = katona_bound(n - 1, t);
        if (big(g) > bound)
            return Outcome::violate("gamma = " + num(g) + " > " + num(bound));
        return Outcome::hold(big(g) == bound, "gamma/2^(n-2) = " + num(std::ldexp(static_cast<double>(g), 2 - n)));
    }
    const Family &f = inst.families.at(0);
    const int n = f.ground_size();
    if (n < 2)
        return Outcome::skip();
    bool any = false;
    bool eq = false;
    const std::size_t g = gamma_of(f);
    for (int t = 2; t <= n; ++t) {
        if ((ctx.t && *ctx.t != t) || !is_r_wise_t_intersecting(f, 2, t))
            continue;
        any = true;
        const BigInt bound = katona_bound(n - 1, t);
        if (big(g) > bound)
            return Outcome::violate("t=" + std::to_string(t) + ": gamma = " + num(g) + " > " + num(bound));
        eq = eq || big(g) == bound;
    }
    return any ? Outcome::hold(eq) : Outcome::skip();
}

Outcome check_influence(const Instance &inst, const Context &)
{
    if (inst.families.empty()) {
        const int n = iparam(inst, "n");
        if (n < 3 || n > 20)
            return Outcome::skip();
        const Family f = kalai_circle(n);
        if (big(f.size()) != (BigInt{1} << (n - 1)))
            return Outcome::violate("|F| = " + num(f.size()));
        if (!is_up_closed(f) || !is_intersecting(f))
            return Outcome::violate("not an intersecting up-set");
        const SetWord full = SetWord::prefix(n);
        for (SetWord s : f)
            if (f.contains(full - s))
                return Outcome::violate("contains a set and its complement");
        const double residual = influence_identity_residual(f);
        if (std::abs(residual) > 1e-12)
            return Outcome::violate("identity residual " + num(residual));
        const auto in = influences(f);
        const double max_i = *std::max_element(in.begin(), in.end());
        return Outcome::hold(false, "max influence " + num(max_i) + ", n*max/log n " +
                                        num(max_i * n / std::log(static_cast<double>(n))));
    }
    const Family &f = inst.families.at(0);
    const int n = f.ground_size();
    if (n < 2)
        return Outcome::skip();
    bool any = false;
    if (is_up_closed(f)) {
        any = true;
        const double residual = influence_identity_residual(f);
        if (std::abs(residual) > 1e-12)
            return Outcome::violate("identity residual " + num(residual));
    }
    if (is_intersecting(f)) {
        any = true;
        if (big(gamma_of(f)) > (BigInt{1} << (n - 2)))
            return Outcome::violate("gamma = " + num(gamma_of(f)) + " > 2^(n-2)");
    }
    return any ? Outcome::hold() : Outcome::skip();
}

// ---- analytic and padding checks ------------------------------------------------------------

Outcome check_fgh(const Instance &inst, const Context &)
{
    const int m = iparam(inst, "m"), t = iparam(inst, "t"), s = iparam(inst, "s");
    if (!(s >= 2 && t >= 2 && m >= s + t - 1))
        return Outcome::skip();
    const FghCheck c = analyze_fgh(m, t, s);
    if (!c.monotone || !c.strictly_monotone || !c.tail_property || !c.endpoint_identity || !c.h_monotone)
        return Outcome::violate(c.detail.empty() ? "analytic property fails" : c.detail);
    return Outcome::hold();
}

Outcome check_cross_t_product(const Instance &inst, const Context &)
{
    const int n = iparam(inst, "n"), k = iparam(inst, "k"), t = iparam(inst, "t");
    const int alpha = inst.params.count("alpha") ? iparam(inst, "alpha") : 0;
    if (!(k >= t && t >= 1 && n >= k + 1 && alpha >= 0 && n + alpha <= max_ground_size))
        return Outcome::skip();
    std::vector<SetWord> members;
    for_each_subset_of_size(SetWord::prefix(n) - SetWord::prefix(t), k - t,
                            [&](SetWord s) { members.push_back(s | SetWord::prefix(t)); });
    const Family tstar(n, std::move(members), k);
    const Family pair[] = {tstar, tstar};
    const BigInt bound = binom(n - t, k - t) * binom(n - t, k - t);
    if (!is_cross_t_intersecting(pair, t) || big(tstar.size()) * big(tstar.size()) != bound)
        return Outcome::violate("t-star pair does not meet the product bound");
    if (alpha > 0) {
        const auto [pa, pb] = pad_cross_families(tstar, tstar, alpha);
        const Family padded[] = {pa, pb};
        if (!is_cross_t_intersecting(padded, t + alpha) || pa.size() != tstar.size() || pb.size() != tstar.size())
            return Outcome::violate("padding broke cross intersection or sizes");
        const BigInt shifted = binom((n + alpha) - (t + alpha), (k + alpha) - (t + alpha));
        if (shifted * shifted != bound)
            return Outcome::violate("padded bound differs");
    }
    return Outcome::hold(true);
}

// ---- catalogue -------------------------------------------------------------------------------

std::vector<Definition> definitions()
{
    std::vector<Definition> d;
    d.push_back({"lovasz-shadow", "|F| = C(x,k) for real x >= k implies |shadow F| >= C(x,k-1)", family_kinds,
                 check_lovasz, {}, {}, {}});
    d.push_back({"kruskal-katona", "|shadow F| >= |shadow C([n],|F|,k)| >= Lovasz bound", family_kinds, check_kk,
                 prepare_kk, {}, {}});
    d.push_back({"colex-compression-shadow", "colex Daykin shifts never increase the immediate shadow", family_kinds,
                 check_compression, {}, {}, {}});
    d.push_back({"intersecting-diversity-size",
                 "intersecting F, n > 2k, gamma >= C(n-u-1,n-k-1) for real 3 <= u <= k implies "
                 "|F| <= C(n-1,k-1)+C(n-u-1,n-k-1)-C(n-u-1,k-1); sharp for L_{u,u}",
                 with_grid(family_kinds), check_kz, {}, {}, {}});
    d.push_back({"cross-ekr", "cross-intersecting A,B with |A| >= C(n-1,a-1) have |B| <= C(n-1,b-1)",
                 with_grid(cross_kinds), check_cross_ekr, {}, {}, {}});
    d.push_back({"cross-stability",
                 "size thresholds for real 3 <= u <= a, 3 <= v <= b, one strict, force gamma(A) < C(n-u-1,n-a-1), "
                 "gamma(B) < C(n-v-1,n-b-1) and a common unique max-degree element; sharp for L_{u,v}, L_{v,u}",
                 with_grid(cross_kinds), check_cross_stability, {},
                 [](const InstanceSpace &s) {
                     if (s.kind != SpaceKind::all_cross_pairs || !s.has("u") || !s.has("v"))
                         return false;
                     const auto u = s.range("u"), v = s.range("v");
                     return u.lo < 3 || v.lo < 3 || u.hi > s.get("a") || v.hi > s.get("b");
                 },
                 cross_stability_boundary});
    d.push_back({"cross-complement-size", "cross-intersecting, |A| >= C(x,n-a) implies |B| <= C(n,b)-C(x,b)",
                 cross_kinds, check_cross_complement, {}, {}, {}});
    d.push_back({"cross-lex-segments", "lex segments of the sizes of a cross-intersecting pair are cross-intersecting",
                 cross_kinds, check_cross_lex_segments, {}, {}, {}});
    d.push_back({"cross-lex-shift", "simultaneous lex Daykin shifts keep a pair cross-intersecting and end at lex segments",
                 cross_kinds, check_cross_lex_shift, {}, {}, {}});
    d.push_back({"kk-stability",
                 "|F| >= C(n,k)-C(y,n-k)+C(x,k-1), gamma_KK(F,n) >= C(x,k-1) imply "
                 "|shadow F| >= C(n,k-1)-C(y,n-k+1)+C(x,k-2); sharp for KK_{x,y}",
                 with_grid(family_kinds), check_kk_stability, {}, {}, {}});
    d.push_back({"shifted-trace-rwise", "shifted r-wise t-intersecting F: F(not 1) is r-wise (t+r-1)-intersecting",
                 family_kinds, check_shifted_trace, {}, {}, {}});
    d.push_back({"shifted-correlation", "shifted F1,F2 in C([n],k): |F1 cap F2| >= |F1||F2|/C(n,k)",
                 {SpaceKind::all_shifted_families}, check_shifted_correlation, require_pairs, {}, {}});
    d.push_back({"shift-preserves-intersection", "S_ij keeps r-wise t-intersection and does not raise the matching number",
                 family_kinds, check_shift_preserves, {}, {}, {}});
    d.push_back({"shift-degrees", "degree and diversity changes under S_ij", family_kinds, check_shift_degrees, {}, {},
                 {}});
    d.push_back({"shifted-degrees", "shifted F: degrees non-increasing and gamma = |F| - d(1)", family_kinds,
                 check_shifted_degrees, {}, {}, {}});
    d.push_back({"shifted-t-diversity",
                 "shifted t-intersecting F in C([n],k), n >= 1+(k-t)(t+2): gamma <= C(n-t-2,k-t-1)", family_kinds,
                 check_shifted_t_diversity, {}, {}, {}});
    d.push_back({"shifted-rwise-diversity", "shifted r-wise t-intersecting F, r >= 3, t <= 2^r-2r: gamma <= 2^(n-r-t)",
                 with_grid(family_kinds), check_shifted_rwise, {}, {}, {}});
    d.push_back({"rwise-diversity",
                 "r-wise t-intersecting F in C([n],k), r >= 3, n > max(15,2(r+t))k: gamma <= C(n-r-t,k-r-t+1)",
                 with_grid(family_kinds), check_rwise, {}, rwise_exploratory, {}});
    d.push_back({"s-diversity-a2", "nu(F) = s, n large: gamma_s(F) <= gamma_s(A_2(n,k,s))", with_grid(family_kinds),
                 check_a2, {}, [](const InstanceSpace &s) { return s.kind != SpaceKind::constructions_grid; }, {}});
    d.push_back({"graph-s-diversity",
                 "graph without isolated vertices, nu = s: gamma_s <= C(s+1,2), equality iff K_{2s+1}; "
                 "<= C(s,2)+1 outside K_{2s+1}",
                 {SpaceKind::all_graphs, SpaceKind::random_sample}, check_graph, {}, {}, {}});
    d.push_back({"complement-duality", "r-wise t-intersecting with gamma d iff complements r-wise t-union of min degree d",
                 family_kinds, check_duality, {}, {}, {}});
    d.push_back({"katona-t-intersecting", "t-intersecting F in 2^[n] has |F| <= Katona's bound; sharp",
                 with_grid(family_kinds), check_katona, {}, {}, {}});
    d.push_back({"t-intersecting-diversity", "t-intersecting F in 2^[n], t >= 2: gamma(F) <= Katona bound on n-1 points",
                 with_grid(family_kinds), check_t_diversity, {}, {}, {}});
    d.push_back({"influence-diversity",
                 "up-sets: max influence / 2 + 2 gamma / 2^n = mu; intersecting: gamma <= 2^(n-2); Kalai circle family",
                 with_grid(family_kinds), check_influence, {}, {}, {}});
    d.push_back({"fgh-analytics", "monotonicity, tail and endpoint properties of f(x,m,t,s)",
                 {SpaceKind::constructions_grid}, check_fgh, {}, {}, {}});
    d.push_back({"cross-t-product", "cross t-intersecting product bound C(n-t,k-t)^2 is met by t-stars and survives padding",
                 {SpaceKind::constructions_grid}, check_cross_t_product, {}, {}, {}});
    return d;
}

} // namespace

std::unique_ptr<Claim> make_claim(std::string_view id)
{
    for (auto &def : definitions())
        if (def.id == id)
            return std::make_unique<GenericClaim>(std::move(def));
    fail(ErrorCode::unknown_claim, "unknown claim '" + std::string(id) + "'");
}

std::vector<std::string> claim_ids()
{
    std::vector<std::string> out;
    for (const auto &def : definitions())
        out.push_back(def.id);
    return out;
}

} // namespace shadowlab
