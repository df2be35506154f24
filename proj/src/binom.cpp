#include "shadowlab/binom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shadowlab/error.hpp"

namespace shadowlab {

std::string to_string(BigInt v)
{
    if (v == 0)
        return "0";
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string out;
    while (u != 0) {
        out += static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    if (negative)
        out += '-';
    std::reverse(out.begin(), out.end());
    return out;
}

BigInt binom(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

double gbinom(double x, int k)
{
    require(k >= 0, ErrorCode::invalid_argument, "binomial order must be non-negative");
    require(!std::isnan(x), ErrorCode::invalid_argument, "binomial argument is NaN");
    if (x < k)
        return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i)
        r = r * (x - i) / (i + 1);
    return r;
}

double inv_gbinom(double m, int k)
{
    require(k >= 1, ErrorCode::invalid_argument, "inverse binomial needs k >= 1");
    require(!std::isnan(m) && m >= 1.0, ErrorCode::out_of_range, "inverse binomial needs m >= 1");
    if (k == 1)
        return m;
    double lo = k;
    double hi = k + 2.0 * m;
    while (gbinom(hi, k) < m)
        hi = k + 2.0 * (hi - k);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (gbinom(mid, k) < m)
            lo = mid;
        else
            hi = mid;
    }
    // Both ends are adjacent doubles by now; keep the closer one.
    return std::abs(gbinom(lo, k) - m) <= std::abs(gbinom(hi, k) - m) ? lo : hi;
}

double kk_bound(double m, int k)
{
    require(!std::isnan(m) && m >= 1.0, ErrorCode::out_of_range, "shadow bound needs m >= 1");
    return gbinom(inv_gbinom(m, k), k - 1);
}

// ---- Rational ------------------------------------------------------------------

namespace {

BigInt gcd128(BigInt a, BigInt b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational Rational::of(BigInt n, BigInt d)
{
    require(d != 0, ErrorCode::invalid_argument, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const BigInt g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {n, d};
}

Rational Rational::operator+(const Rational &o) const
{
    const BigInt g = gcd128(den, o.den);
    return of(num * (o.den / g) + o.num * (den / g), den / g * o.den);
}

Rational Rational::operator-(const Rational &o) const { return *this + Rational{-o.num, o.den}; }

Rational Rational::operator*(const Rational &o) const
{
    const BigInt g1 = gcd128(num, o.den);
    const BigInt g2 = gcd128(o.num, den);
    const BigInt a = g1 == 0 ? num : num / g1;
    const BigInt d2 = g1 == 0 ? o.den : o.den / g1;
    const BigInt b = g2 == 0 ? o.num : o.num / g2;
    const BigInt d1 = g2 == 0 ? den : den / g2;
    return of(a * b, d1 * d2);
}

Rational Rational::operator/(const Rational &o) const
{
    require(o.num != 0, ErrorCode::invalid_argument, "division by zero");
    return *this * of(o.den, o.num);
}

// ---- named bounds ----------------------------------------------------------------

namespace {

struct BoundEntry {
    BoundName name;
    std::string_view text;
};

constexpr BoundEntry bound_table[] = {
    {BoundName::kk, "kk"},
    {BoundName::ekr_diversity, "ekr_diversity"},
    {BoundName::ekr_diversity_gamma, "ekr_diversity_gamma"},
    {BoundName::cross_ekr, "cross_ekr"},
    {BoundName::cross_size_a, "cross_size_a"},
    {BoundName::cross_size_b, "cross_size_b"},
    {BoundName::cross_gamma_a, "cross_gamma_a"},
    {BoundName::cross_gamma_b, "cross_gamma_b"},
    {BoundName::cross_ratio, "cross_ratio"},
    {BoundName::kk_stability, "kk_stability"},
    {BoundName::kk_stability_size, "kk_stability_size"},
    {BoundName::kk_stability_gamma, "kk_stability_gamma"},
    {BoundName::rwise_gamma, "rwise_gamma"},
    {BoundName::shifted_t_gamma, "shifted_t_gamma"},
    {BoundName::shifted_rwise_gamma, "shifted_rwise_gamma"},
    {BoundName::complement_cross, "complement_cross"},
    {BoundName::flst, "flst"},
    {BoundName::katona, "katona"},
    {BoundName::a2_s_diversity, "a2_s_diversity"},
};

double choose(double x, double k) { return gbinom(x, static_cast<int>(k)); }
BigInt choose(BigInt x, BigInt k) { return binom(static_cast<long long>(x), static_cast<long long>(k)); }

class ParamReader {
public:
    ParamReader(BoundName name, const BoundParams &p) : name_(name), p_(p) {}

    double get(const char *key)
    {
        auto it = p_.find(key);
        require(it != p_.end(), ErrorCode::invalid_argument,
                std::string(to_string(name_)) + " needs parameter --" + key);
        require(std::isfinite(it->second), ErrorCode::invalid_argument, std::string("parameter ") + key + " is not finite");
        if (it->second != std::floor(it->second))
            integral_ = false;
        return it->second;
    }

    /// A parameter that must be an integer by the statement itself.
    long long get_int(const char *key)
    {
        const double v = get(key);
        require(v == std::floor(v), ErrorCode::invalid_argument, std::string("parameter ") + key + " must be an integer");
        return static_cast<long long>(v);
    }

    void check(bool ok, const std::string &what)
    {
        require(ok, ErrorCode::out_of_range, std::string(to_string(name_)) + ": " + what);
    }

    bool integral() const { return integral_; }

private:
    BoundName name_;
    const BoundParams &p_;
    bool integral_ = true;
};

template <class T>
BoundValue both(ParamReader &r, const std::vector<double> &args, T &&formula)
{
    BoundValue out;
    out.value = formula(args, [](double v) { return v; });
    if (r.integral()) {
        std::vector<BigInt> exact_args;
        for (double a : args)
            exact_args.push_back(static_cast<BigInt>(static_cast<long long>(a)));
        out.exact = formula(exact_args, [](BigInt v) { return v; });
    }
    return out;
}

} // namespace

std::optional<BoundName> bound_from_string(std::string_view name)
{
    for (const auto &e : bound_table)
        if (e.text == name)
            return e.name;
    return std::nullopt;
}

std::string_view to_string(BoundName name)
{
    for (const auto &e : bound_table)
        if (e.name == name)
            return e.text;
    return "?";
}

std::vector<BoundName> all_bounds()
{
    std::vector<BoundName> out;
    for (const auto &e : bound_table)
        out.push_back(e.name);
    return out;
}

BigInt katona_bound(int n, int t)
{
    require(n >= 1 && t >= 1, ErrorCode::out_of_range, "katona bound needs n >= 1 and t >= 1");
    BigInt total = 0;
    if ((n + t) % 2 == 0) {
        for (int i = (n + t) / 2; i <= n; ++i)
            total += binom(n, i);
    } else {
        for (int i = (n + t - 1) / 2; i <= n - 1; ++i)
            total += binom(n - 1, i);
        total *= 2;
    }
    return total;
}

BoundValue evaluate_bound(BoundName name, const BoundParams &params)
{
    ParamReader r(name, params);
    switch (name) {
    case BoundName::kk: {
        const double m = r.get("m");
        const long long k = r.get_int("k");
        r.check(k >= 1, "needs k >= 1");
        r.check(m >= 1, "needs m >= 1");
        BoundValue out{kk_bound(m, static_cast<int>(k)), std::nullopt};
        if (k == 1 && m == std::floor(m))
            out.exact = 1;
        else if (m == std::floor(m) && m <= 1e15)
            for (long long x = k; binom(x, k) <= static_cast<BigInt>(m); ++x)
                if (binom(x, k) == static_cast<BigInt>(m)) {
                    out.exact = binom(x, k - 1);
                    break;
                }
        return out;
    }
    case BoundName::ekr_diversity:
    case BoundName::ekr_diversity_gamma: {
        const double n = r.get("n"), k = r.get("k"), u = r.get("u");
        r.check(k > 0 && n > 2 * k, "needs n > 2k > 0");
        r.check(u >= 3 && u <= k, "needs 3 <= u <= k");
        if (name == BoundName::ekr_diversity_gamma)
            return both(r, {n, k, u}, [](auto a, auto one) {
                auto n = a[0], k = a[1], u = a[2];
                return choose(n - u - one(1), n - k - one(1));
            });
        return both(r, {n, k, u}, [](auto a, auto one) {
            auto n = a[0], k = a[1], u = a[2];
            return choose(n - one(1), k - one(1)) + choose(n - u - one(1), n - k - one(1)) -
                   choose(n - u - one(1), k - one(1));
        });
    }
    case BoundName::cross_ekr: {
        const double n = r.get("n"), a = r.get("a"), b = r.get("b");
        r.check(a >= 1 && b >= 1 && n >= a + b, "needs a, b >= 1 and n >= a + b");
        return both(r, {n, b}, [](auto p, auto one) { return choose(p[0] - one(1), p[1] - one(1)); });
    }
    case BoundName::cross_size_a:
    case BoundName::cross_size_b:
    case BoundName::cross_gamma_a:
    case BoundName::cross_gamma_b: {
        const double n = r.get("n"), a = r.get("a"), b = r.get("b"), u = r.get("u"), v = r.get("v");
        r.check(a >= 1 && b >= 1 && n >= a + b, "needs a, b >= 1 and n >= a + b");
        r.check(u >= 3 && u <= a, "needs 3 <= u <= a");
        r.check(v >= 3 && v <= b, "needs 3 <= v <= b");
        const std::vector<double> args{n, a, b, u, v};
        switch (name) {
        case BoundName::cross_size_a:
            return both(r, args, [](auto p, auto one) {
                auto n = p[0], a = p[1], u = p[3], v = p[4];
                return choose(n - one(1), a - one(1)) - choose(n - v - one(1), a - one(1)) +
                       choose(n - u - one(1), n - a - one(1));
            });
        case BoundName::cross_size_b:
            return both(r, args, [](auto p, auto one) {
                auto n = p[0], b = p[2], u = p[3], v = p[4];
                return choose(n - one(1), b - one(1)) - choose(n - u - one(1), b - one(1)) +
                       choose(n - v - one(1), n - b - one(1));
            });
        case BoundName::cross_gamma_a:
            return both(r, args, [](auto p, auto one) { return choose(p[0] - p[3] - one(1), p[0] - p[1] - one(1)); });
        default:
            return both(r, args, [](auto p, auto one) { return choose(p[0] - p[4] - one(1), p[0] - p[2] - one(1)); });
        }
    }
    case BoundName::cross_ratio: {
        const double n = r.get("n"), k = r.get("k"), x = r.get("x");
        r.check(k >= 1 && n >= 2 * k, "needs n >= 2k >= 2");
        r.check(x >= k - 1, "needs x >= k - 1");
        return {gbinom(x, static_cast<int>(n - k - 1)) / gbinom(x, static_cast<int>(k - 1)), std::nullopt};
    }
    case BoundName::kk_stability:
    case BoundName::kk_stability_size:
    case BoundName::kk_stability_gamma: {
        const double n = r.get("n"), k = r.get("k"), x = r.get("x"), y = r.get("y");
        r.check(k > 0 && n > k, "needs n > k > 0");
        r.check(x >= k - 1 && x <= n - 3, "needs k - 1 <= x <= n - 3");
        r.check(y >= n - k && y <= n - 3, "needs n - k <= y <= n - 3");
        const std::vector<double> args{n, k, x, y};
        if (name == BoundName::kk_stability)
            return both(r, args, [](auto p, auto one) {
                auto n = p[0], k = p[1], x = p[2], y = p[3];
                return choose(n, k - one(1)) - choose(y, n - k + one(1)) + choose(x, k - one(2));
            });
        if (name == BoundName::kk_stability_size)
            return both(r, args, [](auto p, auto one) {
                auto n = p[0], k = p[1], x = p[2], y = p[3];
                return choose(n, k) - choose(y, n - k) + choose(x, k - one(1));
            });
        return both(r, args, [](auto p, auto one) { return choose(p[2], p[1] - one(1)); });
    }
    case BoundName::rwise_gamma: {
        const long long n = r.get_int("n"), k = r.get_int("k"), rr = r.get_int("r"), t = r.get_int("t");
        r.check(rr >= 3 && t >= 1 && k >= 1, "needs r >= 3, t >= 1, k >= 1");
        r.check(n > std::max<long long>(15, 2 * (rr + t)) * k, "needs n > max(15, 2(r+t)) k");
        const BigInt v = binom(n - rr - t, k - rr - t + 1);
        return {static_cast<double>(v), v};
    }
    case BoundName::shifted_t_gamma: {
        const long long n = r.get_int("n"), k = r.get_int("k"), t = r.get_int("t");
        r.check(t >= 1 && k >= t, "needs k >= t >= 1");
        r.check(n >= 1 + (k - t) * (t + 2), "needs n >= 1 + (k-t)(t+2)");
        const BigInt v = binom(n - t - 2, k - t - 1);
        return {static_cast<double>(v), v};
    }
    case BoundName::shifted_rwise_gamma: {
        const long long n = r.get_int("n"), rr = r.get_int("r"), t = r.get_int("t");
        r.check(rr >= 3 && t >= 1, "needs r >= 3 and t >= 1");
        r.check(rr >= 62 || t <= (1LL << rr) - 2 * rr, "needs t <= 2^r - 2r");
        r.check(n >= 0 && n <= 64, "needs 0 <= n <= 64");
        const long long e = n - rr - t;
        BoundValue out{std::ldexp(1.0, static_cast<int>(e)), std::nullopt};
        if (e >= 0)
            out.exact = BigInt{1} << e;
        return out;
    }
    case BoundName::complement_cross: {
        const double n = r.get("n"), a = r.get("a"), b = r.get("b"), x = r.get("x");
        r.check(a >= 1 && b >= 1 && n >= a + b, "needs a, b >= 1 and n >= a + b");
        r.check(x >= n - a && x <= n, "needs n - a <= x <= n");
        return both(r, {n, b, x}, [](auto p, auto) { return choose(p[0], p[1]) - choose(p[2], p[1]); });
    }
    case BoundName::flst: {
        const long long n = r.get_int("n"), k = r.get_int("k"), t = r.get_int("t");
        r.check(k >= t && t >= 1, "needs k >= t >= 1");
        r.check(n >= std::max(15 * k, (t + 1) * k), "needs n >= max(15k, (t+1)k)");
        const BigInt c = binom(n - t, k - t);
        return {static_cast<double>(c) * static_cast<double>(c), c * c};
    }
    case BoundName::katona: {
        const long long n = r.get_int("n"), t = r.get_int("t");
        r.check(n >= 1 && n <= 64 && t >= 1, "needs 1 <= n <= 64 and t >= 1");
        const BigInt v = katona_bound(static_cast<int>(n), static_cast<int>(t));
        return {static_cast<double>(v), v};
    }
    case BoundName::a2_s_diversity: {
        const long long n = r.get_int("n"), k = r.get_int("k"), s = r.get_int("s");
        r.check(s >= 1 && k >= 2 && n >= 2 * s + 1 && k <= n, "needs s >= 1, 2 <= k <= n, n >= 2s + 1");
        BigInt v = 0;
        for (long long j = 2; j <= k; ++j)
            v += binom(s + 1, j) * binom(n - 2 * s - 1, k - j);
        return {static_cast<double>(v), v};
    }
    }
    fail(ErrorCode::invalid_argument, "unknown bound");
}

// ---- f / g / h ---------------------------------------------------------------------

namespace {

void check_fgh_domain(int m, int t, int s)
{
    require(s >= 2 && t >= 2 && m >= s + t - 1, ErrorCode::out_of_range, "needs s >= 2, t >= 2, m >= s + t - 1");
}

} // namespace

double fgh_f(double x, int m, int t, int s)
{
    check_fgh_domain(m, t, s);
    const double ratio = static_cast<double>(binom(m - 3, s - 2)) / static_cast<double>(binom(m - 3, t - 2));
    return gbinom(x, t - 1) * ratio - gbinom(x, m - s);
}

Rational fgh_f_exact(long long x, int m, int t, int s)
{
    check_fgh_domain(m, t, s);
    return Rational::of(binom(x, t - 1)) * Rational::of(binom(m - 3, s - 2), binom(m - 3, t - 2)) -
           Rational::of(binom(x, m - s));
}

double fgh_h(double z, int m, int t, int s)
{
    check_fgh_domain(m, t, s);
    double upper = 0.0;
    for (int i = t - 1; i <= m - s - 1; ++i)
        upper += 1.0 / (z - i);
    double lower = 0.0;
    for (int i = 0; i <= t - 2; ++i)
        lower += 1.0 / (z - i);
    return gbinom(z, m - s) * upper / lower;
}

double fgh_g(double x, int m, int t, int s)
{
    check_fgh_domain(m, t, s);
    return 1.0 + static_cast<double>(m - s - t + 1) * x / ((x - m + s + 1) * (t - 1));
}

FghCheck analyze_fgh(int m, int t, int s, int samples)
{
    check_fgh_domain(m, t, s);
    require(samples >= 2, ErrorCode::invalid_argument, "need at least two samples");
    FghCheck out;
    auto note = [&](const std::string &what) {
        if (!out.detail.empty())
            out.detail += "; ";
        out.detail += what;
    };
    auto tol = [](double a, double b) { return 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); };

    // (i) monotone on [m-s, m-3]
    const double lo = m - s;
    const double hi = m - 3;
    if (lo < hi) {
        double prev = fgh_f(lo, m, t, s);
        for (int i = 1; i < samples; ++i) {
            const double x = lo + (hi - lo) * i / (samples - 1);
            const double cur = fgh_f(x, m, t, s);
            if (cur < prev - tol(cur, prev)) {
                out.monotone = false;
                note("f decreases near x=" + std::to_string(x));
            }
            if (m >= s + t && !(cur > prev)) {
                out.strictly_monotone = false;
                note("f not strictly increasing near x=" + std::to_string(x));
            }
            prev = cur;
        }
    }

    // (iii) exact endpoint identity, then the sampled inequality on [m-3, m-2]
    if (!(fgh_f_exact(m - 2, m, t, s) == fgh_f_exact(m - 3, m, t, s))) {
        out.endpoint_identity = false;
        note("f(m-2) != f(m-3)");
    }
    const double base = fgh_f(m - 3, m, t, s);
    for (int i = 0; i < samples; ++i) {
        const double y = (m - 3) + static_cast<double>(i) / (samples - 1);
        const double fy = fgh_f(y, m, t, s);
        if (fy < base - tol(fy, base)) {
            out.endpoint_identity = false;
            note("f(y) < f(m-3) at y=" + std::to_string(y));
        }
    }

    // (ii) once f drops below f(m-3) on the tail it never climbs back; h increasing there
    if (s >= 3) {
        const double span = 2.0 * m;
        bool dipped = false;
        double prev_h = 0.0;
        for (int i = 1; i <= samples; ++i) {
            const double x = (m - 3) + span * i / samples;
            const double fx = fgh_f(x, m, t, s);
            if (fx < base - tol(fx, base))
                dipped = true;
            else if (dipped && fx > base + tol(fx, base)) {
                out.tail_property = false;
                note("f returns above f(m-3) at x=" + std::to_string(x));
            }
            const double hx = fgh_h(x, m, t, s);
            if (i > 1 && hx < prev_h - tol(hx, prev_h)) {
                out.h_monotone = false;
                note("h decreases near z=" + std::to_string(x));
            }
            prev_h = hx;
        }
    }
    return out;
}

std::pair<Family, Family> pad_cross_families(const Family &a, const Family &b, int alpha)
{
    const int ka = a.require_uniform("padding");
    const int kb = b.require_uniform("padding");
    require(a.ground_size() == b.ground_size(), ErrorCode::invalid_argument, "families have different ground sets");
    require(alpha >= 0, ErrorCode::invalid_argument, "padding must be non-negative");
    const int n = a.ground_size();
    require(n + alpha <= max_ground_size, ErrorCode::out_of_range, "padded ground set exceeds 64 elements");
    const SetWord pad = SetWord::interval(n + 1, n + alpha);
    auto padded = [&](const Family &f, int k) {
        std::vector<SetWord> out;
        for (SetWord s : f)
            out.push_back(s | pad);
        return Family(n + alpha, std::move(out), k + alpha);
    };
    auto result = std::make_pair(padded(a, ka), padded(b, kb));

    auto min_meet = [](const Family &x, const Family &y) {
        int best = 65;
        for (SetWord p : x)
            for (SetWord q : y)
                best = std::min(best, (p & q).cardinality());
        return best;
    };
    if (!a.empty() && !b.empty() && min_meet(result.first, result.second) != min_meet(a, b) + alpha)
        fail(ErrorCode::internal, "padding did not raise the cross intersection by alpha");
    return result;
}

} // namespace shadowlab
