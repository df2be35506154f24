#ifndef SHADOWLAB_BINOM_HPP
#define SHADOWLAB_BINOM_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/family.hpp"

namespace shadowlab {

/// Exact integer used by every integral bound.
using BigInt = __int128;

std::string to_string(BigInt v);

/// C(n,k) for integers; 0 when k < 0 or k > n or n < 0.
BigInt binom(long long n, long long k);

/// Generalized binomial x(x-1)...(x-k+1)/k! for real x >= k, and 0 for x < k.
double gbinom(double x, int k);

/// The unique x >= k with gbinom(x,k) = m, for m >= 1.
double inv_gbinom(double m, int k);

/// Lovasz form of Kruskal-Katona: with m = C(x,k), the shadow has at least C(x,k-1) sets.
double kk_bound(double m, int k);

/// An exact rational with 128-bit parts, normalized (den > 0, gcd 1).
struct Rational {
    BigInt num = 0;
    BigInt den = 1;

    static Rational of(BigInt n, BigInt d = 1);
    Rational operator+(const Rational &o) const;
    Rational operator-(const Rational &o) const;
    Rational operator*(const Rational &o) const;
    Rational operator/(const Rational &o) const;
    bool operator==(const Rational &o) const { return num == o.num && den == o.den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// ---- named bounds ------------------------------------------------------------

enum class BoundName {
    kk,                  // Lovasz form: gbinom(inv_gbinom(m,k), k-1)
    ekr_diversity,       // |F| <= C(n-1,k-1)+C(n-u-1,n-k-1)-C(n-u-1,k-1)
    ekr_diversity_gamma, // hypothesis gamma >= C(n-u-1,n-k-1)
    cross_ekr,           // |B| <= C(n-1,b-1)
    cross_size_a,        // C(n-1,a-1)-C(n-v-1,a-1)+C(n-u-1,n-a-1)
    cross_size_b,        // C(n-1,b-1)-C(n-u-1,b-1)+C(n-v-1,n-b-1)
    cross_gamma_a,       // C(n-u-1,n-a-1)
    cross_gamma_b,       // C(n-v-1,n-b-1)
    cross_ratio,         // C(x,n-k-1)/C(x,k-1)
    kk_stability,        // C(n,k-1)-C(y,n-k+1)+C(x,k-2)
    kk_stability_size,   // C(n,k)-C(y,n-k)+C(x,k-1)
    kk_stability_gamma,  // C(x,k-1)
    rwise_gamma,         // C(n-r-t,k-r-t+1)
    shifted_t_gamma,     // C(n-t-2,k-t-1)
    shifted_rwise_gamma, // 2^(n-r-t)
    complement_cross,    // C(n,b)-C(x,b)
    flst,                // C(n-t,k-t)^2
    katona,              // max size of a t-intersecting family in 2^[n]
    a2_s_diversity,      // |A_2(n,k,s) avoiding [s]|
};

std::optional<BoundName> bound_from_string(std::string_view name);
std::string_view to_string(BoundName name);
std::vector<BoundName> all_bounds();

using BoundParams = std::map<std::string, double, std::less<>>;

struct BoundValue {
    double value = 0.0;
    /// Present when every parameter used was an integer.
    std::optional<BigInt> exact;
};

/// Evaluates the named right-hand side after checking the parameter ranges
/// under which the corresponding statement is made.
BoundValue evaluate_bound(BoundName name, const BoundParams &params);

/// Katona's bound for t-intersecting families in 2^[n].
BigInt katona_bound(int n, int t);

// ---- the f/g/h analytics used for cross-intersecting size estimates ---------

/// f(x,m,t,s) = C(x,t-1) C(m-3,s-2)/C(m-3,t-2) - C(x,m-s).
double fgh_f(double x, int m, int t, int s);
/// Exact f at an integer x.
Rational fgh_f_exact(long long x, int m, int t, int s);
/// h(z,m,t,s) = C(z,m-s) * sum_{i=t-1}^{m-s-1} 1/(z-i) / sum_{i=0}^{t-2} 1/(z-i).
double fgh_h(double z, int m, int t, int s);
/// g(x,m,t,s) = 1 + (m-s-t+1) x / ((x-m+s+1)(t-1)).
double fgh_g(double x, int m, int t, int s);

struct FghCheck {
    bool monotone = true;          // (i) on sampled [m-s, m-3]
    bool strictly_monotone = true; // (i) when m >= s+t
    bool tail_property = true;     // (ii) on sampled x > m-3
    bool endpoint_identity = true; // (iii): f(m-2) == f(m-3) exactly
    bool h_monotone = true;        // h increasing on the sampled tail
    std::string detail;
};

FghCheck analyze_fgh(int m, int t, int s, int samples = 100);

// ---- padding -----------------------------------------------------------------

/// Adds [n+1, n+alpha] to every member of both families.
std::pair<Family, Family> pad_cross_families(const Family &a, const Family &b, int alpha);

} // namespace shadowlab

#endif
