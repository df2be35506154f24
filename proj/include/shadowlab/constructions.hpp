#ifndef SHADOWLAB_CONSTRUCTIONS_HPP
#define SHADOWLAB_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/family.hpp"

namespace shadowlab {

enum class ConstructionName {
    star,
    full_level,
    L_uv,
    KK_xy,
    A2,
    rwise_example,
    katona_t,
    kalai_circle,
    lex_seg,
    colex_seg,
};

std::optional<ConstructionName> construction_from_string(std::string_view name);
std::string_view to_string(ConstructionName name);
std::vector<ConstructionName> all_constructions();

struct ConstructionSpec {
    ConstructionName name = ConstructionName::star;
    std::map<std::string, long long, std::less<>> params;
};

Family build(const ConstructionSpec &spec);

/// All k-sets (or all sets when k is empty) of [n] containing 1.
Family star(int n, std::optional<int> k);
Family full_level(int n, int k);
/// {L : 1 in L, L meets [2,v+1]} cup {L : [2,u+1] subset L}.
Family l_uv(int n, int k, int u, int v);
/// C([n],k) minus the sets containing [y+1,n], plus {S + (n+1) : S in C([x],k-1)}; ground n+1.
Family kk_xy(int n, int k, int x, int y);
/// {A in C([n],k) : |A cap [2s+1]| >= 2}.
Family a2(int n, int k, int s);
/// {F : |F cap [r+t]| >= r+t-1}, k-uniform or all of 2^[n] when k is empty.
Family rwise_example(int n, std::optional<int> k, int r, int t);
/// Katona's extremal t-intersecting family in 2^[n].
Family katona_family(int n, int t);

/// Membership in Kalai's circle family: longest-run profile of ones beats
/// that of zeros in lex order. Even-n ties keep the numerically smaller word
/// of each complementary pair.
bool kalai_member(int n, SetWord s);
Family kalai_circle(int n);

} // namespace shadowlab

#endif
