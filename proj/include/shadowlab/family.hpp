#ifndef SHADOWLAB_FAMILY_HPP
#define SHADOWLAB_FAMILY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shadowlab/set_word.hpp"

namespace shadowlab {

/**
 * A deduplicated, sorted collection of subsets of [n].
 *
 * Members are kept in numeric word order (colex for uniform families). The
 * uniformity tag is present iff every member has the same size; an empty
 * family keeps whatever tag it was constructed with.
 */
class Family {
public:
    Family() = default;

    /// Throws on n outside [0, 64], members outside [n], or members that
    /// contradict an explicit uniformity tag. Duplicates are dropped.
    Family(int n, std::vector<SetWord> members, std::optional<int> k = std::nullopt);

    int ground_size() const { return n_; }
    std::optional<int> uniformity() const { return k_; }
    /// The uniformity tag, or an invalid_argument error naming `what`.
    int require_uniform(const char *what) const;

    std::span<const SetWord> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(SetWord s) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const Family &) const = default;

private:
    int n_ = 0;
    std::optional<int> k_;
    std::vector<SetWord> members_;
};

/// Canonical text form: "n=<N> k=<K|->" then one member per line.
std::string to_text(const Family &f);
Family parse_family(std::string_view text);

/// "{1,2},{3}" style rendering for messages and JSON.
std::string to_brace_string(SetWord s);

// ---- shadows and traces ----------------------------------------------------

/// l-shadow of a k-uniform family.
Family shadow(const Family &f, int l);
/// |shadow(f, k-1)| without materializing it.
std::size_t immediate_shadow_size(const Family &f);

/// F(X Ybar) = { F \ X : F in f, F cap (X cup Y) = X }.
Family trace(const Family &f, SetWord x, SetWord y);

// ---- degrees ---------------------------------------------------------------

std::size_t degree(const Family &f, int element);
std::vector<std::size_t> degrees(const Family &f);

struct DegreeWitness {
    int element = 0;
    std::size_t count = 0;
};

/// Ties go to the smallest element.
DegreeWitness max_degree(const Family &f);
DegreeWitness min_degree(const Family &f);

// ---- matchings and intersection predicates ---------------------------------

std::size_t matching_number(const Family &f);

bool is_cross_t_intersecting(std::span<const Family> families, int t);
bool is_r_wise_t_intersecting(const Family &f, int r, int t);
inline bool is_intersecting(const Family &f) { return is_r_wise_t_intersecting(f, 2, 1); }
/// Every r members leave at least t elements of [n] uncovered.
bool is_r_wise_t_union(const Family &f, int r, int t);

Family complement_family(const Family &f);
bool is_up_closed(const Family &f);

/// |f cap g| for families on the same ground set.
std::size_t intersection_size(const Family &f, const Family &g);

} // namespace shadowlab

#endif
