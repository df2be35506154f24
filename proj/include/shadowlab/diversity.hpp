#ifndef SHADOWLAB_DIVERSITY_HPP
#define SHADOWLAB_DIVERSITY_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "shadowlab/family.hpp"

namespace shadowlab {

enum class Metric { gamma, s_gamma, kk_gamma, colex_gamma };

std::string_view to_string(Metric m);

/// Image of each ground element under a relabeling, index 0 is element 1.
using Relabeling = std::vector<int>;

using DiversityWitness = std::variant<int, SetWord, Relabeling>;

struct DiversityValue {
    Metric metric = Metric::gamma;
    std::size_t value = 0;
    DiversityWitness witness;
};

/// JSON object {metric, value, witness}.
std::string to_json(const DiversityValue &d);

/// gamma(F) = |F| - max degree; witness is the smallest max-degree element.
DiversityValue diversity(const Family &f);

/// min over s-sets R of the members avoiding R; witness is the colex-least R.
DiversityValue s_diversity(const Family &f, int s);

/// min over n-subsets X of the ground set of the members not inside X.
DiversityValue kk_diversity(const Family &f, int n);

/// Largest ground set handled by colex_diversity.
inline constexpr int colex_diversity_max_n = 10;

/// min over relabelings of [n] of the members falling outside the first t
/// k-sets in colex order. Exact branch and bound; the identity is tried first
/// and only strict improvements replace the witness.
DiversityValue colex_diversity(const Family &f, long long t);

/// Recomputes the metric objective at a witness.
std::size_t objective_at(const Family &f, const DiversityValue &d, long long param);

// ---- influences ----------------------------------------------------------------

/// Uniform measure |F| / 2^n.
double measure(const Family &f);

/// Number of S not containing i with exactly one of S, S+i in F.
std::size_t boundary_pairs(const Family &f, int i);

/// I_i(F) = 2 * boundary_pairs / 2^n. For up-closed families the degree
/// formula 2mu(F contains i) - 2mu(F avoids i) is cross-checked.
double influence(const Family &f, int i);
double total_influence(const Family &f);
std::vector<double> influences(const Family &f);

/// (1/2) max_i I_i + 2 gamma / 2^n - mu, which vanishes for up-closed F.
double influence_identity_residual(const Family &f);

} // namespace shadowlab

#endif
