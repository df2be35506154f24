#ifndef SHADOWLAB_VERIFIER_HPP
#define SHADOWLAB_VERIFIER_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/family.hpp"

namespace shadowlab {

inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 26;

enum class SpaceKind {
    all_families,         // every subfamily of C([n],k)
    all_shifted_families, // every shifted subfamily of C([n],k); pairs=1 for ordered pairs
    all_cross_pairs,      // every cross-intersecting (A,B) over C([n],a) x C([n],b)
    all_graphs,           // every graph on [n] without isolated vertices
    all_up_sets,          // every up-closed family in 2^[n], n <= 6
    constructions_grid,   // cartesian product of integer parameter ranges
    random_sample,        // count seeded random families
};

std::optional<SpaceKind> space_kind_from_string(std::string_view s);
std::string_view to_string(SpaceKind kind);

struct ParamRange {
    long long lo = 0;
    long long hi = 0;
    bool operator==(const ParamRange &) const = default;
};

/**
 * What to enumerate. Text form is "<kind>:key=value,key=lo..hi,...", e.g.
 * "all-families:n=6,k=3" or "random-sample:n=7,k=3,count=100000,seed=1".
 */
struct InstanceSpace {
    SpaceKind kind = SpaceKind::all_families;
    std::map<std::string, ParamRange, std::less<>> params;

    static InstanceSpace parse(std::string_view text);
    std::string describe() const;

    bool has(std::string_view key) const { return params.find(key) != params.end(); }
    /// Single value; throws if missing or a proper range.
    long long get(std::string_view key) const;
    long long get_or(std::string_view key, long long fallback) const;
    ParamRange range(std::string_view key) const;
};

struct Instance {
    std::vector<Family> families;
    std::map<std::string, double, std::less<>> params;
};

/// Deterministic position of an instance inside its space.
struct InstanceKey {
    std::uint64_t unit = 0;
    std::uint64_t sub = 0;
    auto operator<=>(const InstanceKey &) const = default;
};

/**
 * A space split into independently enumerable units; workers take disjoint
 * unit ranges and the merge orders results by key.
 */
class InstanceStream {
public:
    virtual ~InstanceStream() = default;
    virtual std::uint64_t units() const = 0;
    virtual void visit(std::uint64_t unit, const std::function<void(InstanceKey, const Instance &)> &fn) const = 0;
};

/// Throws budget_exceeded when the space holds more than `budget` instances.
std::unique_ptr<InstanceStream> open_space(const InstanceSpace &space, std::uint64_t budget = default_budget);

/// Sequential walk in key order.
void enumerate(const InstanceSpace &space, const std::function<void(InstanceKey, const Instance &)> &fn,
               std::uint64_t budget = default_budget);

// ---- claims --------------------------------------------------------------------

struct Outcome {
    enum class Status { skipped, holds, violated };
    Status status = Status::skipped;
    bool equality = false;
    std::string detail;

    static Outcome skip() { return {}; }
    static Outcome hold(bool eq = false, std::string d = {}) { return {Status::holds, eq, std::move(d)}; }
    static Outcome violate(std::string d) { return {Status::violated, false, std::move(d)}; }
};

class Claim {
public:
    virtual ~Claim() = default;
    virtual std::string_view id() const = 0;
    virtual std::string_view statement() const = 0;
    virtual bool supports(SpaceKind kind) const = 0;
    /// Runs once, single-threaded, before the scan.
    virtual void prepare(const InstanceSpace &) {}
    /// Must be safe to call concurrently after prepare().
    virtual Outcome check(const Instance &instance) const = 0;
    /// True when the space lies outside the range in which the statement is made.
    virtual bool exploratory(const InstanceSpace &) const { return false; }
    /// Records appended to the report after the scan (e.g. known boundary cases).
    virtual std::vector<std::string> boundary_records(const InstanceSpace &) const { return {}; }
};

std::unique_ptr<Claim> make_claim(std::string_view id);
std::vector<std::string> claim_ids();

// ---- reports -------------------------------------------------------------------

struct RecordedInstance {
    InstanceKey key;
    Instance instance;
    std::string detail;
};

struct Report {
    std::string claim;
    std::string space;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::uint64_t equality_count = 0;
    std::vector<RecordedInstance> counterexamples;
    std::vector<RecordedInstance> equality_witnesses;
    /// Violations seen while exploratory; they do not fail the report.
    std::vector<RecordedInstance> exploratory_violations;
    std::vector<std::string> expected_boundary;
    std::vector<std::string> notes;
    bool exploratory = false;
    double seconds = 0.0;

    bool passed() const { return counterexamples.empty(); }
};

struct VerifyOptions {
    unsigned jobs = 0; // 0 = hardware concurrency
    std::uint64_t budget = default_budget;
    std::size_t witness_limit = 32;
    std::size_t counterexample_limit = 64;
};

Report verify(std::string_view claim, const InstanceSpace &space, const VerifyOptions &options = {});
Report verify(Claim &claim, const InstanceSpace &space, const VerifyOptions &options = {});

/// Exhaustive cross-intersecting search under the size thresholds of the
/// cross-intersecting stability theorem for real (u,v). Only A with
/// |A| >= threshold_a are expanded, and B ranges over subsets of the largest
/// compatible family only when that family is big enough.
Report verify_cross_pair_space(int n, int a, int b, double u, double v, const VerifyOptions &options = {});

std::string to_json(const Report &report, int indent = 2);
Report report_from_json(std::string_view text);

/// Re-runs the claim on a recorded counterexample; true iff it still fails.
bool replay_counterexample(const Report &report, std::size_t index);

} // namespace shadowlab

#endif
