#ifndef SHADOWLAB_ORDERS_HPP
#define SHADOWLAB_ORDERS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shadowlab/family.hpp"

namespace shadowlab {

enum class OrderKind { lex, colex, shift_partial };

enum class Ordering { less, equal, greater, incomparable };

/// lex: the smallest element of A xor B decides; colex: the largest one.
/// shift_partial compares sorted element lists coordinate-wise.
Ordering compare(SetWord a, SetWord b, OrderKind order);

/// First t k-subsets of [n] in lex / colex order.
Family lex_segment(int n, long long t, int k);
Family colex_segment(int n, long long t, int k);

bool is_lex_segment(const Family &f);
bool is_colex_segment(const Family &f);

// ---- shifts --------------------------------------------------------------------

/// The i<-j shift: members containing j but not i have j replaced by i,
/// unless the image is already present. Any i != j is accepted.
Family shift_ij(const Family &f, int i, int j);

/// Daykin's U<-V shift: members meeting U cup V exactly in V have V replaced
/// by U, unless the image is already present. U, V disjoint and equal-sized.
Family daykin_shift(const Family &f, SetWord u, SetWord v);

/// Closed downward under the shifting partial order.
bool is_shifted(const Family &f);

struct ShiftStep {
    enum class Kind { ij, daykin };
    Kind kind = Kind::ij;
    SetWord u; // {i} for ij steps
    SetWord v; // {j} for ij steps
    std::size_t moved = 0;
};

/// Log of compression steps; replaying it from the initial family must
/// reproduce the final one.
struct ShiftTrace {
    std::vector<ShiftStep> steps;
};

Family replay(const Family &initial, const ShiftTrace &trace);
std::string trace_to_json(const ShiftTrace &trace, int indent = -1);

struct ShiftResult {
    Family family;
    ShiftTrace trace;
};

/// Applies i<-j shifts (i<j, pairs in lex order, repeated sweeps) until fixed.
ShiftResult shift_to_shifted(const Family &f);

struct ShiftPair {
    SetWord u;
    SetWord v;
    bool operator==(const ShiftPair &) const = default;
};

/// An inclusion-minimal pair (U,V) with U before V in colex such that some
/// member's image under S_{U,V} is missing. Empty iff f is a colex segment.
/// Pairs are searched by |U|, then colex rank of V, then colex rank of U.
std::optional<ShiftPair> find_colex_violation(const Family &f);
/// Same search with U before V in lex order.
std::optional<ShiftPair> find_lex_violation(const Family &f);

struct CompressResult {
    Family family;
    ShiftTrace trace;
    /// Immediate shadow size before the first step and after each step.
    std::vector<std::size_t> shadow_sizes;
};

/// Daykin compression to the colex segment of the same size. Throws an
/// internal error if a step ever increases the immediate shadow.
CompressResult compress_to_colex(const Family &f);

struct CrossShiftStep {
    Family a;
    Family b;
    ShiftPair pair;
};

/// One simultaneous lex Daykin shift of a cross-intersecting pair; empty iff
/// both families are lex segments.
std::optional<CrossShiftStep> cross_lex_shift_step(const Family &a, const Family &b);

} // namespace shadowlab

#endif
