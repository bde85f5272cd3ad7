// aopsynth: instance model for generalized And-Or paths and the
// combinatorial structure (same-gate sets, segments, special sub-paths)
// the optimization engine is built on.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aop/errors.hpp"

namespace aop {

/// Subset of the inputs t_0, ..., t_{m-1}, bit i standing for t_i.
using Mask = std::uint64_t;

enum class GateKind : std::uint8_t { And = 0, Or = 1 };

constexpr GateKind dual(GateKind k) {
    return k == GateKind::And ? GateKind::Or : GateKind::And;
}

/// 'A' for And, 'O' for Or.
char gate_char(GateKind k);

constexpr Mask bit(int i) { return Mask{1} << i; }

int subset_size(Mask s);
int lowest_input(Mask s);
int highest_input(Mask s);

/// A generalized And-Or path instance
///   h(t) = t_0 g_0 (t_1 g_1 (... (t_{m-2} g_{m-2} t_{m-1})))
/// on m inputs with per-input integer arrival times.  gates[i] is the kind of
/// the gate whose direct input t_i is; the last input has no gate of its own.
struct AopSpec {
    int m = 0;
    std::vector<GateKind> gates; // size m-1
    std::vector<int> arrival;    // size m

    /// Alternating instance with zero arrival times, gates[0] == first.
    static AopSpec alternating(int m, GateKind first = GateKind::And);

    /// Parses a gate string like "AOOA"; arrival defaults to all-zero.
    static AopSpec from_gate_string(const std::string& s,
                                    std::vector<int> arrival = {});

    Mask full_mask() const { return m >= 64 ? ~Mask{0} : bit(m) - 1; }

    bool is_alternating() const;
    bool uniform_arrival() const;

    /// Throws std::invalid_argument or UnsupportedSizeError on a malformed
    /// instance (m < 1, m > 64, negative arrival, size mismatches).
    void validate() const;
};

/// Same instance with every gate kind flipped; optimum delay is preserved.
AopSpec dualize(const AopSpec& spec);

/// Gate kind attached to input t_i of the sub-path induced by `subset`.
/// For every input except the last this is gates[i] of the original
/// instance; the last input of a sub-path has no gate kind.
/// Precondition: i is a non-maximal member of subset.
GateKind input_kind(const AopSpec& spec, int i);

/// Inputs of `subset` entering a gate of kind `k` in the induced sub-path,
/// plus the last input of the subset (which belongs to the same-gate set of
/// both kinds).
Mask same_gate_set(const AopSpec& spec, Mask subset, GateKind k);

/// Complement of same_gate_set within the subset: inputs entering a gate of
/// the dual kind, never including the last input.
Mask dual_gate_set(const AopSpec& spec, Mask subset, GateKind k);

/// Maximal runs of consecutive same-kind inputs of a sub-path, in input
/// order.  The last input carries no gate kind and is merged into the final
/// run, so the final run has at least two members whenever the subset does.
/// For a one-input subset the single run's kind tag carries no meaning.
struct SegmentPartition {
    std::vector<Mask> runs;
    std::vector<GateKind> kinds;
};

SegmentPartition segment_partition(const AopSpec& spec, Mask subset);

/// Extends `part` (a nonempty subset of same_gate_set(spec, subset, k)) by
/// every dual-kind input of `subset` below the maximum of `part`.
Mask special_sub_path(const AopSpec& spec, Mask subset, GateKind k, Mask part);

/// Delay of the right-leaning standard circuit of the sub-path induced by
/// `subset` (m-1 gates for the full instance).
int standard_delay(const AopSpec& spec, Mask subset);

/// The sub-path induced by `subset` as a stand-alone instance, inputs
/// renumbered in ascending order of their original indices.
AopSpec induced_sub_path(const AopSpec& spec, Mask subset);

} // namespace aop
