// aopsynth: delay lower bounds used to prune the search, plus the
// subset transformations behind the two recursive strong bounds.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "aop/aop.hpp"

namespace aop {

/// Exact ceil(log2(sum of 2^e over e in exponents)); no floating point and
/// no big integers, the sum is normalized as a binary counter.
int ceil_log2_weight(const std::vector<int>& exponents);

/// max( ceil(log2 W), max_{t in P_0} a(t)+1, max_{t in P_b, b>0} a(t)+2 )
/// with W the sum of 2^{a(t)} over all inputs of the subset.  For a
/// singleton the bound is the arrival time itself.
int basic_lower_bound(const AopSpec& spec, Mask subset);

/// Weight bound across a fixed pivot: every input of the subset counts
/// once, and every dual-kind input below the pivot counts twice because it
/// appears in both children of any partition with this pivot.
int cross_partition_lower_bound(const AopSpec& spec, Mask subset, GateKind kind,
                                int pivot);

/// Depth-mode condensation: the largest segment (ties: lowest index) stays
/// whole, every other segment shrinks to its first member, and the final
/// segment keeps its last two members.  Returns the subset itself when the
/// rule changes nothing; callers skip the bound in that case.
Mask condensed_subset(const AopSpec& spec, Mask subset);

/// Removes one minimum-arrival input: from the largest segment containing
/// such an input (ties: lowest index), the lowest-index minimum-arrival
/// member is dropped.
Mask drop_one_subset(const AopSpec& spec, Mask subset);

/// Callback into the solver: optimum delay of the subset if it is <= cap.
using SolveWithin = std::function<std::optional<int>(Mask, int)>;

/// Solves the condensed sub-path with the given cap; returns its optimum
/// delay when found, cap+1 otherwise.  Only meaningful with uniform
/// arrival times; returns a vacuous bound when condensation is a no-op.
int strong_lower_bound_condense(const AopSpec& spec, Mask subset,
                                const SolveWithin& solve, int cap);

/// Solves the drop-one sub-path with the given cap; returns its optimum
/// delay when found, cap+1 otherwise.
int strong_lower_bound_drop_one(const AopSpec& spec, Mask subset,
                                const SolveWithin& solve, int cap);

} // namespace aop
