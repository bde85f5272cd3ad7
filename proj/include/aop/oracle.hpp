// aopsynth: independent reference engines used to certify the solver: an
// exhaustive optimum-delay search over monotone functions for tiny input
// counts, a bare enumeration for strongly optimum size, and an instrumented
// recount of the unoptimized recurrence.
#pragma once

#include <vector>

#include "aop/aop.hpp"
#include "aop/solver.hpp"

namespace aop {

/// True optimum delay over all {And2, Or2} circuits for the instance's
/// function, found by shortest-first search over monotone truth tables.
/// Requires m <= 5.
int monotone_optimum_delay(const AopSpec& spec);

/// Batched variant: labels several gate patterns sharing one input count
/// and arrival tuple with a single search.
std::vector<int> monotone_optimum_delays(
    int m, const std::vector<int>& arrival,
    const std::vector<std::vector<GateKind>>& gate_patterns);

/// Minimum size among circuits in which every sub-circuit is delay-optimum
/// for its sub-path, by bare enumeration of the recurrence with its own
/// table.  Requires m <= 10.
int strongly_optimum_size(const AopSpec& spec);

/// Exact entry and partition counts of the bare recurrence with every
/// speedup disabled, recounted independently of the solver.  Requires
/// m <= 14.
SolveStats recount_scenario1(const AopSpec& spec);

} // namespace aop
