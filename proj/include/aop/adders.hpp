// aopsynth: depth-optimum adder carry networks built from carry-bit
// And-Or path instances, plus functional verification and the depth
// range table with lower-bound propagation.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "aop/aop.hpp"
#include "aop/circuit.hpp"
#include "aop/solver.hpp"

namespace aop {

/// Alternating Or-first instance for carry c_{i+1} over the signals
/// (g_i, p_i, g_{i-1}, p_{i-1}, ..., p_1, g_0): 2i+1 inputs, zero arrivals.
AopSpec carry_aop(int i);

struct AdderPlan {
    int n = 0;
    /// carries[k] computes c_{k+1} over its local inputs, local index j
    /// holding g_{k-j/2} for even j and p_{k-(j-1)/2} for odd j.
    std::vector<Circuit> carries;
    std::vector<int> depths;
    int depth = 0; // depth of the widest carry circuit
    SolveStats stats;
};

/// Depth-optimum circuits for every carry of an n-bit adder.  One shared
/// solver session handles all of them: each narrower carry is a suffix
/// sub-path of the widest carry instance.
AdderPlan build_adder(int n, SolveOptions opts = SolveOptions::scenario(5));

/// Checks every carry circuit and the reconstructed sum bits against
/// integer addition; exhaustive over all operand pairs for n <= 10,
/// otherwise `trials` random pairs.  Returns the first failing operand
/// pair, or nullopt when everything matches.
std::optional<std::pair<std::uint64_t, std::uint64_t>> verify_adder(
    const AdderPlan& plan, std::uint64_t trials = 100000,
    std::uint64_t seed = 0x5eedf00dULL);

/// Closure of impossibility facts "no circuit of depth d on m inputs":
/// such a fact rules out depth d+1 on 2m-1 inputs, and so on upward.
/// Input maps input count to a depth known impossible for it; the result
/// maps each depth to the smallest input count proven impossible.
std::map<int, long long> propagate_depth_lower_bounds(
    const std::map<long long, int>& known);

enum class RowLabel { Exact, Bounded, Reference };

struct DepthRangeRow {
    int depth = 0;
    long long m_low = 0;
    long long m_high = 0; // -1 marks an open-ended row
    RowLabel label = RowLabel::Exact;
};

/// Contiguous ranges of input counts per optimum depth: solved exactly up
/// to max_m, published reference values beyond, and a final open
/// lower-bound row.
std::vector<DepthRangeRow> depth_table(int max_m,
                                       SolveOptions opts = SolveOptions::scenario(5));

/// Published depth ranges for d = 1..17 as (low, high) pairs.
const std::vector<std::pair<long long, long long>>& reference_depth_ranges();

/// Published optimum adder depths for power-of-two bit widths.
const std::map<int, int>& reference_adder_depths();

} // namespace aop
