#include "aop/bounds.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace aop {

int ceil_log2_weight(const std::vector<int>& exponents) {
    if (exponents.empty())
        throw std::logic_error("ceil_log2_weight on empty exponent list");
    std::map<int, unsigned long long> count;
    for (int e : exponents) ++count[e];
    int highest = 0;
    int set_bits = 0;
    for (auto it = count.begin(); it != count.end(); ++it) {
        unsigned long long c = it->second;
        if (c >= 2) count[it->first + 1] += c >> 1;
        if (c & 1) {
            highest = it->first;
            ++set_bits;
        }
    }
    return set_bits == 1 ? highest : highest + 1;
}

int basic_lower_bound(const AopSpec& spec, Mask subset) {
    if (subset == 0) throw std::logic_error("basic_lower_bound on empty subset");
    if (subset_size(subset) == 1) return spec.arrival[lowest_input(subset)];
    std::vector<int> exps;
    for (Mask rest = subset; rest != 0; rest &= rest - 1)
        exps.push_back(spec.arrival[std::countr_zero(rest)]);
    int bound = ceil_log2_weight(exps);
    SegmentPartition part = segment_partition(spec, subset);
    for (std::size_t b = 0; b < part.runs.size(); ++b) {
        int extra = b == 0 ? 1 : 2;
        for (Mask rest = part.runs[b]; rest != 0; rest &= rest - 1)
            bound = std::max(bound, spec.arrival[std::countr_zero(rest)] + extra);
    }
    return bound;
}

int cross_partition_lower_bound(const AopSpec& spec, Mask subset, GateKind kind,
                                int pivot) {
    std::vector<int> exps;
    for (Mask rest = subset; rest != 0; rest &= rest - 1)
        exps.push_back(spec.arrival[std::countr_zero(rest)]);
    Mask doubled = dual_gate_set(spec, subset, kind) & (bit(pivot) - 1);
    for (Mask rest = doubled; rest != 0; rest &= rest - 1)
        exps.push_back(spec.arrival[std::countr_zero(rest)]);
    return ceil_log2_weight(exps);
}

Mask condensed_subset(const AopSpec& spec, Mask subset) {
    SegmentPartition part = segment_partition(spec, subset);
    std::size_t n = part.runs.size();
    std::size_t largest = 0;
    for (std::size_t b = 1; b < n; ++b)
        if (subset_size(part.runs[b]) > subset_size(part.runs[largest])) largest = b;
    Mask out = 0;
    for (std::size_t b = 0; b < n; ++b) {
        Mask run = part.runs[b];
        if (b == largest) {
            out |= run;
        } else if (b + 1 == n) {
            Mask keep = 0;
            for (int taken = 0; run != 0 && taken < 2; ++taken) {
                Mask top = bit(highest_input(run));
                keep |= top;
                run &= ~top;
            }
            out |= keep;
        } else {
            out |= bit(lowest_input(run));
        }
    }
    return out;
}

Mask drop_one_subset(const AopSpec& spec, Mask subset) {
    if (subset_size(subset) < 2)
        throw std::logic_error("drop_one_subset needs at least two inputs");
    int min_arrival = spec.arrival[lowest_input(subset)];
    for (Mask rest = subset; rest != 0; rest &= rest - 1)
        min_arrival = std::min(min_arrival, spec.arrival[std::countr_zero(rest)]);
    SegmentPartition part = segment_partition(spec, subset);
    int best_run = -1, best_size = 0;
    for (std::size_t b = 0; b < part.runs.size(); ++b) {
        bool has_min = false;
        for (Mask rest = part.runs[b]; rest != 0; rest &= rest - 1)
            if (spec.arrival[std::countr_zero(rest)] == min_arrival) has_min = true;
        int size = subset_size(part.runs[b]);
        if (has_min && size > best_size) {
            best_size = size;
            best_run = static_cast<int>(b);
        }
    }
    for (Mask rest = part.runs[best_run]; rest != 0; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        if (spec.arrival[i] == min_arrival) return subset & ~bit(i);
    }
    throw std::logic_error("drop_one_subset: no minimum-arrival input found");
}

int strong_lower_bound_condense(const AopSpec& spec, Mask subset,
                                const SolveWithin& solve, int cap) {
    Mask condensed = condensed_subset(spec, subset);
    if (condensed == subset) return 0;
    if (auto d = solve(condensed, cap)) return *d;
    return cap + 1;
}

int strong_lower_bound_drop_one(const AopSpec& spec, Mask subset,
                                const SolveWithin& solve, int cap) {
    Mask dropped = drop_one_subset(spec, subset);
    if (auto d = solve(dropped, cap)) return *d;
    return cap + 1;
}

} // namespace aop
