// aopsynth: exact delay optimization over {And2, Or2} via dynamic
// programming on sub-paths, with staged speedups (canonical keys, bound
// propagation, partition pruning, strong bounds with delay probing) and
// backtracking reconstruction of an optimum formula circuit.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aop/aop.hpp"
#include "aop/circuit.hpp"

namespace aop {

/// Feature toggles accumulate into the five benchmark scenarios:
///   1: none; 2: normalization; 3: + bounds; 4: + pruning; 5: + strong.
struct SolveOptions {
    /// Canonical subset keys plus segment-prefix partition enumeration;
    /// active only for alternating instances with uniform arrival times.
    bool normalization = false;
    /// Basic lower bound, caps from the standard circuit, and tightening
    /// of the working bound after each improvement.
    bool bounds = false;
    /// Cross-partition weight bound per pivot and subset enumeration
    /// pruning of assignment subtrees whose failing side can only grow.
    bool pruning = false;
    /// Recursive strong lower bounds, lower bound propagation to supersets
    /// in the table, and per-entry delay probing.
    bool strong = false;

    /// Additionally minimize formula size among circuits in which every
    /// sub-circuit is delay-optimum for its sub-path.
    bool size_opt = false;
    /// External delay budget; no circuit with delay <= cap reports
    /// infeasibility with a proven lower bound of cap+1.
    std::optional<int> delay_cap;
    int exhaustive_verify_limit = 20;

    static SolveOptions scenario(int n, bool size_opt = false);
};

struct SolveStats {
    std::uint64_t entries = 0;    // entries whose partition search started
    std::uint64_t partitions = 0; // complete partitions visited
    double ms = 0.0;
};

struct OptResult {
    std::optional<int> delay;       // empty: infeasible under delay_cap
    std::optional<int> size;        // size mode only
    std::optional<Circuit> circuit; // emitted for feasible solves
    int lower_bound = 0;            // proven bound; cap+1 when infeasible
    SolveStats stats;
};

class Solver {
public:
    Solver(AopSpec spec, SolveOptions opts);

    /// Optimum for the whole instance.
    OptResult solve();

    /// Optimum for one sub-path; repeated calls share the memo table.
    OptResult solve_subset(Mask subset);

    /// Recorded (kind, S1) decision of a solved subset, translated into
    /// the subset's own index space; empty for singletons.
    std::optional<std::pair<GateKind, Mask>> mapped_choice(Mask subset) const;

    /// Rebuilds the optimum circuit of a solved subset over the instance's
    /// shared input nodes.  Throws std::logic_error if the subset was never
    /// solved exactly.
    Circuit backtrack(Mask subset) const;

    /// Post-hoc consistency check: every solved entry's recorded choice
    /// reproduces its delay (and size) from its children's entries.
    bool audit_table() const;

    std::size_t memo_size() const { return memo_.size(); }
    const SolveStats& stats() const { return stats_; }
    const AopSpec& instance() const { return spec_; }

private:
    struct Choice {
        GateKind kind;
        Mask s1;
    };
    struct Entry {
        int lower;
        std::optional<int> best_delay;
        std::optional<int> best_size;
        std::optional<Choice> choice;
        std::optional<int> exhausted_up_to; // no solution with delay <= this
        bool counted = false;
    };
    struct EnumCtx {
        Mask key = 0;
        GateKind kind = GateKind::And;
        Mask same = 0;
        int pivot = -1;
        Mask s2_base = 0;
        std::vector<int> order; // below-pivot members in scan order
        Mask pick1 = 0, pick2 = 0;
        bool conform = false;
        std::vector<int> seg_of;
        std::vector<char> s1_started;
        int working = 0;
        int best_d = 0, best_s = 0;
        std::optional<Choice> best_choice;
        bool probe_stop = false;
    };
    enum class Unwind { None, VetoS1, VetoS2, Stop };

    Mask key_of(Mask subset) const;
    std::optional<int> opt(Mask subset, int cap);
    bool search(Mask key, Entry& e, int target);
    Unwind assign(EnumCtx& ctx, std::size_t pos);
    Unwind leaf(EnumCtx& ctx);
    Unwind child_failure(bool side1) const;
    int known_lower(Mask child);
    int entry_size(Mask child) const;
    int entry_delay(Mask child) const;
    void raise_lower(Mask key, Entry& e, int value);
    void propagate_lower(Mask key, int value);
    void poll_budget();
    int build(Mask subset, Circuit& c) const;

    AopSpec spec_;
    SolveOptions opts_;
    bool normalized_;
    std::unordered_map<Mask, Entry> memo_;
    SolveStats stats_;
    std::uint64_t leaves_since_poll_ = 0;
    std::optional<double> budget_secs_;
    std::chrono::steady_clock::time_point started_;
};

} // namespace aop
