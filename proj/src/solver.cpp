// aopsynth: dynamic-programming solver for delay optimization of
// generalized And-Or paths.
#include "aop/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "aop/bounds.hpp"
#include "aop/errors.hpp"
#include "aop/normalization.hpp"

namespace aop {
namespace {

constexpr int kNoBound = std::numeric_limits<int>::min() / 4;
constexpr int kInfCap = std::numeric_limits<int>::max() / 4;

/// Members of `mask` from highest to lowest index.
std::vector<int> members_descending(Mask mask) {
    std::vector<int> out;
    for (int i = 63; i >= 0; --i) {
        if (mask & bit(i)) out.push_back(i);
    }
    return out;
}

} // namespace

SolveOptions SolveOptions::scenario(int n, bool size_opt) {
    if (n < 1 || n > 5) throw std::invalid_argument("scenario must be in 1..5");
    SolveOptions o;
    o.normalization = n >= 2;
    o.bounds = n >= 3;
    o.pruning = n >= 4;
    o.strong = n >= 5;
    o.size_opt = size_opt;
    return o;
}

Solver::Solver(AopSpec spec, SolveOptions opts)
    : spec_(std::move(spec)), opts_(opts) {
    spec_.validate();
    normalized_ = opts_.normalization && normalization_applicable(spec_);
    if (const char* env = std::getenv("AOP_TIME_BUDGET_SECS")) {
        const double secs = std::atof(env);
        if (secs > 0.0) budget_secs_ = secs;
    }
}

Mask Solver::key_of(Mask subset) const {
    return normalized_ ? sp_representative(spec_, subset) : subset;
}

void Solver::poll_budget() {
    if (!budget_secs_) return;
    if ((++leaves_since_poll_ & 4095u) != 0) return;
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - started_);
    if (elapsed.count() > *budget_secs_) {
        throw BudgetExceededError("time budget of " +
                                  std::to_string(*budget_secs_) +
                                  " seconds exceeded");
    }
}

OptResult Solver::solve() { return solve_subset(spec_.full_mask()); }

OptResult Solver::solve_subset(Mask subset) {
    if (subset == 0 || (subset & ~spec_.full_mask()) != 0) {
        throw std::invalid_argument("subset outside instance");
    }
    started_ = std::chrono::steady_clock::now();
    int cap = kInfCap;
    if (opts_.delay_cap) cap = std::min(cap, *opts_.delay_cap);
    if (opts_.bounds) cap = std::min(cap, standard_delay(spec_, subset));
    const auto delay = opt(subset, cap);
    stats_.ms += std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - started_)
                     .count();

    OptResult r;
    r.stats = stats_;
    const auto it = memo_.find(key_of(subset));
    if (delay) {
        r.delay = *delay;
        r.lower_bound = *delay;
        if (opts_.size_opt && it != memo_.end()) r.size = it->second.best_size;
        r.circuit = backtrack(subset);
    } else {
        r.lower_bound = (it != memo_.end() && it->second.lower > kNoBound)
                            ? it->second.lower
                            : cap + 1;
    }
    return r;
}

std::optional<int> Solver::opt(Mask subset, int cap) {
    const Mask key = key_of(subset);
    Entry& e = memo_.try_emplace(key, Entry{kNoBound, {}, {}, {}, {}, false})
                   .first->second;

    if (subset_size(key) == 1) {
        if (!e.counted) {
            e.counted = true;
            ++stats_.entries;
        }
        const int a = spec_.arrival[lowest_input(key)];
        e.lower = a;
        e.best_delay = a;
        e.best_size = 0;
        return a <= cap ? std::optional<int>(a) : std::nullopt;
    }

    if (e.best_delay) {
        return *e.best_delay <= cap ? e.best_delay : std::nullopt;
    }
    if (e.lower > cap) return std::nullopt;

    if (opts_.bounds) {
        raise_lower(key, e, basic_lower_bound(spec_, key));
        if (e.lower > cap) return std::nullopt;
    }

    if (opts_.strong && subset_size(key) >= 3) {
        const SolveWithin recurse = [this](Mask s, int c) { return opt(s, c); };
        if (spec_.uniform_arrival()) {
            raise_lower(key, e,
                        strong_lower_bound_condense(spec_, key, recurse, cap));
        }
        if (e.lower <= cap) {
            raise_lower(key, e,
                        strong_lower_bound_drop_one(spec_, key, recurse, cap));
        }
        if (e.lower > cap) return std::nullopt;
    }

    if (opts_.strong) {
        // Delay probing: try each candidate delay in turn; the first value
        // admitting a partition is the exact optimum because every smaller
        // value has been ruled out.
        int d = std::max(e.lower, 0);
        while (d <= cap) {
            if (!(e.exhausted_up_to && *e.exhausted_up_to >= d)) {
                if (search(key, e, d)) return e.best_delay;
                e.exhausted_up_to =
                    std::max(e.exhausted_up_to.value_or(kNoBound), d);
                raise_lower(key, e, d + 1);
            }
            d = std::max(d + 1, e.lower);
        }
        return std::nullopt;
    }

    if (search(key, e, cap)) {
        return *e.best_delay <= cap ? e.best_delay : std::nullopt;
    }
    if (cap < kInfCap) {
        e.exhausted_up_to = std::max(e.exhausted_up_to.value_or(kNoBound), cap);
        raise_lower(key, e, cap + 1);
    }
    return std::nullopt;
}

bool Solver::search(Mask key, Entry& e, int target) {
    if (!e.counted) {
        e.counted = true;
        ++stats_.entries;
    }

    EnumCtx ctx;
    ctx.key = key;
    ctx.working = target;
    ctx.best_d = kInfCap;
    ctx.best_s = kInfCap;
    ctx.probe_stop = opts_.strong && !opts_.size_opt;
    ctx.conform = normalized_;
    if (ctx.conform) {
        const SegmentPartition segs = segment_partition(spec_, key);
        ctx.seg_of.assign(spec_.m, -1);
        for (std::size_t b = 0; b < segs.runs.size(); ++b) {
            for (int i = 0; i < spec_.m; ++i) {
                if (segs.runs[b] & bit(i)) ctx.seg_of[i] = static_cast<int>(b);
            }
        }
        ctx.s1_started.assign(segs.runs.size(), 0);
    }

    const int last = highest_input(key);
    const GateKind first_kind = spec_.gates[lowest_input(key)];
    bool stopped = false;
    for (const GateKind kind : {first_kind, dual(first_kind)}) {
        ctx.kind = kind;
        ctx.same = same_gate_set(spec_, key, kind);
        for (const int pivot : members_descending(ctx.same & ~bit(last))) {
            if (opts_.pruning &&
                cross_partition_lower_bound(spec_, key, kind, pivot) >
                    ctx.working) {
                continue;
            }
            ctx.pivot = pivot;
            ctx.s2_base = ctx.same & ~(bit(pivot) | (bit(pivot) - 1));
            if (ctx.conform) {
                std::fill(ctx.s1_started.begin(), ctx.s1_started.end(), 0);
                ctx.s1_started[ctx.seg_of[pivot]] = 1;
            }
            ctx.order = members_descending(ctx.same & (bit(pivot) - 1));
            std::stable_sort(ctx.order.begin(), ctx.order.end(),
                             [&](int x, int y) {
                                 return spec_.arrival[x] > spec_.arrival[y];
                             });
            ctx.pick1 = 0;
            ctx.pick2 = 0;
            const Unwind u = assign(ctx, 0);
            if (u == Unwind::Stop) {
                stopped = true;
                break;
            }
            if (u == Unwind::VetoS2) break; // all lower pivots fail too
        }
        if (stopped) break;
    }

    if (ctx.best_d > target) {
        // With uncapped children the sweep still ran to completion, so the
        // optimum is exact even though it misses the requested target.
        if (!opts_.bounds && !opts_.strong && ctx.best_d < kInfCap) {
            e.best_delay = ctx.best_d;
            if (opts_.size_opt) e.best_size = ctx.best_s;
            e.choice = ctx.best_choice;
            raise_lower(key, e, ctx.best_d);
        }
        return false;
    }
    e.best_delay = ctx.best_d;
    if (opts_.size_opt) e.best_size = ctx.best_s;
    e.choice = ctx.best_choice;
    raise_lower(key, e, ctx.best_d);
    return true;
}

Solver::Unwind Solver::assign(EnumCtx& ctx, std::size_t pos) {
    if (pos == ctx.order.size()) return leaf(ctx);
    const int x = ctx.order[pos];

    if (ctx.conform && ctx.s1_started[ctx.seg_of[x]]) {
        // A lower member of an already-started run must join side 1 so the
        // run's side-1 part stays a prefix.
        ctx.pick1 |= bit(x);
        const Unwind u = assign(ctx, pos + 1);
        ctx.pick1 &= ~bit(x);
        if (u == Unwind::VetoS1) return Unwind::None;
        return u;
    }

    bool flagged = false;
    if (ctx.conform) {
        ctx.s1_started[ctx.seg_of[x]] = 1;
        flagged = true;
    }
    ctx.pick1 |= bit(x);
    Unwind u = assign(ctx, pos + 1);
    ctx.pick1 &= ~bit(x);
    if (flagged) ctx.s1_started[ctx.seg_of[x]] = 0;
    if (u == Unwind::Stop || u == Unwind::VetoS2) return u;

    ctx.pick2 |= bit(x);
    u = assign(ctx, pos + 1);
    ctx.pick2 &= ~bit(x);
    if (u == Unwind::Stop || u == Unwind::VetoS1) return u;
    return Unwind::None;
}

Solver::Unwind Solver::child_failure(bool side1) const {
    if (!opts_.pruning) return Unwind::None;
    return side1 ? Unwind::VetoS1 : Unwind::VetoS2;
}

Solver::Unwind Solver::leaf(EnumCtx& ctx) {
    ++stats_.partitions;
    poll_budget();

    const Mask s1 = bit(ctx.pivot) | ctx.pick1;
    const Mask s2 = ctx.s2_base | ctx.pick2;
    const Mask c1 = special_sub_path(spec_, ctx.key, ctx.kind, s1);
    const Mask c2 = special_sub_path(spec_, ctx.key, ctx.kind, s2);
    const int child_cap = opts_.bounds ? ctx.working - 1 : kInfCap;

    if (opts_.bounds) {
        if (known_lower(c1) > child_cap) return child_failure(true);
        if (known_lower(c2) > child_cap) return child_failure(false);
    }

    std::optional<int> d1, d2;
    if (subset_size(c1) <= subset_size(c2)) {
        d1 = opt(c1, child_cap);
        if (!d1) return child_failure(true);
        d2 = opt(c2, child_cap);
        if (!d2) return child_failure(false);
    } else {
        d2 = opt(c2, child_cap);
        if (!d2) return child_failure(false);
        d1 = opt(c1, child_cap);
        if (!d1) return child_failure(true);
    }

    const int d = 1 + std::max(*d1, *d2);
    if (opts_.size_opt) {
        const int s = 1 + entry_size(c1) + entry_size(c2);
        if (d < ctx.best_d || (d == ctx.best_d && s < ctx.best_s)) {
            ctx.best_d = d;
            ctx.best_s = s;
            ctx.best_choice = Choice{ctx.kind, s1};
            if (opts_.bounds) ctx.working = std::min(ctx.working, d);
        }
        return Unwind::None;
    }

    if (d < ctx.best_d) {
        ctx.best_d = d;
        ctx.best_choice = Choice{ctx.kind, s1};
        if (ctx.probe_stop && d <= ctx.working) return Unwind::Stop;
        if (opts_.bounds) ctx.working = d - 1;
        const auto it = memo_.find(ctx.key);
        if (it != memo_.end() && d <= it->second.lower) return Unwind::Stop;
    }
    return Unwind::None;
}

int Solver::known_lower(Mask child) {
    const Mask key = key_of(child);
    const auto it = memo_.find(key);
    if (it != memo_.end()) {
        if (it->second.best_delay) return *it->second.best_delay;
        if (it->second.lower > kNoBound) return it->second.lower;
    }
    return basic_lower_bound(spec_, key);
}

int Solver::entry_size(Mask child) const {
    if (subset_size(child) == 1) return 0;
    const auto it = memo_.find(key_of(child));
    if (it == memo_.end() || !it->second.best_size) {
        throw std::logic_error("size missing for solved child");
    }
    return *it->second.best_size;
}

int Solver::entry_delay(Mask child) const {
    if (subset_size(child) == 1) return spec_.arrival[lowest_input(child)];
    const auto it = memo_.find(key_of(child));
    if (it == memo_.end() || !it->second.best_delay) {
        throw std::logic_error("delay missing for solved child");
    }
    return *it->second.best_delay;
}

void Solver::raise_lower(Mask key, Entry& e, int value) {
    if (value <= e.lower) return;
    e.lower = value;
    if (opts_.strong) propagate_lower(key, value);
}

void Solver::propagate_lower(Mask key, int value) {
    // Delay is monotone under adding inputs, so a bound for `key` holds for
    // every superset; walk the memoized supersets one added input at a time.
    for (int j = 0; j < spec_.m; ++j) {
        if (key & bit(j)) continue;
        const Mask sup = key_of(key | bit(j));
        const auto it = memo_.find(sup);
        if (it == memo_.end()) continue;
        Entry& se = it->second;
        if (se.best_delay || value <= se.lower) continue;
        se.lower = value;
        propagate_lower(sup, value);
    }
}

std::optional<std::pair<GateKind, Mask>> Solver::mapped_choice(
    Mask subset) const {
    if (subset_size(subset) == 1) return std::nullopt;
    const Mask key = key_of(subset);
    const auto it = memo_.find(key);
    if (it == memo_.end() || !it->second.choice) return std::nullopt;
    const Choice& ch = *it->second.choice;

    // The i-th member of the key corresponds to the i-th member of the
    // subset; a differing leading gate kind means the key models the dual
    // structure, flipping every gate kind.
    Mask s1 = 0;
    Mask from = key;
    Mask to = subset;
    while (from != 0) {
        if (ch.s1 & bit(lowest_input(from))) s1 |= bit(lowest_input(to));
        from &= from - 1;
        to &= to - 1;
    }
    GateKind kind = ch.kind;
    if (spec_.gates[lowest_input(subset)] != spec_.gates[lowest_input(key)]) {
        kind = dual(kind);
    }
    return std::make_pair(kind, s1);
}

Circuit Solver::backtrack(Mask subset) const {
    Circuit c;
    for (int i = 0; i < spec_.m; ++i) c.add_input(i);
    c.out = build(subset, c);
    return c;
}

int Solver::build(Mask subset, Circuit& c) const {
    if (subset_size(subset) == 1) return lowest_input(subset);
    const auto choice = mapped_choice(subset);
    if (!choice) throw std::logic_error("backtrack on unsolved sub-path");
    const auto [kind, s1] = *choice;
    const Mask same = same_gate_set(spec_, subset, kind);
    const Mask c1 = special_sub_path(spec_, subset, kind, s1);
    const Mask c2 = special_sub_path(spec_, subset, kind, same & ~s1);
    const int left = build(c1, c);
    const int right = build(c2, c);
    return c.add_gate(kind, left, right);
}

bool Solver::audit_table() const {
    for (const auto& [key, e] : memo_) {
        if (subset_size(key) == 1 || !e.best_delay) continue;
        if (!e.choice) return false;
        const GateKind kind = e.choice->kind;
        const Mask same = same_gate_set(spec_, key, kind);
        const Mask s1 = e.choice->s1;
        if ((s1 & ~same) != 0 || s1 == 0 || s1 == same) return false;
        const Mask c1 = special_sub_path(spec_, key, kind, s1);
        const Mask c2 = special_sub_path(spec_, key, kind, same & ~s1);
        const int d = 1 + std::max(entry_delay(c1), entry_delay(c2));
        if (d != *e.best_delay) return false;
        if (opts_.size_opt) {
            if (!e.best_size) return false;
            if (1 + entry_size(c1) + entry_size(c2) != *e.best_size) {
                return false;
            }
        }
        if (opts_.bounds && *e.best_delay < basic_lower_bound(spec_, key)) {
            return false;
        }
    }
    return true;
}

} // namespace aop
