// aopsynth: fractional arrival time extensions.
#include "aop/fractional.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <utility>

#include "aop/errors.hpp"

namespace aop {
namespace {

AopSpec integral_shell(const FractionalInstance& inst) {
    AopSpec spec;
    spec.m = inst.m;
    spec.gates = inst.gates;
    spec.arrival.assign(static_cast<std::size_t>(inst.m), 0);
    return spec;
}

SolveOptions inner_options(SolveOptions opts) {
    if (opts.delay_cap) {
        throw std::invalid_argument(
            "delay caps are not supported for fractional arrival times");
    }
    // Rounding thresholds produce non-uniform arrivals, for which canonical
    // keys are undefined; disable the toggle outright for determinism.
    opts.normalization = false;
    return opts;
}

struct InnerSolve {
    OptResult result;
    Rational true_delay;
};

} // namespace

void FractionalInstance::validate() const {
    AopSpec shell = integral_shell(*this);
    shell.validate();
    if (static_cast<int>(arrival.size()) != m) {
        throw std::invalid_argument("arrival count differs from input count");
    }
    for (const Rational& a : arrival) {
        if (a < Rational(0)) {
            throw std::invalid_argument("arrival times must be non-negative");
        }
    }
}

bool FractionalInstance::integral() const {
    return std::all_of(arrival.begin(), arrival.end(),
                       [](const Rational& a) { return a.is_integer(); });
}

std::vector<Rational> fractional_parts(const FractionalInstance& inst) {
    std::vector<Rational> parts;
    for (const Rational& a : inst.arrival) parts.push_back(a.frac());
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    return parts;
}

AopSpec rounded_instance(const FractionalInstance& inst, const Rational& alpha) {
    AopSpec spec = integral_shell(inst);
    for (int i = 0; i < inst.m; ++i) {
        const Rational& a = inst.arrival[static_cast<std::size_t>(i)];
        const long long floor = a.floor_value();
        spec.arrival[static_cast<std::size_t>(i)] =
            static_cast<int>(a.frac() > alpha ? floor + 1 : floor);
    }
    return spec;
}

Rational rational_delay(const Circuit& c, const std::vector<Rational>& arrival) {
    std::vector<Rational> value(c.nodes.size());
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        const Node& node = c.nodes[i];
        if (node.op == Node::Op::Input) {
            value[i] = arrival.at(static_cast<std::size_t>(node.a));
        } else {
            const Rational l = value.at(static_cast<std::size_t>(node.a));
            const Rational r = value.at(static_cast<std::size_t>(node.b));
            value[i] = std::max(l, r) + Rational(1);
        }
    }
    return value.at(static_cast<std::size_t>(c.out));
}

std::size_t binary_search_two_valued(
    std::size_t n, const std::function<int(std::size_t)>& eval) {
    if (n == 0) throw std::invalid_argument("empty search range");
    std::map<std::size_t, int> seen;
    const auto get = [&](std::size_t i) {
        const auto it = seen.find(i);
        if (it != seen.end()) return it->second;
        const int v = eval(i);
        seen.emplace(i, v);
        return v;
    };

    const int final_value = get(n - 1);
    get(0);
    std::size_t lo = 0;
    std::size_t hi = n - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (get(mid) == final_value) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }

    int distinct = 1;
    for (auto it = std::next(seen.begin()); it != seen.end(); ++it) {
        const int prev = std::prev(it)->second;
        if (it->second > prev) {
            throw std::logic_error(
                "rounded optimum increased with the threshold; the "
                "monotonicity contract is violated");
        }
        if (it->second != prev) ++distinct;
    }
    if (distinct > 2) {
        throw std::logic_error(
            "rounded optimum took more than two values across thresholds; "
            "the two-valued contract is violated");
    }
    return lo;
}

FractionalResult solve_fractional_linear(const FractionalInstance& inst,
                                         SolveOptions opts) {
    inst.validate();
    const SolveOptions inner = inner_options(opts);
    const std::vector<Rational> parts = fractional_parts(inst);

    std::optional<FractionalResult> best;
    SolveStats aggregate;
    int solves = 0;
    for (const Rational& alpha : parts) {
        Solver solver(rounded_instance(inst, alpha), inner);
        OptResult r = solver.solve();
        ++solves;
        aggregate.entries += r.stats.entries;
        aggregate.partitions += r.stats.partitions;
        aggregate.ms += r.stats.ms;
        const Rational true_delay = rational_delay(*r.circuit, inst.arrival);
        if (!best || true_delay < best->delay) {
            best = FractionalResult{true_delay, r.size, std::move(*r.circuit),
                                    alpha, 0, {}};
        }
    }
    best->inner_solves = solves;
    best->stats = aggregate;
    return *best;
}

FractionalResult solve_fractional_binary(const FractionalInstance& inst,
                                         SolveOptions opts) {
    inst.validate();
    const SolveOptions inner = inner_options(opts);
    const std::vector<Rational> parts = fractional_parts(inst);

    std::map<std::size_t, OptResult> solved;
    SolveStats aggregate;
    int solves = 0;
    const auto eval = [&](std::size_t i) {
        const auto it = solved.find(i);
        if (it != solved.end()) return *it->second.delay;
        Solver solver(rounded_instance(inst, parts[i]), inner);
        OptResult r = solver.solve();
        ++solves;
        aggregate.entries += r.stats.entries;
        aggregate.partitions += r.stats.partitions;
        aggregate.ms += r.stats.ms;
        const int d = *r.delay;
        solved.emplace(i, std::move(r));
        return d;
    };

    const std::size_t star = binary_search_two_valued(parts.size(), eval);
    OptResult& chosen = solved.at(star);
    FractionalResult out{rational_delay(*chosen.circuit, inst.arrival),
                         chosen.size,
                         std::move(*chosen.circuit),
                         parts[star],
                         solves,
                         aggregate};
    return out;
}

} // namespace aop
