// aopsynth: delay optimization under exact rational arrival times, reduced
// to integral solves through threshold rounding, with a linear scan over
// all thresholds or a binary search exploiting monotonicity.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "aop/aop.hpp"
#include "aop/circuit.hpp"
#include "aop/rational.hpp"
#include "aop/solver.hpp"

namespace aop {

/// Instance whose arrival times are exact rationals.
struct FractionalInstance {
    int m = 0;
    std::vector<GateKind> gates;
    std::vector<Rational> arrival;

    void validate() const;
    bool integral() const;
};

/// Distinct fractional parts of the arrival times, sorted ascending.
std::vector<Rational> fractional_parts(const FractionalInstance& inst);

/// Integral instance for threshold alpha: arrivals whose fractional part
/// exceeds alpha round up, the rest round down.
AopSpec rounded_instance(const FractionalInstance& inst, const Rational& alpha);

/// Exact delay of a circuit under rational arrival times.
Rational rational_delay(const Circuit& c, const std::vector<Rational>& arrival);

struct FractionalResult {
    Rational delay;
    std::optional<int> size;
    Circuit circuit;
    Rational alpha;       // rounding threshold whose circuit was chosen
    int inner_solves = 0; // integral solver runs performed
    SolveStats stats;     // aggregated over the inner solves
};

/// Solves the rounded instance for every threshold and keeps the circuit
/// with the smallest delay under the original arrival times (smallest
/// threshold on ties).
FractionalResult solve_fractional_linear(const FractionalInstance& inst,
                                         SolveOptions opts);

/// Binary-search variant: the rounded optimum delay is non-increasing in
/// the threshold and takes at most two values, so the smallest threshold
/// reaching the final value is found with logarithmically many solves.
FractionalResult solve_fractional_binary(const FractionalInstance& inst,
                                         SolveOptions opts);

/// Smallest index whose value equals the last value of a non-increasing
/// sequence with at most two distinct values.  `eval` is invoked lazily and
/// memoized; the evaluated points are re-checked against the two-valued
/// non-increasing contract and a violation throws std::logic_error.
std::size_t binary_search_two_valued(std::size_t n,
                                     const std::function<int(std::size_t)>& eval);

} // namespace aop
