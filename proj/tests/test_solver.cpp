// aopsynth: tests for the exact delay and size optimization engine.
#include <doctest.h>

#include <cstdlib>
#include <optional>
#include <random>
#include <vector>

#include "aop/aop.hpp"
#include "aop/circuit.hpp"
#include "aop/errors.hpp"
#include "aop/normalization.hpp"
#include "aop/oracle.hpp"
#include "aop/solver.hpp"

namespace {

using namespace aop;

Mask mask_of(std::initializer_list<int> indices) {
    Mask m = 0;
    for (int i : indices) m |= bit(i);
    return m;
}

AopSpec random_spec(std::mt19937_64& rng, int m, int max_arrival) {
    AopSpec spec;
    spec.m = m;
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> arr(0, max_arrival);
    for (int i = 0; i + 1 < m; ++i)
        spec.gates.push_back(coin(rng) ? GateKind::And : GateKind::Or);
    for (int i = 0; i < m; ++i) spec.arrival.push_back(arr(rng));
    return spec;
}

/// Checks a feasible delay-mode result: reported delay realized by an
/// equivalent fanout-free circuit.
void check_result(const AopSpec& spec, const OptResult& r) {
    REQUIRE(r.delay.has_value());
    REQUIRE(r.circuit.has_value());
    const CircuitMetrics m = metrics(*r.circuit, spec.arrival);
    CHECK(m.delay == *r.delay);
    CHECK(m.max_gate_fanout <= 1);
    CHECK(equivalent(*r.circuit, standard_circuit(spec), spec.m));
    if (r.size) CHECK(m.size == *r.size);
    CHECK(r.lower_bound == *r.delay);
}

} // namespace

TEST_CASE("alternating depth sequence for small inputs") {
    const int expected[] = {0, 1, 2, 3, 3, 3, 4};
    for (int m = 1; m <= 7; ++m) {
        Solver solver(AopSpec::alternating(m), SolveOptions::scenario(5));
        const OptResult r = solver.solve();
        CHECK(r.delay == expected[m - 1]);
        check_result(solver.instance(), r);
        CHECK(solver.audit_table());
    }
}

TEST_CASE("trivial and tiny instances") {
    Solver one(AopSpec::from_gate_string("", {7}), SolveOptions::scenario(5, true));
    const OptResult r1 = one.solve();
    CHECK(r1.delay == 7);
    CHECK(r1.size == 0);
    CHECK(r1.circuit->size() == 0);

    Solver two(AopSpec::from_gate_string("A", {3, 0}), SolveOptions::scenario(5));
    const OptResult r2 = two.solve();
    CHECK(r2.delay == 4);
    check_result(two.instance(), r2);
}

TEST_CASE("all scenarios agree on random instances") {
    std::mt19937_64 rng(20260822);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 9);
        const AopSpec spec = random_spec(rng, m, trial % 2 ? 2 : 0);

        std::optional<int> delay;
        for (int sc = 1; sc <= 5; ++sc) {
            Solver solver(spec, SolveOptions::scenario(sc));
            const OptResult r = solver.solve();
            check_result(spec, r);
            CHECK(solver.audit_table());
            if (!delay)
                delay = r.delay;
            else
                CHECK(r.delay == delay);
        }

        std::optional<int> size;
        for (int sc = 1; sc <= 5; ++sc) {
            Solver solver(spec, SolveOptions::scenario(sc, true));
            const OptResult r = solver.solve();
            check_result(spec, r);
            CHECK(r.delay == delay);
            REQUIRE(r.size.has_value());
            if (!size)
                size = r.size;
            else
                CHECK(r.size == size);
        }
    }
}

TEST_CASE("dual instances have equal optima") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const AopSpec spec = random_spec(rng, 2 + static_cast<int>(rng() % 7), 1);
        Solver a(spec, SolveOptions::scenario(5, true));
        Solver b(dualize(spec), SolveOptions::scenario(5, true));
        const OptResult ra = a.solve();
        const OptResult rb = b.solve();
        CHECK(ra.delay == rb.delay);
        CHECK(ra.size == rb.size);
    }
}

TEST_CASE("delay caps prove infeasibility or leave the optimum alone") {
    const AopSpec spec = AopSpec::alternating(4);
    for (int sc = 1; sc <= 5; ++sc) {
        SolveOptions opts = SolveOptions::scenario(sc);
        opts.delay_cap = 2;
        Solver capped(spec, opts);
        const OptResult r = capped.solve();
        CHECK_FALSE(r.delay.has_value());
        CHECK_FALSE(r.circuit.has_value());
        CHECK(r.lower_bound == 3);

        opts.delay_cap = 10;
        Solver roomy(spec, opts);
        const OptResult r2 = roomy.solve();
        CHECK(r2.delay == 3);
    }
}

TEST_CASE("time budget aborts long searches") {
    setenv("AOP_TIME_BUDGET_SECS", "0.01", 1);
    Solver solver(AopSpec::alternating(20), SolveOptions::scenario(1));
    CHECK_THROWS_AS(solver.solve(), BudgetExceededError);
    unsetenv("AOP_TIME_BUDGET_SECS");
}

TEST_CASE("bare recurrence statistics match the independent recount") {
    std::mt19937_64 rng(99);
    for (int m = 6; m <= 10; ++m) {
        const AopSpec spec = random_spec(rng, m, 1);
        Solver solver(spec, SolveOptions::scenario(1));
        solver.solve();
        const SolveStats expected = recount_scenario1(spec);
        CHECK(solver.stats().entries == expected.entries);
        CHECK(solver.stats().partitions == expected.partitions);
    }
}

TEST_CASE("canonical keys shrink the table to Fibonacci size") {
    for (int m = 1; m <= 16; ++m) {
        Solver solver(AopSpec::alternating(m), SolveOptions::scenario(2));
        const OptResult r = solver.solve();
        CHECK(r.delay.has_value());
        CHECK(solver.memo_size() == fib(m + 1));
        CHECK(solver.stats().entries == fib(m + 1));
    }
}

TEST_CASE("sub-path solves share the table and reuse entries") {
    const AopSpec spec = AopSpec::alternating(4);
    Solver solver(spec, SolveOptions::scenario(5));
    const Mask subset = mask_of({1, 2, 3});

    const OptResult r = solver.solve_subset(subset);
    CHECK(r.delay == 2);
    REQUIRE(r.circuit.has_value());
    CHECK(metrics(*r.circuit, spec.arrival).delay == 2);
    CHECK(equivalent(*r.circuit, standard_circuit(spec, subset), spec.m));

    const std::size_t entries = solver.memo_size();
    const OptResult again = solver.solve_subset(subset);
    CHECK(again.delay == r.delay);
    CHECK(solver.memo_size() == entries);

    CHECK_FALSE(solver.mapped_choice(mask_of({2})).has_value());
    CHECK(solver.mapped_choice(subset).has_value());
}
