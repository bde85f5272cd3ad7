// aopsynth: tests for delay optimization under rational arrival times.
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "aop/aop.hpp"
#include "aop/circuit.hpp"
#include "aop/fractional.hpp"
#include "aop/rational.hpp"
#include "aop/solver.hpp"

namespace {

using namespace aop;

FractionalInstance random_instance(std::mt19937_64& rng, int m) {
    FractionalInstance inst;
    inst.m = m;
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> num(0, 30);
    const int dens[] = {1, 2, 3, 4, 5, 10};
    for (int i = 0; i + 1 < m; ++i)
        inst.gates.push_back(coin(rng) ? GateKind::And : GateKind::Or);
    for (int i = 0; i < m; ++i) {
        const int den = dens[rng() % 6];
        inst.arrival.push_back(Rational(num(rng) % (4 * den + 1), den));
    }
    inst.validate();
    return inst;
}

FractionalInstance worked_example() {
    FractionalInstance inst;
    inst.m = 3;
    inst.gates = {GateKind::And, GateKind::Or};
    inst.arrival = {Rational::parse("1.3"), Rational(2), Rational::parse("0.5")};
    return inst;
}

} // namespace

TEST_CASE("threshold rounding") {
    const FractionalInstance inst = worked_example();
    CHECK(fractional_parts(inst) ==
          std::vector<Rational>{Rational(0), Rational(3, 10), Rational(1, 2)});

    CHECK(rounded_instance(inst, Rational(0)).arrival ==
          std::vector<int>{2, 2, 1});
    CHECK(rounded_instance(inst, Rational(3, 10)).arrival ==
          std::vector<int>{1, 2, 1});
    CHECK(rounded_instance(inst, Rational(1, 2)).arrival ==
          std::vector<int>{1, 2, 0});
}

TEST_CASE("two-valued binary search") {
    // Walkthrough profile: thresholds {0, 0.3, 0.4, 0.5, 0.7, 0.8} with
    // rounded optima (6, 6, 6, 5, 5, 5) select the threshold 1/2 and a
    // final delay of 5.5.
    const std::vector<Rational> parts = {Rational(0),     Rational(3, 10),
                                         Rational(2, 5),  Rational(1, 2),
                                         Rational(7, 10), Rational(4, 5)};
    std::vector<std::size_t> calls;
    const std::vector<int> values = {6, 6, 6, 5, 5, 5};
    const auto eval = [&](std::size_t i) {
        calls.push_back(i);
        return values[i];
    };
    const std::size_t star = binary_search_two_valued(values.size(), eval);
    CHECK(star == 3);
    CHECK(parts[star] == Rational(1, 2));
    CHECK((Rational(values[star]) + parts[star]).str() == "5.5");
    CHECK(calls == std::vector<std::size_t>{5, 0, 2, 4, 3});

    calls.clear();
    const auto flat = [&](std::size_t i) {
        calls.push_back(i);
        return 7;
    };
    CHECK(binary_search_two_valued(4, flat) == 0);
    CHECK(calls.size() == 3);

    const auto rising = [](std::size_t i) { return i == 0 ? 5 : 6; };
    CHECK_THROWS_AS(binary_search_two_valued(2, rising), std::logic_error);

    const auto three = [](std::size_t i) { return 6 - static_cast<int>(i); };
    CHECK_THROWS_AS(binary_search_two_valued(3, three), std::logic_error);

    CHECK_THROWS_AS(binary_search_two_valued(0, rising), std::invalid_argument);
}

TEST_CASE("small instance with equal rounded optima keeps threshold zero") {
    // Every threshold of this instance rounds to an optimum of 4 and the
    // true delay of each winner is 4, so the scan keeps the smallest
    // threshold.
    const FractionalInstance inst = worked_example();
    const FractionalResult lin =
        solve_fractional_linear(inst, SolveOptions::scenario(5));
    const FractionalResult bin =
        solve_fractional_binary(inst, SolveOptions::scenario(5));
    CHECK(lin.alpha == Rational(0));
    CHECK(bin.alpha == Rational(0));
    CHECK(lin.delay == Rational(4));
    CHECK(lin.delay == bin.delay);
    CHECK(lin.delay == rational_delay(lin.circuit, inst.arrival));
    CHECK(lin.inner_solves == 3);
    CHECK(bin.inner_solves <= 3);
}

TEST_CASE("linear and binary variants agree on random instances") {
    std::mt19937_64 rng(5550123);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 7);
        const FractionalInstance inst = random_instance(rng, m);
        const FractionalResult lin =
            solve_fractional_linear(inst, SolveOptions::scenario(5));
        const FractionalResult bin =
            solve_fractional_binary(inst, SolveOptions::scenario(5));

        CHECK(lin.delay == bin.delay);
        CHECK(lin.delay == rational_delay(lin.circuit, inst.arrival));
        CHECK(bin.delay == rational_delay(bin.circuit, inst.arrival));
        CHECK(lin.inner_solves ==
              static_cast<int>(fractional_parts(inst).size()));
        CHECK(bin.inner_solves <= lin.inner_solves);

        const CircuitMetrics mm = metrics(lin.circuit, rounded_instance(inst, lin.alpha).arrival);
        CHECK(mm.max_gate_fanout <= 1);
        CHECK(equivalent(lin.circuit, standard_circuit(rounded_instance(inst, Rational(0))), inst.m));
    }
}

TEST_CASE("integral instances reduce to one inner solve") {
    FractionalInstance inst;
    inst.m = 4;
    inst.gates = {GateKind::And, GateKind::Or, GateKind::And};
    inst.arrival = {Rational(2), Rational(0), Rational(1), Rational(0)};
    CHECK(inst.integral());

    const FractionalResult r =
        solve_fractional_binary(inst, SolveOptions::scenario(5));
    CHECK(r.inner_solves == 1);
    CHECK(r.alpha == Rational(0));

    AopSpec spec;
    spec.m = 4;
    spec.gates = inst.gates;
    spec.arrival = {2, 0, 1, 0};
    Solver direct(spec, SolveOptions::scenario(5));
    CHECK(r.delay == Rational(*direct.solve().delay));
}

TEST_CASE("uniform integer shifts move the delay and keep the circuit") {
    const FractionalInstance inst = worked_example();
    FractionalInstance shifted = inst;
    for (Rational& a : shifted.arrival) a = a + Rational(2);

    const FractionalResult base =
        solve_fractional_binary(inst, SolveOptions::scenario(5));
    const FractionalResult moved =
        solve_fractional_binary(shifted, SolveOptions::scenario(5));
    CHECK(moved.delay == base.delay + Rational(2));
    CHECK(dot_graph(moved.circuit) == dot_graph(base.circuit));
}

TEST_CASE("unsupported configurations are rejected") {
    const FractionalInstance inst = worked_example();
    SolveOptions opts = SolveOptions::scenario(5);
    opts.delay_cap = 4;
    CHECK_THROWS_AS(solve_fractional_linear(inst, opts), std::invalid_argument);
    CHECK_THROWS_AS(solve_fractional_binary(inst, opts), std::invalid_argument);

    FractionalInstance bad = inst;
    bad.arrival[1] = Rational(-1, 2);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(solve_fractional_linear(bad, SolveOptions::scenario(5)),
                    std::invalid_argument);
}
