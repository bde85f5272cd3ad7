// aopsynth: tests for delay lower bounds and subset condensation.
#include <doctest.h>

#include <optional>
#include <vector>

#include "aop/aop.hpp"
#include "aop/bounds.hpp"

namespace {

using namespace aop;

Mask mask_of(std::initializer_list<int> indices) {
    Mask m = 0;
    for (int i : indices) m |= bit(i);
    return m;
}

} // namespace

TEST_CASE("weighted ceiling log bound") {
    CHECK(ceil_log2_weight({0, 0, 0, 0, 0}) == 3);
    CHECK(ceil_log2_weight({0}) == 0);
    CHECK(ceil_log2_weight({3}) == 3);
    CHECK(ceil_log2_weight({2, 2}) == 3);
    CHECK(ceil_log2_weight({0, 0}) == 1);
    CHECK(ceil_log2_weight({1, 1, 1}) == 3);
}

TEST_CASE("basic lower bound") {
    const AopSpec alt = AopSpec::alternating(5);
    CHECK(basic_lower_bound(alt, alt.full_mask()) == 3);

    const AopSpec shifted =
        AopSpec::from_gate_string("AOAO", {0, 0, 0, 1, 1});
    CHECK(basic_lower_bound(shifted, shifted.full_mask()) == 3);

    const AopSpec runs = AopSpec::from_gate_string("AAA");
    CHECK(basic_lower_bound(runs, runs.full_mask()) == 2);

    CHECK(basic_lower_bound(alt, mask_of({2})) == 0);
    const AopSpec late = AopSpec::from_gate_string("A", {3, 0});
    CHECK(basic_lower_bound(late, mask_of({0})) == 3);
}

TEST_CASE("cross partition bound dominates the basic term") {
    AopSpec spec = AopSpec::from_gate_string("AOOOOAAOAAA");
    spec.arrival[0] = 2;
    const Mask full = spec.full_mask();
    CHECK(basic_lower_bound(spec, full) == 4);
    CHECK(cross_partition_lower_bound(spec, full, GateKind::Or, 4) == 5);
    for (const GateKind k : {GateKind::And, GateKind::Or}) {
        const Mask same = same_gate_set(spec, full, k);
        for (Mask rest = same & ~bit(11); rest != 0; rest &= rest - 1) {
            const int pivot = lowest_input(rest & (~rest + 1));
            CHECK(cross_partition_lower_bound(spec, full, k, pivot) >=
                  basic_lower_bound(spec, full));
        }
    }
}

TEST_CASE("condensation keeps one witness per redundant run") {
    const AopSpec spec = AopSpec::from_gate_string("AOOOOAAOAAA");
    CHECK(condensed_subset(spec, spec.full_mask()) ==
          mask_of({0, 1, 2, 3, 4, 5, 7, 10, 11}));

    const AopSpec alt = AopSpec::alternating(6);
    CHECK(condensed_subset(alt, alt.full_mask()) == alt.full_mask());
}

TEST_CASE("drop one removes a latest-arriving inner input") {
    const AopSpec alt = AopSpec::alternating(5);
    CHECK(drop_one_subset(alt, alt.full_mask()) == mask_of({0, 1, 2, 4}));

    const AopSpec late = AopSpec::from_gate_string("AOAO", {0, 1, 1, 1, 1});
    CHECK(drop_one_subset(late, late.full_mask()) == mask_of({1, 2, 3, 4}));

    const AopSpec two = AopSpec::alternating(2);
    CHECK(drop_one_subset(two, two.full_mask()) == mask_of({1}));
}

TEST_CASE("strong condensation bound consults the recursive solver") {
    const AopSpec spec = AopSpec::from_gate_string("AOOOOAAOAAA");
    const Mask full = spec.full_mask();
    const Mask condensed = condensed_subset(spec, full);

    int calls = 0;
    SolveWithin fails = [&](Mask s, int cap) -> std::optional<int> {
        ++calls;
        CHECK(s == condensed);
        CHECK(cap == 6);
        return std::nullopt;
    };
    CHECK(strong_lower_bound_condense(spec, full, fails, 6) == 7);
    CHECK(calls == 1);

    SolveWithin answers = [&](Mask, int) -> std::optional<int> { return 5; };
    CHECK(strong_lower_bound_condense(spec, full, answers, 6) == 5);

    // An alternating path condenses to itself, so the bound is vacuous and
    // the solver must not be consulted.
    const AopSpec alt = AopSpec::alternating(6);
    int alt_calls = 0;
    SolveWithin counter = [&](Mask, int) -> std::optional<int> {
        ++alt_calls;
        return std::nullopt;
    };
    CHECK(strong_lower_bound_condense(alt, alt.full_mask(), counter, 4) == 0);
    CHECK(alt_calls == 0);
}

TEST_CASE("strong drop-one bound consults the recursive solver") {
    const AopSpec alt = AopSpec::alternating(5);
    const Mask full = alt.full_mask();
    const Mask dropped = drop_one_subset(alt, full);

    int calls = 0;
    SolveWithin fails = [&](Mask s, int cap) -> std::optional<int> {
        ++calls;
        CHECK(s == dropped);
        CHECK(cap == 3);
        return std::nullopt;
    };
    CHECK(strong_lower_bound_drop_one(alt, full, fails, 3) == 4);
    CHECK(calls == 1);

    SolveWithin answers = [&](Mask, int) -> std::optional<int> { return 3; };
    CHECK(strong_lower_bound_drop_one(alt, full, answers, 3) == 3);
}
