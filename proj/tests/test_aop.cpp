// aopsynth: tests for the instance model and sub-path structure.
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "aop/aop.hpp"
#include "aop/errors.hpp"

namespace {

using namespace aop;

Mask mask_of(std::initializer_list<int> indices) {
    Mask m = 0;
    for (int i : indices) m |= bit(i);
    return m;
}

/// Twelve inputs with runs (t0),(t1..t4),(t5,t6),(t7),(t8..t11).
AopSpec twelve() { return AopSpec::from_gate_string("AOOOOAAOAAA"); }

} // namespace

TEST_CASE("gate kinds and masks") {
    CHECK(dual(GateKind::And) == GateKind::Or);
    CHECK(dual(GateKind::Or) == GateKind::And);
    CHECK(gate_char(GateKind::And) == 'A');
    CHECK(gate_char(GateKind::Or) == 'O');
    CHECK(bit(0) == 1u);
    CHECK(bit(5) == 32u);
    CHECK(subset_size(mask_of({0, 3, 7})) == 3);
    CHECK(lowest_input(mask_of({2, 5})) == 2);
    CHECK(highest_input(mask_of({2, 5})) == 5);
}

TEST_CASE("spec construction and validation") {
    const AopSpec alt = AopSpec::alternating(5);
    CHECK(alt.m == 5);
    CHECK(alt.gates == std::vector<GateKind>{GateKind::And, GateKind::Or,
                                             GateKind::And, GateKind::Or});
    CHECK(alt.is_alternating());
    CHECK(alt.uniform_arrival());
    CHECK(alt.full_mask() == 0b11111u);

    const AopSpec alt_or = AopSpec::alternating(3, GateKind::Or);
    CHECK(alt_or.gates ==
          std::vector<GateKind>{GateKind::Or, GateKind::And});

    const AopSpec spec = AopSpec::from_gate_string("AOA", {0, 2, 0, 1});
    CHECK(spec.m == 4);
    CHECK_FALSE(spec.uniform_arrival());
    CHECK(spec.is_alternating());
    CHECK_FALSE(twelve().is_alternating());

    CHECK_THROWS_AS(AopSpec::from_gate_string("AXB"), std::invalid_argument);
    CHECK_THROWS_AS(AopSpec::from_gate_string("AO", {0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(AopSpec::from_gate_string("A", {0, -1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(AopSpec::from_gate_string(std::string(64, 'A')),
                    UnsupportedSizeError);
    AopSpec empty;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("dualize flips every gate and is an involution") {
    const AopSpec spec = AopSpec::from_gate_string("AOA");
    const AopSpec flipped = dualize(spec);
    CHECK(flipped.gates == std::vector<GateKind>{GateKind::Or, GateKind::And,
                                                GateKind::Or});
    CHECK(dualize(flipped).gates == spec.gates);
}

TEST_CASE("same-gate sets of the twelve-input instance") {
    const AopSpec spec = twelve();
    const Mask full = spec.full_mask();
    CHECK(same_gate_set(spec, full, GateKind::And) ==
          mask_of({0, 5, 6, 8, 9, 10, 11}));
    CHECK(same_gate_set(spec, full, GateKind::Or) ==
          mask_of({1, 2, 3, 4, 7, 11}));
    CHECK(dual_gate_set(spec, full, GateKind::And) ==
          mask_of({1, 2, 3, 4, 7}));
    CHECK(dual_gate_set(spec, full, GateKind::Or) ==
          mask_of({0, 5, 6, 8, 9, 10}));
}

TEST_CASE("one-input subsets belong to both same-gate sets") {
    const AopSpec spec = AopSpec::alternating(4);
    CHECK(same_gate_set(spec, bit(0), GateKind::And) == bit(0));
    CHECK(same_gate_set(spec, bit(0), GateKind::Or) == bit(0));
    CHECK(dual_gate_set(spec, bit(2), GateKind::And) == 0);
}

TEST_CASE("same and dual gate sets partition every subset") {
    const AopSpec spec = twelve();
    for (Mask s = 1; s <= spec.full_mask(); ++s) {
        for (const GateKind k : {GateKind::And, GateKind::Or}) {
            const Mask same = same_gate_set(spec, s, k);
            const Mask diff = dual_gate_set(spec, s, k);
            CHECK((same | diff) == s);
            CHECK((same & diff) == 0);
            CHECK((same & bit(highest_input(s))) != 0);
        }
    }
}

TEST_CASE("segment partition of the twelve-input instance") {
    const AopSpec spec = twelve();
    const SegmentPartition part = segment_partition(spec, spec.full_mask());
    REQUIRE(part.runs.size() == 5);
    CHECK(part.runs[0] == mask_of({0}));
    CHECK(part.runs[1] == mask_of({1, 2, 3, 4}));
    CHECK(part.runs[2] == mask_of({5, 6}));
    CHECK(part.runs[3] == mask_of({7}));
    CHECK(part.runs[4] == mask_of({8, 9, 10, 11}));
    CHECK(part.kinds == std::vector<GateKind>{GateKind::And, GateKind::Or,
                                              GateKind::And, GateKind::Or,
                                              GateKind::And});
}

TEST_CASE("segment partition of alternating and singleton subsets") {
    const AopSpec alt = AopSpec::alternating(5);
    const SegmentPartition part = segment_partition(alt, alt.full_mask());
    REQUIRE(part.runs.size() == 4);
    CHECK(part.runs[0] == mask_of({0}));
    CHECK(part.runs[1] == mask_of({1}));
    CHECK(part.runs[2] == mask_of({2}));
    CHECK(part.runs[3] == mask_of({3, 4}));

    const SegmentPartition single = segment_partition(alt, bit(3));
    REQUIRE(single.runs.size() == 1);
    CHECK(single.runs[0] == bit(3));
}

TEST_CASE("segment runs alternate in kind and concatenate to the subset") {
    const AopSpec spec = twelve();
    for (Mask s = 1; s <= spec.full_mask(); ++s) {
        const SegmentPartition part = segment_partition(spec, s);
        Mask whole = 0;
        int prev_high = -1;
        for (std::size_t b = 0; b < part.runs.size(); ++b) {
            REQUIRE(part.runs[b] != 0);
            CHECK(lowest_input(part.runs[b]) > prev_high);
            prev_high = highest_input(part.runs[b]);
            CHECK((whole & part.runs[b]) == 0);
            whole |= part.runs[b];
            if (b > 0) CHECK(part.kinds[b] != part.kinds[b - 1]);
        }
        CHECK(whole == s);
        if (subset_size(s) >= 2) {
            CHECK(subset_size(part.runs.back()) >= 2);
        }
    }
}

TEST_CASE("special sub-paths of the twelve-input instance") {
    const AopSpec spec = twelve();
    const Mask full = spec.full_mask();
    CHECK(special_sub_path(spec, full, GateKind::Or, mask_of({1, 2, 3, 4})) ==
          mask_of({0, 1, 2, 3, 4}));
    CHECK(special_sub_path(spec, full, GateKind::Or, mask_of({7, 11})) ==
          mask_of({0, 5, 6, 7, 8, 9, 10, 11}));
    CHECK(special_sub_path(spec, full, GateKind::Or,
                           same_gate_set(spec, full, GateKind::Or)) == full);
    CHECK(special_sub_path(spec, full, GateKind::And,
                           same_gate_set(spec, full, GateKind::And)) == full);
    CHECK_THROWS_AS(special_sub_path(spec, full, GateKind::Or, Mask{0}),
                    std::logic_error);
}

TEST_CASE("special sub-path maximum is the part maximum") {
    const AopSpec spec = twelve();
    const Mask full = spec.full_mask();
    for (const GateKind k : {GateKind::And, GateKind::Or}) {
        const Mask same = same_gate_set(spec, full, k);
        for (Mask part = same; part != 0; part = (part - 1) & same) {
            const Mask sub = special_sub_path(spec, full, k, part);
            CHECK((sub & part) == part);
            CHECK(highest_input(sub) == highest_input(part));
        }
    }
}

TEST_CASE("standard delay") {
    CHECK(standard_delay(AopSpec::alternating(5), 0b11111u) == 4);
    CHECK(standard_delay(AopSpec::alternating(1), 1u) == 0);
    const AopSpec late = AopSpec::from_gate_string("A", {3, 0});
    CHECK(standard_delay(late, 0b11u) == 4);
    const AopSpec spread = AopSpec::from_gate_string("AOA", {0, 5, 0, 0});
    // t1 arrives at 5 and passes through the two topmost chain gates.
    CHECK(standard_delay(spread, 0b1111u) == 7);
    CHECK(standard_delay(spread, mask_of({0, 2, 3})) == 2);
}

TEST_CASE("induced sub-path renumbers inputs") {
    const AopSpec spec = AopSpec::from_gate_string("AOOA", {1, 2, 3, 4, 5});
    const AopSpec sub = induced_sub_path(spec, mask_of({0, 2, 4}));
    CHECK(sub.m == 3);
    CHECK(sub.gates == std::vector<GateKind>{GateKind::And, GateKind::Or});
    CHECK(sub.arrival == std::vector<int>{1, 3, 5});
}
