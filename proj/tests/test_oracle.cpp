// aopsynth: tests for the independent reference engines.
#include <doctest.h>

#include <random>
#include <vector>

#include "aop/aop.hpp"
#include "aop/errors.hpp"
#include "aop/oracle.hpp"
#include "aop/solver.hpp"

namespace {

using namespace aop;

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

std::vector<std::vector<GateKind>> all_gate_patterns(int m) {
    std::vector<std::vector<GateKind>> out;
    for (Mask bits = 0; bits < (Mask{1} << (m - 1)); ++bits) {
        std::vector<GateKind> gates;
        for (int i = 0; i + 1 < m; ++i)
            gates.push_back((bits >> i) & 1 ? GateKind::Or : GateKind::And);
        out.push_back(gates);
    }
    return out;
}

} // namespace

TEST_CASE("exhaustive monotone search on known instances") {
    CHECK(monotone_optimum_delay(AopSpec::alternating(1)) == 0);
    CHECK(monotone_optimum_delay(AopSpec::alternating(3)) == 2);
    CHECK(monotone_optimum_delay(AopSpec::alternating(5)) == 3);
    CHECK(monotone_optimum_delay(AopSpec::from_gate_string("A", {3, 0})) == 4);
    CHECK_THROWS_AS(monotone_optimum_delay(AopSpec::alternating(6)),
                    UnsupportedSizeError);
}

TEST_CASE("batched search labels every pattern like single searches") {
    for (const std::vector<int>& arrival :
         {std::vector<int>{0, 0, 0, 0}, std::vector<int>{1, 0, 2, 0}}) {
        const auto patterns = all_gate_patterns(4);
        const std::vector<int> batched =
            monotone_optimum_delays(4, arrival, patterns);
        REQUIRE(batched.size() == patterns.size());
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            AopSpec spec;
            spec.m = 4;
            spec.gates = patterns[i];
            spec.arrival = arrival;
            CHECK(batched[i] == monotone_optimum_delay(spec));
        }
    }
}

TEST_CASE("monotone optimum is dual invariant") {
    for (int m = 2; m <= 4; ++m) {
        for (const auto& gates : all_gate_patterns(m)) {
            for (Mask a = 0; a < (Mask{1} << m); ++a) {
                AopSpec spec;
                spec.m = m;
                spec.gates = gates;
                for (int i = 0; i < m; ++i)
                    spec.arrival.push_back((a >> i) & 1);
                CHECK(monotone_optimum_delay(spec) ==
                      monotone_optimum_delay(dualize(spec)));
            }
        }
    }
}

TEST_CASE("strongly optimum size reference agrees with the solver") {
    CHECK(strongly_optimum_size(AopSpec::alternating(2)) == 1);
    CHECK(strongly_optimum_size(AopSpec::alternating(1)) == 0);

    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 12; ++trial) {
        const AopSpec spec = random_spec(rng, 2 + static_cast<int>(rng() % 7), 2);
        Solver solver(spec, SolveOptions::scenario(5, true));
        const OptResult r = solver.solve();
        REQUIRE(r.size.has_value());
        CHECK(*r.size == strongly_optimum_size(spec));
    }
    CHECK_THROWS_AS(strongly_optimum_size(AopSpec::alternating(11)),
                    UnsupportedSizeError);
}

TEST_CASE("recount matches hand-expanded recurrences") {
    const SolveStats alt = recount_scenario1(AopSpec::from_gate_string("AO"));
    CHECK(alt.entries == 7);
    CHECK(alt.partitions == 5);

    const SolveStats runs = recount_scenario1(AopSpec::from_gate_string("AA"));
    CHECK(runs.entries == 7);
    CHECK(runs.partitions == 6);
}

TEST_CASE("bare recurrence touches every non-empty subset") {
    for (int m = 4; m <= 10; ++m) {
        const SolveStats s = recount_scenario1(AopSpec::alternating(m));
        CHECK(s.entries == (std::uint64_t{1} << m) - 1);
    }
    CHECK_THROWS_AS(recount_scenario1(AopSpec::alternating(15)),
                    UnsupportedSizeError);
}
