// aopsynth: adder carry networks and depth range tables.
#include "aop/adders.hpp"

#include <random>
#include <stdexcept>

#include "aop/errors.hpp"

namespace aop {
namespace {

/// Rewrites a circuit solved over the wide carry instance to the local
/// input numbering of one carry, shifting input indices down by `offset`.
Circuit localize(const Circuit& host, int offset, int num_inputs) {
    Circuit local;
    local.num_inputs = 0;
    std::vector<int> remap(host.nodes.size(), -1);
    for (std::size_t i = 0; i < host.nodes.size(); ++i) {
        const Node& node = host.nodes[i];
        if (node.op == Node::Op::Input) {
            const int idx = node.a - offset;
            if (idx < 0 || idx >= num_inputs) continue; // unused host input
            remap[i] = local.add_input(idx);
        } else {
            const int l = remap[static_cast<std::size_t>(node.a)];
            const int r = remap[static_cast<std::size_t>(node.b)];
            if (l < 0 || r < 0) {
                throw std::logic_error("carry circuit uses an input outside its range");
            }
            remap[i] = local.add_gate(
                node.op == Node::Op::And ? GateKind::And : GateKind::Or, l, r);
        }
    }
    local.num_inputs = num_inputs;
    local.out = remap[static_cast<std::size_t>(host.out)];
    if (local.out < 0) throw std::logic_error("carry output was not rebuilt");
    return local;
}

std::uint64_t low_bits(std::uint64_t v, int count) {
    return count >= 64 ? v : (v & ((std::uint64_t{1} << count) - 1));
}

} // namespace

AopSpec carry_aop(int i) {
    if (i < 0) throw std::invalid_argument("carry index must be non-negative");
    return AopSpec::alternating(2 * i + 1, GateKind::Or);
}

AdderPlan build_adder(int n, SolveOptions opts) {
    if (n < 1) throw std::invalid_argument("bit width must be positive");
    if (2 * n - 1 > 64) {
        throw UnsupportedSizeError("adder carry instance exceeds 64 inputs");
    }
    AdderPlan plan;
    plan.n = n;

    const AopSpec host = carry_aop(n - 1);
    Solver solver(host, opts);
    for (int i = 1; i <= n; ++i) {
        const int offset = 2 * (n - i);
        const Mask suffix = host.full_mask() & ~(bit(offset) - 1);
        OptResult r = solver.solve_subset(suffix);
        if (!r.delay || !r.circuit) {
            throw std::logic_error("carry sub-path solve failed");
        }
        plan.carries.push_back(localize(*r.circuit, offset, 2 * i - 1));
        plan.depths.push_back(*r.delay);
    }
    plan.depth = plan.depths.back();
    plan.stats = solver.stats();
    return plan;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> verify_adder(
    const AdderPlan& plan, std::uint64_t trials, std::uint64_t seed) {
    const int n = plan.n;
    const bool use_tables = n <= 10;
    std::vector<TruthTable> tables;
    if (use_tables) {
        tables.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            tables.push_back(
                truth_table(plan.carries[static_cast<std::size_t>(k)], 2 * k + 1));
        }
    }

    const auto carry_value = [&](int k, std::uint64_t g, std::uint64_t p) {
        // Local input j of carry k+1: g_{k-j/2} for even j, p_{k-(j-1)/2}
        // for odd j.
        std::uint64_t idx = 0;
        for (int j = 0; j < 2 * k + 1; ++j) {
            const std::uint64_t signal =
                (j % 2 == 0) ? (g >> (k - j / 2)) & 1 : (p >> (k - (j - 1) / 2)) & 1;
            idx |= signal << j;
        }
        if (use_tables) {
            const TruthTable& tt = tables[static_cast<std::size_t>(k)];
            return (tt[idx >> 6] >> (idx & 63)) & 1;
        }
        return std::uint64_t{
            evaluate(plan.carries[static_cast<std::size_t>(k)], idx) ? 1u : 0u};
    };

    const auto check_pair = [&](std::uint64_t a, std::uint64_t b) -> bool {
        const std::uint64_t g = a & b;
        const std::uint64_t p = a ^ b;
        const std::uint64_t sum = a + b;
        std::uint64_t carries = 0; // bit i holds c_i; c_0 = 0
        for (int k = 0; k < n; ++k) {
            const std::uint64_t c = carry_value(k, g, p);
            const std::uint64_t expected =
                (low_bits(a, k + 1) + low_bits(b, k + 1)) >> (k + 1);
            if (c != expected) return false;
            carries |= c << (k + 1);
        }
        for (int i = 0; i < n; ++i) {
            const std::uint64_t s =
                ((p >> i) & 1) ^ ((carries >> i) & 1);
            if (s != ((sum >> i) & 1)) return false;
        }
        if (((carries >> n) & 1) != ((sum >> n) & 1)) return false;
        return true;
    };

    if (n <= 10) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < limit; ++a) {
            for (std::uint64_t b = 0; b < limit; ++b) {
                if (!check_pair(a, b)) return std::make_pair(a, b);
            }
        }
        return std::nullopt;
    }

    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t a = low_bits(rng(), n);
        const std::uint64_t b = low_bits(rng(), n);
        if (!check_pair(a, b)) return std::make_pair(a, b);
    }
    return std::nullopt;
}

std::map<int, long long> propagate_depth_lower_bounds(
    const std::map<long long, int>& known) {
    std::map<int, long long> thresholds;
    for (const auto& [m, d] : known) {
        const auto it = thresholds.find(d);
        if (it == thresholds.end() || m < it->second) thresholds[d] = m;
    }
    if (thresholds.empty()) return thresholds;
    // Derivations only flow from a depth to the next, so one ascending
    // pass reaches the fixpoint; stop once the counts leave any useful
    // range.
    for (int d = thresholds.begin()->first; d <= 48; ++d) {
        const auto it = thresholds.find(d);
        if (it == thresholds.end()) continue;
        const long long derived = 2 * it->second - 1;
        const auto next = thresholds.find(d + 1);
        if (next == thresholds.end() || derived < next->second) {
            thresholds[d + 1] = derived;
        }
    }
    return thresholds;
}

const std::vector<std::pair<long long, long long>>& reference_depth_ranges() {
    static const std::vector<std::pair<long long, long long>> ranges = {
        {2, 2},         {3, 3},         {4, 6},         {7, 10},
        {11, 19},       {20, 33},       {34, 60},       {61, 109},
        {121, 202},     {241, 375},     {481, 698},     {961, 1311},
        {1921, 2466},   {3841, 4645},   {7681, 8782},   {15361, 16627},
        {30721, 31548},
    };
    return ranges;
}

const std::map<int, int>& reference_adder_depths() {
    static const std::map<int, int> depths = {
        {1, 0},     {2, 2},     {4, 4},     {8, 5},    {16, 6},
        {32, 8},    {64, 9},    {128, 10},  {256, 11}, {512, 12},
        {1024, 13}, {2048, 14}, {4096, 15}, {8192, 16},
    };
    return depths;
}

std::vector<DepthRangeRow> depth_table(int max_m, SolveOptions opts) {
    if (max_m < 1) throw std::invalid_argument("table needs at least one row");
    std::vector<DepthRangeRow> rows;
    for (int m = 1; m <= max_m; ++m) {
        Solver solver(AopSpec::alternating(m), opts);
        const OptResult r = solver.solve();
        const int d = *r.delay;
        if (!rows.empty() && rows.back().depth == d &&
            rows.back().label == RowLabel::Exact) {
            rows.back().m_high = m;
        } else {
            rows.push_back({d, m, m, RowLabel::Exact});
        }
    }
    const auto& reference = reference_depth_ranges();
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const int d = static_cast<int>(i) + 1;
        const long long low = std::max<long long>(reference[i].first, max_m + 1);
        if (low > reference[i].second) continue;
        rows.push_back({d, low, reference[i].second, RowLabel::Reference});
    }
    const long long tail = reference.back().second + 1;
    if (tail > max_m) {
        rows.push_back({static_cast<int>(reference.size()) + 1, tail, -1,
                        RowLabel::Bounded});
    }
    return rows;
}

} // namespace aop
