// aopsynth: reference engines for certifying solver results.
#include "aop/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "aop/circuit.hpp"
#include "aop/errors.hpp"

namespace aop {
namespace {

std::uint32_t hash32(std::uint32_t x) {
    x ^= x >> 16;
    x *= 0x7feb352du;
    x ^= x >> 15;
    x *= 0x846ca68bu;
    x ^= x >> 16;
    return x;
}

/// Every monotone function reachable from positive literals under AND/OR,
/// indexed through a flat open-addressing table.  The constant functions
/// are unreachable, so the all-ones word is a safe empty marker.
struct Catalog {
    std::vector<std::uint32_t> tts;
    std::vector<std::int32_t> slots;
    std::uint32_t slot_mask = 0;

    int find(std::uint32_t tt) const {
        std::uint32_t h = hash32(tt) & slot_mask;
        while (true) {
            const std::int32_t id = slots[h];
            if (id < 0) return -1;
            if (tts[static_cast<std::size_t>(id)] == tt) return id;
            h = (h + 1) & slot_mask;
        }
    }

    int insert(std::uint32_t tt) {
        std::uint32_t h = hash32(tt) & slot_mask;
        while (true) {
            const std::int32_t id = slots[h];
            if (id < 0) {
                const int fresh = static_cast<int>(tts.size());
                tts.push_back(tt);
                slots[h] = fresh;
                return fresh;
            }
            if (tts[static_cast<std::size_t>(id)] == tt) return id;
            h = (h + 1) & slot_mask;
        }
    }
};

Catalog build_catalog(int m) {
    const int nbits = 1 << m;
    Catalog cat;
    cat.slots.assign(32768, -1);
    cat.slot_mask = 32767;
    for (int i = 0; i < m; ++i) {
        std::uint32_t tt = 0;
        for (int a = 0; a < nbits; ++a) {
            if ((a >> i) & 1) tt |= 1u << a;
        }
        cat.insert(tt);
    }
    // Closure under both gates: pairing each function, in discovery order,
    // with every function known so far covers every unordered pair once.
    for (std::size_t next = 0; next < cat.tts.size(); ++next) {
        const std::uint32_t x = cat.tts[next];
        for (std::size_t j = 0; j <= next; ++j) {
            const std::uint32_t y = cat.tts[j];
            cat.insert(x & y);
            cat.insert(x | y);
        }
    }
    return cat;
}

const Catalog& catalog_for(int m) {
    static std::map<int, Catalog> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, build_catalog(m)).first;
    return it->second;
}

/// Enumerates every sub-path partition of a composite subset: both gate
/// kinds, every pivot, every distribution of the members below the pivot.
template <typename Fn>
void for_each_partition(const AopSpec& spec, Mask subset, Fn&& fn) {
    const int last = highest_input(subset);
    for (const GateKind kind : {GateKind::And, GateKind::Or}) {
        const Mask same = same_gate_set(spec, subset, kind);
        Mask pivots = same & ~bit(last);
        for (; pivots != 0; pivots &= pivots - 1) {
            const int pivot = lowest_input(pivots);
            const Mask below = same & (bit(pivot) - 1);
            Mask s = below;
            while (true) {
                const Mask s1 = bit(pivot) | s;
                const Mask c1 = special_sub_path(spec, subset, kind, s1);
                const Mask c2 = special_sub_path(spec, subset, kind, same & ~s1);
                fn(c1, c2);
                if (s == 0) break;
                s = (s - 1) & below;
            }
        }
    }
}

struct SizeOracle {
    const AopSpec& spec;
    std::map<Mask, int> delay_memo;
    std::map<Mask, int> size_memo;

    int delay(Mask subset) {
        if (subset_size(subset) == 1) return spec.arrival[lowest_input(subset)];
        const auto it = delay_memo.find(subset);
        if (it != delay_memo.end()) return it->second;
        int best = std::numeric_limits<int>::max();
        for_each_partition(spec, subset, [&](Mask c1, Mask c2) {
            best = std::min(best, 1 + std::max(delay(c1), delay(c2)));
        });
        delay_memo.emplace(subset, best);
        return best;
    }

    int size(Mask subset) {
        if (subset_size(subset) == 1) return 0;
        const auto it = size_memo.find(subset);
        if (it != size_memo.end()) return it->second;
        const int d = delay(subset);
        int best = std::numeric_limits<int>::max();
        for_each_partition(spec, subset, [&](Mask c1, Mask c2) {
            if (1 + std::max(delay(c1), delay(c2)) != d) return;
            best = std::min(best, 1 + size(c1) + size(c2));
        });
        size_memo.emplace(subset, best);
        return best;
    }
};

struct Recount {
    const AopSpec& spec;
    std::map<Mask, int> delay_memo;
    SolveStats stats;

    int solve(Mask subset) {
        const auto it = delay_memo.find(subset);
        if (it != delay_memo.end()) return it->second;
        ++stats.entries;
        int best;
        if (subset_size(subset) == 1) {
            best = spec.arrival[lowest_input(subset)];
        } else {
            best = std::numeric_limits<int>::max();
            for_each_partition(spec, subset, [&](Mask c1, Mask c2) {
                ++stats.partitions;
                best = std::min(best, 1 + std::max(solve(c1), solve(c2)));
            });
        }
        delay_memo.emplace(subset, best);
        return best;
    }
};

} // namespace

std::vector<int> monotone_optimum_delays(
    int m, const std::vector<int>& arrival,
    const std::vector<std::vector<GateKind>>& gate_patterns) {
    if (m < 1 || m > 5) {
        throw UnsupportedSizeError("monotone search supports at most 5 inputs");
    }
    if (static_cast<int>(arrival.size()) != m) {
        throw std::invalid_argument("arrival count differs from input count");
    }
    const Catalog& cat = catalog_for(m);

    std::vector<int> target_ids;
    target_ids.reserve(gate_patterns.size());
    for (const auto& gates : gate_patterns) {
        AopSpec spec;
        spec.m = m;
        spec.gates = gates;
        spec.arrival = arrival;
        spec.validate();
        const TruthTable tt = aop_truth_table(spec);
        const int id = cat.find(static_cast<std::uint32_t>(tt[0]));
        if (id < 0) throw std::logic_error("target function not in catalog");
        target_ids.push_back(id);
    }

    std::vector<std::int16_t> dist(cat.tts.size(), -1);
    const int max_arrival = *std::max_element(arrival.begin(), arrival.end());
    const int max_level = max_arrival + 2 * (1 << m);
    std::vector<std::vector<std::int32_t>> levels(
        static_cast<std::size_t>(max_level) + 2);
    for (int i = 0; i < m; ++i) {
        std::uint32_t tt = 0;
        for (int a = 0; a < (1 << m); ++a) {
            if ((a >> i) & 1) tt |= 1u << a;
        }
        const int id = cat.find(tt);
        dist[static_cast<std::size_t>(id)] =
            static_cast<std::int16_t>(arrival[static_cast<std::size_t>(i)]);
        levels[static_cast<std::size_t>(arrival[static_cast<std::size_t>(i)])]
            .push_back(id);
    }

    const auto all_found = [&] {
        for (const int t : target_ids) {
            if (dist[static_cast<std::size_t>(t)] < 0) return false;
        }
        return true;
    };

    std::vector<std::int32_t> settled;
    settled.reserve(cat.tts.size());
    for (int d = 0; d <= max_level && !all_found(); ++d) {
        const std::size_t settled_before = settled.size();
        for (const std::int32_t id : levels[static_cast<std::size_t>(d)]) {
            settled.push_back(id);
        }
        auto& next = levels[static_cast<std::size_t>(d) + 1];
        for (std::size_t xi = settled_before; xi < settled.size(); ++xi) {
            const std::uint32_t x = cat.tts[static_cast<std::size_t>(settled[xi])];
            for (std::size_t yi = 0; yi < settled.size(); ++yi) {
                const std::uint32_t y =
                    cat.tts[static_cast<std::size_t>(settled[yi])];
                for (const std::uint32_t combined : {x & y, x | y}) {
                    if (combined == x || combined == y) continue;
                    const int id = cat.find(combined);
                    if (dist[static_cast<std::size_t>(id)] < 0) {
                        dist[static_cast<std::size_t>(id)] =
                            static_cast<std::int16_t>(d + 1);
                        next.push_back(id);
                    }
                }
            }
        }
    }

    std::vector<int> out;
    out.reserve(target_ids.size());
    for (const int t : target_ids) {
        const int d = dist[static_cast<std::size_t>(t)];
        if (d < 0) throw std::logic_error("search exhausted without target");
        out.push_back(d);
    }
    return out;
}

int monotone_optimum_delay(const AopSpec& spec) {
    spec.validate();
    return monotone_optimum_delays(spec.m, spec.arrival, {spec.gates})[0];
}

int strongly_optimum_size(const AopSpec& spec) {
    spec.validate();
    if (spec.m > 10) {
        throw UnsupportedSizeError("size oracle supports at most 10 inputs");
    }
    SizeOracle oracle{spec, {}, {}};
    return oracle.size(spec.full_mask());
}

SolveStats recount_scenario1(const AopSpec& spec) {
    spec.validate();
    if (spec.m > 14) {
        throw UnsupportedSizeError("recount supports at most 14 inputs");
    }
    Recount recount{spec, {}, {}};
    recount.solve(spec.full_mask());
    return recount.stats;
}

} // namespace aop
