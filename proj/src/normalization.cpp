#include "aop/normalization.hpp"

#include <bit>
#include <stdexcept>

namespace aop {

bool normalization_applicable(const AopSpec& spec) {
    return spec.is_alternating() && spec.uniform_arrival();
}

Mask sp_representative(const AopSpec& spec, Mask subset) {
    if (subset == 0) throw std::logic_error("sp_representative on empty subset");
    int last = highest_input(subset);
    Mask rep = bit(0);
    int pos = 0;
    int prev = lowest_input(subset);
    for (Mask rest = subset & (subset - 1); rest != 0; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        if (i == last)
            pos += 1;
        else
            pos += spec.gates[i] == spec.gates[prev] ? 2 : 1;
        rep |= bit(pos);
        prev = i;
    }
    return rep;
}

bool sp_canonical(Mask subset) {
    if ((subset & 1) == 0) return false;
    int top = highest_input(subset);
    if (top > 0 && ((subset >> (top - 1)) & 1) == 0) return false;
    for (int i = 2; i <= top; ++i)
        if (((subset >> i) & 1) && ((subset >> (i - 1)) & 1) == 0 &&
            ((subset >> (i - 2)) & 1) == 0)
            return false;
    return true;
}

std::uint64_t fib(int n) {
    if (n < 1) throw std::invalid_argument("fib needs n >= 1");
    std::uint64_t a = 1, b = 1;
    for (int i = 2; i < n; ++i) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return b;
}

std::uint64_t count_representatives(int m) {
    if (m < 1 || m > 22)
        throw UnsupportedSizeError("count_representatives enumerates 2^m subsets; "
                                   "m must be between 1 and 22");
    std::uint64_t total = 0;
    Mask full = (Mask{1} << m) - 1;
    for (Mask s = 1; s <= full; ++s)
        if (sp_canonical(s)) ++total;
    return total;
}

namespace {

// Pair alphabet in the order (0,1),(1,0),(1,1),(2,0),(2,1).
constexpr bool pair_may_follow(int prev, int next) {
    if (prev == 1) return next == 1 || next == 2; // after (1,0): only (1,0),(1,1)
    if (prev == 3) return next != 0;              // after (2,0): not (0,1)
    return true;
}

std::uint64_t count_q_suffixes(int remaining, int prev) {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (int next = 0; next < 5; ++next)
        if (prev < 0 || pair_may_follow(prev, next))
            total += count_q_suffixes(remaining - 1, next);
    return total;
}

} // namespace

std::uint64_t count_q_bruteforce(int n) {
    if (n < 1 || n > 10)
        throw UnsupportedSizeError("count_q_bruteforce enumerates 5^n strings; "
                                   "n must be between 1 and 10");
    return count_q_suffixes(n, -1);
}

std::uint64_t count_q(int n) {
    if (n < 1) throw std::invalid_argument("count_q needs n >= 1");
    if (n > 30)
        throw UnsupportedSizeError("count_q overflows 64 bits beyond n == 30");
    std::uint64_t q1 = 5, q2 = 21, q3 = 86;
    if (n == 1) return q1;
    if (n == 2) return q2;
    if (n == 3) return q3;
    for (int i = 4; i <= n; ++i) {
        std::uint64_t next = 5 * q3 - 4 * q2 + q1;
        q1 = q2;
        q2 = q3;
        q3 = next;
    }
    return q3;
}

std::uint64_t count_r(int n) {
    std::uint64_t total = 0;
    for (int i = 1; i <= n; ++i) total += count_q(i);
    return total;
}

std::vector<std::pair<Mask, Mask>> sp_conform_partitions(const AopSpec& spec,
                                                         Mask subset,
                                                         GateKind kind) {
    Mask same = same_gate_set(spec, subset, kind);
    int last = highest_input(subset);
    SegmentPartition part = segment_partition(spec, subset);

    // Same-gate members per segment in ascending order; the segment holding
    // the last input may never hand it to S1.
    std::vector<std::vector<int>> members(part.runs.size());
    std::vector<int> limit(part.runs.size());
    for (std::size_t b = 0; b < part.runs.size(); ++b) {
        for (Mask rest = part.runs[b] & same; rest != 0; rest &= rest - 1)
            members[b].push_back(std::countr_zero(rest));
        limit[b] = static_cast<int>(members[b].size());
        if (!members[b].empty() && members[b].back() == last) --limit[b];
    }

    std::vector<std::pair<Mask, Mask>> out;
    std::vector<int> cut(part.runs.size(), 0);
    for (;;) {
        Mask s1 = 0;
        for (std::size_t b = 0; b < part.runs.size(); ++b)
            for (int j = 0; j < cut[b]; ++j) s1 |= bit(members[b][j]);
        if (s1 != 0) out.emplace_back(s1, same & ~s1);
        std::size_t b = 0;
        while (b < part.runs.size() && cut[b] == limit[b]) cut[b++] = 0;
        if (b == part.runs.size()) break;
        ++cut[b];
    }
    return out;
}

} // namespace aop
