#include "aop/aop.hpp"

#include <bit>
#include <stdexcept>

namespace aop {

char gate_char(GateKind k) { return k == GateKind::And ? 'A' : 'O'; }

int subset_size(Mask s) { return std::popcount(s); }

int lowest_input(Mask s) {
    if (s == 0) throw std::logic_error("lowest_input on empty mask");
    return std::countr_zero(s);
}

int highest_input(Mask s) {
    if (s == 0) throw std::logic_error("highest_input on empty mask");
    return 63 - std::countl_zero(s);
}

AopSpec AopSpec::alternating(int m, GateKind first) {
    AopSpec spec;
    spec.m = m;
    spec.gates.reserve(m > 0 ? m - 1 : 0);
    for (int i = 0; i + 1 < m; ++i)
        spec.gates.push_back(i % 2 == 0 ? first : dual(first));
    spec.arrival.assign(m > 0 ? m : 0, 0);
    spec.validate();
    return spec;
}

AopSpec AopSpec::from_gate_string(const std::string& s, std::vector<int> arrival) {
    AopSpec spec;
    spec.m = static_cast<int>(s.size()) + 1;
    spec.gates.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case 'A': case 'a': case '&': case '*':
            spec.gates.push_back(GateKind::And);
            break;
        case 'O': case 'o': case '|': case '+':
            spec.gates.push_back(GateKind::Or);
            break;
        default:
            throw std::invalid_argument(std::string("bad gate character '") + c +
                                        "' (expected A or O)");
        }
    }
    if (arrival.empty()) arrival.assign(spec.m, 0);
    spec.arrival = std::move(arrival);
    spec.validate();
    return spec;
}

bool AopSpec::is_alternating() const {
    for (std::size_t i = 1; i < gates.size(); ++i)
        if (gates[i] == gates[i - 1]) return false;
    return true;
}

bool AopSpec::uniform_arrival() const {
    for (int a : arrival)
        if (a != arrival.front()) return false;
    return true;
}

void AopSpec::validate() const {
    if (m < 1) throw std::invalid_argument("instance needs at least one input");
    if (m > 64)
        throw UnsupportedSizeError("instances with more than 64 inputs do not fit "
                                   "the subset-mask representation");
    if (static_cast<int>(gates.size()) != m - 1)
        throw std::invalid_argument("gate list must have m-1 entries");
    if (static_cast<int>(arrival.size()) != m)
        throw std::invalid_argument("arrival list must have m entries");
    for (int a : arrival)
        if (a < 0) throw std::invalid_argument("arrival times must be non-negative");
}

AopSpec dualize(const AopSpec& spec) {
    AopSpec out = spec;
    for (GateKind& k : out.gates) k = dual(k);
    return out;
}

GateKind input_kind(const AopSpec& spec, int i) {
    if (i < 0 || i >= spec.m - 1)
        throw std::logic_error("input_kind on the last input");
    return spec.gates[i];
}

Mask same_gate_set(const AopSpec& spec, Mask subset, GateKind k) {
    if (subset == 0) throw std::logic_error("same_gate_set on empty subset");
    int last = highest_input(subset);
    Mask out = bit(last);
    for (Mask rest = subset & ~bit(last); rest != 0; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        if (spec.gates[i] == k) out |= bit(i);
    }
    return out;
}

Mask dual_gate_set(const AopSpec& spec, Mask subset, GateKind k) {
    return subset & ~same_gate_set(spec, subset, k);
}

SegmentPartition segment_partition(const AopSpec& spec, Mask subset) {
    if (subset == 0) throw std::logic_error("segment_partition on empty subset");
    SegmentPartition part;
    int last = highest_input(subset);
    Mask run = 0;
    GateKind run_kind = GateKind::And;
    bool open = false;
    for (Mask rest = subset; rest != 0; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        if (i == last) {
            // The last input has no gate kind of its own and joins the
            // current run; a one-input subset forms its own run whose kind
            // tag is arbitrary.
            if (open) {
                run |= bit(i);
            } else {
                run = bit(i);
                run_kind = i < spec.m - 1 ? spec.gates[i] : GateKind::And;
                open = true;
            }
            break;
        }
        GateKind k = spec.gates[i];
        if (open && k != run_kind) {
            part.runs.push_back(run);
            part.kinds.push_back(run_kind);
            run = 0;
        }
        run |= bit(i);
        run_kind = k;
        open = true;
    }
    part.runs.push_back(run);
    part.kinds.push_back(run_kind);
    return part;
}

Mask special_sub_path(const AopSpec& spec, Mask subset, GateKind k, Mask part) {
    if (part == 0) throw std::logic_error("special_sub_path on empty part");
    if ((part & ~subset) != 0)
        throw std::logic_error("special_sub_path: part not within subset");
    Mask below = bit(highest_input(part)) - 1;
    return part | (dual_gate_set(spec, subset, k) & below);
}

int standard_delay(const AopSpec& spec, Mask subset) {
    if (subset == 0) throw std::logic_error("standard_delay on empty subset");
    std::vector<int> members;
    for (Mask rest = subset; rest != 0; rest &= rest - 1)
        members.push_back(std::countr_zero(rest));
    int d = spec.arrival[members.back()];
    for (int i = static_cast<int>(members.size()) - 2; i >= 0; --i)
        d = std::max(spec.arrival[members[i]], d) + 1;
    return d;
}

AopSpec induced_sub_path(const AopSpec& spec, Mask subset) {
    if (subset == 0) throw std::logic_error("induced_sub_path on empty subset");
    AopSpec sub;
    sub.m = subset_size(subset);
    int last = highest_input(subset);
    for (Mask rest = subset; rest != 0; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        if (i != last) sub.gates.push_back(spec.gates[i]);
        sub.arrival.push_back(spec.arrival[i]);
    }
    sub.validate();
    return sub;
}

} // namespace aop
