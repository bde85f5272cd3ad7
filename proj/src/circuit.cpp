#include "aop/circuit.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace aop {

namespace {

// Bit patterns of the first six inputs within one 64-entry word.
constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::size_t word_count(int num_vars) {
    return num_vars <= 6 ? 1 : std::size_t{1} << (num_vars - 6);
}

std::uint64_t input_word(int input, std::size_t word) {
    if (input < 6) return kLanePattern[input];
    return (word >> (input - 6)) & 1 ? ~std::uint64_t{0} : 0;
}

std::uint64_t used_bits(int num_vars) {
    return num_vars >= 6 ? ~std::uint64_t{0}
                         : (std::uint64_t{1} << (std::uint64_t{1} << num_vars)) - 1;
}

} // namespace

int Circuit::add_input(int idx) {
    nodes.push_back({Node::Op::Input, idx, -1});
    num_inputs = std::max(num_inputs, idx + 1);
    return static_cast<int>(nodes.size()) - 1;
}

int Circuit::add_gate(GateKind k, int l, int r) {
    nodes.push_back({k == GateKind::And ? Node::Op::And : Node::Op::Or, l, r});
    return static_cast<int>(nodes.size()) - 1;
}

int Circuit::size() const {
    int gates = 0;
    for (const Node& n : nodes)
        if (n.op != Node::Op::Input) ++gates;
    return gates;
}

CircuitMetrics metrics(const Circuit& c, const std::vector<int>& arrival) {
    if (c.out < 0 || c.out >= static_cast<int>(c.nodes.size()))
        throw std::logic_error("metrics on circuit without valid output");
    CircuitMetrics out;
    out.size = c.size();
    std::vector<int> delay(c.nodes.size(), 0);
    std::vector<int> depth(c.nodes.size(), 0);
    std::vector<int> fanout(c.nodes.size(), 0);
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        const Node& n = c.nodes[i];
        if (n.op == Node::Op::Input) {
            if (n.a < 0 || n.a >= static_cast<int>(arrival.size()))
                throw std::logic_error("metrics: input index out of range");
            delay[i] = arrival[n.a];
            depth[i] = 0;
        } else {
            if (n.a < 0 || n.b < 0 || n.a >= static_cast<int>(i) ||
                n.b >= static_cast<int>(i))
                throw std::logic_error("metrics: node list not topological");
            delay[i] = std::max(delay[n.a], delay[n.b]) + 1;
            depth[i] = std::max(depth[n.a], depth[n.b]) + 1;
            ++fanout[n.a];
            ++fanout[n.b];
        }
    }
    out.delay = delay[c.out];
    out.depth = depth[c.out];
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        int f = fanout[i];
        out.max_fanout = std::max(out.max_fanout, f);
        if (c.nodes[i].op == Node::Op::Input)
            out.max_input_fanout = std::max(out.max_input_fanout, f);
        else
            out.max_gate_fanout = std::max(out.max_gate_fanout, f);
    }
    return out;
}

Circuit standard_circuit(const AopSpec& spec, Mask subset) {
    if (subset == 0) throw std::logic_error("standard_circuit on empty subset");
    Circuit c;
    for (int i = 0; i < spec.m; ++i) c.add_input(i);
    std::vector<int> members;
    for (Mask rest = subset; rest != 0; rest &= rest - 1)
        members.push_back(std::countr_zero(rest));
    int acc = members.back();
    for (int i = static_cast<int>(members.size()) - 2; i >= 0; --i)
        acc = c.add_gate(spec.gates[members[i]], members[i], acc);
    c.out = acc;
    return c;
}

TruthTable truth_table(const Circuit& c, int num_vars) {
    if (num_vars > 20)
        throw UnsupportedSizeError("truth tables supported up to 20 variables");
    std::size_t words = word_count(num_vars);
    std::vector<std::uint64_t> value(c.nodes.size());
    TruthTable result(words);
    for (std::size_t w = 0; w < words; ++w) {
        for (std::size_t i = 0; i < c.nodes.size(); ++i) {
            const Node& n = c.nodes[i];
            if (n.op == Node::Op::Input)
                value[i] = input_word(n.a, w);
            else if (n.op == Node::Op::And)
                value[i] = value[n.a] & value[n.b];
            else
                value[i] = value[n.a] | value[n.b];
        }
        result[w] = value[c.out];
    }
    if (num_vars < 6) result[0] &= used_bits(num_vars);
    return result;
}

TruthTable sub_path_truth_table(const AopSpec& spec, Mask subset, int num_vars) {
    if (num_vars > 20)
        throw UnsupportedSizeError("truth tables supported up to 20 variables");
    if (subset == 0) throw std::logic_error("sub_path_truth_table on empty subset");
    std::size_t words = word_count(num_vars);
    std::vector<int> members;
    for (Mask rest = subset; rest != 0; rest &= rest - 1)
        members.push_back(std::countr_zero(rest));
    TruthTable result(words);
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t acc = input_word(members.back(), w);
        for (int i = static_cast<int>(members.size()) - 2; i >= 0; --i) {
            std::uint64_t v = input_word(members[i], w);
            acc = spec.gates[members[i]] == GateKind::And ? (v & acc) : (v | acc);
        }
        result[w] = acc;
    }
    if (num_vars < 6) result[0] &= used_bits(num_vars);
    return result;
}

bool evaluate(const Circuit& c, Mask assignment) {
    std::vector<char> value(c.nodes.size());
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        const Node& n = c.nodes[i];
        if (n.op == Node::Op::Input)
            value[i] = (assignment >> n.a) & 1;
        else if (n.op == Node::Op::And)
            value[i] = value[n.a] && value[n.b];
        else
            value[i] = value[n.a] || value[n.b];
    }
    return value[c.out];
}

bool equivalent(const Circuit& c1, const Circuit& c2, int num_vars,
                const EquivalenceOptions& opts) {
    if (num_vars <= opts.exhaustive_limit)
        return truth_table(c1, num_vars) == truth_table(c2, num_vars);
    std::mt19937_64 rng(opts.seed);
    Mask all = num_vars >= 64 ? ~Mask{0} : (Mask{1} << num_vars) - 1;
    for (int t = 0; t < opts.random_trials; ++t) {
        Mask assignment = rng() & all;
        if (evaluate(c1, assignment) != evaluate(c2, assignment)) return false;
    }
    return true;
}

std::vector<Mask> prime_implicants(const AopSpec& spec) {
    Mask ors = same_gate_set(spec, spec.full_mask(), GateKind::Or);
    std::vector<Mask> out;
    Mask ands_below = 0;
    for (int i = 0; i < spec.m; ++i) {
        if ((ors >> i) & 1) out.push_back(bit(i) | ands_below);
        if (i < spec.m - 1 && spec.gates[i] == GateKind::And) ands_below |= bit(i);
    }
    return out;
}

bool implicant_certificate(const Circuit& c, const AopSpec& spec) {
    for (Mask pi : prime_implicants(spec)) {
        if (!evaluate(c, pi)) return false;
        for (Mask rest = pi; rest != 0; rest &= rest - 1) {
            Mask literal = rest & (~rest + 1);
            if (evaluate(c, pi & ~literal)) return false;
        }
    }
    return true;
}

std::string dot_graph(const Circuit& c, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  rankdir=TB;\n";
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        const Node& n = c.nodes[i];
        if (n.op == Node::Op::Input) {
            os << "  n" << i << " [shape=box,label=\"t" << n.a << "\"];\n";
        } else {
            const char* color = n.op == Node::Op::And ? "indianred1" : "palegreen";
            const char* label = n.op == Node::Op::And ? "AND" : "OR";
            os << "  n" << i << " [shape=ellipse,style=filled,fillcolor=" << color
               << ",label=\"" << label << "\"];\n";
            os << "  n" << n.a << " -> n" << i << ";\n";
            os << "  n" << n.b << " -> n" << i << ";\n";
        }
    }
    os << "  out [shape=plaintext];\n";
    os << "  n" << c.out << " -> out;\n";
    os << "}\n";
    return os.str();
}

} // namespace aop
