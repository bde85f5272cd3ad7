// aopsynth: monotone {And2, Or2} circuits over shared inputs, their
// metrics, truth tables and equivalence checks.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aop/aop.hpp"

namespace aop {

struct Node {
    enum class Op : std::uint8_t { Input, And, Or };
    Op op = Op::Input;
    int a = -1; // input index for Op::Input, left operand otherwise
    int b = -1; // right operand for gates
};

/// A circuit is a topologically ordered node list with one designated
/// output.  The engine emits tree-shaped gate structures over shared input
/// nodes: every gate drives at most one other gate, so the gate count equals
/// the formula size.
struct Circuit {
    std::vector<Node> nodes;
    int out = -1;
    int num_inputs = 0;

    int add_input(int idx);
    int add_gate(GateKind k, int l, int r);
    int size() const; // gate count
};

struct CircuitMetrics {
    int delay = 0;       // max over paths of arrival + path length
    int depth = 0;       // delay under all-zero arrival times
    int size = 0;        // gate count
    int max_fanout = 0;  // over all vertices
    int max_gate_fanout = 0;
    int max_input_fanout = 0;
};

CircuitMetrics metrics(const Circuit& c, const std::vector<int>& arrival);

/// Right-leaning chain circuit of the sub-path induced by `subset`;
/// input nodes are created for all m inputs so circuits over the same
/// instance are directly comparable.
Circuit standard_circuit(const AopSpec& spec, Mask subset);

inline Circuit standard_circuit(const AopSpec& spec) {
    return standard_circuit(spec, spec.full_mask());
}

/// Truth table as packed 64-bit words, input i toggling with period 2^i.
/// Requires num_vars <= 20.
using TruthTable = std::vector<std::uint64_t>;

TruthTable truth_table(const Circuit& c, int num_vars);

/// Truth table of the function computed by the sub-path induced by `subset`,
/// expressed over all num_vars variables of the host instance.
TruthTable sub_path_truth_table(const AopSpec& spec, Mask subset, int num_vars);

inline TruthTable aop_truth_table(const AopSpec& spec) {
    return sub_path_truth_table(spec, spec.full_mask(), spec.m);
}

/// Evaluates the circuit on a single assignment (bit i of `assignment` is
/// the value of input i).
bool evaluate(const Circuit& c, Mask assignment);

struct EquivalenceOptions {
    int exhaustive_limit = 20;
    int random_trials = 4096;
    std::uint64_t seed = 0x5eedf00dULL;
};

/// Exhaustive comparison for num_vars <= exhaustive_limit, seeded random
/// sampling beyond that.
bool equivalent(const Circuit& c1, const Circuit& c2, int num_vars,
                const EquivalenceOptions& opts = {});

/// Prime implicants of the full instance function, one per Or-kind
/// same-gate input t_i: the input itself together with every And-kind
/// input before it.  The result is an antichain listed in ascending order
/// of i.
std::vector<Mask> prime_implicants(const AopSpec& spec);

/// Checks the prime implicant certificate on a candidate circuit: every
/// prime implicant alone evaluates to 1 and dropping any single literal
/// from it evaluates to 0.  Suitable for instances too large for
/// exhaustive equivalence checking.
bool implicant_certificate(const Circuit& c, const AopSpec& spec);

/// Graphviz rendering; inputs as boxes, And gates red, Or gates green.
std::string dot_graph(const Circuit& c, const std::string& name = "circuit");

} // namespace aop
