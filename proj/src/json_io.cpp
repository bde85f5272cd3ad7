// aopsynth: JSON serialization.
#include "aop/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace aop {
namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

} // namespace

std::string circuit_to_json(const Circuit& c) {
    json nodes = json::array();
    for (const Node& node : c.nodes) {
        if (node.op == Node::Op::Input) {
            nodes.push_back({{"op", "in"}, {"idx", node.a}});
        } else {
            nodes.push_back({{"op", node.op == Node::Op::And ? "and" : "or"},
                             {"l", node.a},
                             {"r", node.b}});
        }
    }
    return json{{"nodes", nodes}, {"out", c.out}}.dump();
}

Circuit circuit_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("nodes") || !j.contains("out")) {
        throw std::invalid_argument("circuit JSON needs \"nodes\" and \"out\"");
    }
    Circuit c;
    int max_input = -1;
    for (const json& node : j.at("nodes")) {
        const std::string op = node.at("op").get<std::string>();
        if (op == "in") {
            const int idx = node.at("idx").get<int>();
            if (idx < 0) throw std::invalid_argument("negative input index");
            max_input = std::max(max_input, idx);
            c.add_input(idx);
        } else if (op == "and" || op == "or") {
            const int l = node.at("l").get<int>();
            const int r = node.at("r").get<int>();
            const int here = static_cast<int>(c.nodes.size());
            if (l < 0 || r < 0 || l >= here || r >= here) {
                throw std::invalid_argument("gate operand out of range");
            }
            c.add_gate(op == "and" ? GateKind::And : GateKind::Or, l, r);
        } else {
            throw std::invalid_argument("unknown node op \"" + op + "\"");
        }
    }
    c.num_inputs = max_input + 1;
    const int out = j.at("out").get<int>();
    if (out < 0 || out >= static_cast<int>(c.nodes.size())) {
        throw std::invalid_argument("output reference out of range");
    }
    c.out = out;
    return c;
}

std::string instance_to_json(const AopSpec& spec) {
    std::string gates;
    for (const GateKind k : spec.gates) gates.push_back(gate_char(k));
    return json{{"gates", gates}, {"arrival", spec.arrival}}.dump();
}

FractionalInstance instance_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("gates")) {
        throw std::invalid_argument("instance JSON needs \"gates\"");
    }
    const std::string gates = j.at("gates").get<std::string>();
    FractionalInstance inst;
    inst.m = static_cast<int>(gates.size()) + 1;
    {
        const AopSpec shell = AopSpec::from_gate_string(gates);
        inst.gates = shell.gates;
    }
    if (j.contains("arrival")) {
        for (const json& a : j.at("arrival")) {
            if (a.is_number_integer()) {
                inst.arrival.push_back(Rational(a.get<long long>()));
            } else if (a.is_string()) {
                inst.arrival.push_back(Rational::parse(a.get<std::string>()));
            } else if (a.is_number()) {
                throw std::invalid_argument(
                    "non-integral arrival times must be decimal strings "
                    "(e.g. \"1.3\"), not bare numbers, to stay exact");
            } else {
                throw std::invalid_argument("arrival entries must be numbers or strings");
            }
        }
    } else {
        inst.arrival.assign(static_cast<std::size_t>(inst.m), Rational(0));
    }
    inst.validate();
    return inst;
}

AopSpec to_integral(const FractionalInstance& inst) {
    if (!inst.integral()) {
        throw std::invalid_argument("instance has fractional arrival times");
    }
    AopSpec spec;
    spec.m = inst.m;
    spec.gates = inst.gates;
    for (const Rational& a : inst.arrival) {
        spec.arrival.push_back(static_cast<int>(a.floor_value()));
    }
    return spec;
}

std::string stats_to_json(const SolveStats& stats, bool with_timing) {
    json j{{"E", stats.entries}, {"P", stats.partitions}};
    if (with_timing) j["ms"] = stats.ms;
    return j.dump();
}

} // namespace aop
