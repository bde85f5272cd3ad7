// aopsynth: command-line front end.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aop/adders.hpp"
#include "aop/aop.hpp"
#include "aop/circuit.hpp"
#include "aop/errors.hpp"
#include "aop/fractional.hpp"
#include "aop/json_io.hpp"
#include "aop/normalization.hpp"
#include "aop/oracle.hpp"
#include "aop/rational.hpp"
#include "aop/solver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupportedSize = 3;
constexpr int kExitBudget = 4;

struct InstanceArgs {
    std::string gates;
    std::vector<std::string> arrival;
    std::string instance_file;
    int depth_m = 0;
    bool dual = false;
};

void add_instance_flags(CLI::App* cmd, InstanceArgs& args) {
    cmd->add_option("--gates", args.gates,
                    "Gate string, one of A/O per position (length m-1)");
    cmd->add_option("--arrival", args.arrival,
                    "Arrival times, integers or decimals like 1.3")
        ->delimiter(',');
    cmd->add_option("--instance", args.instance_file,
                    "Instance JSON file ('-' for stdin)");
    cmd->add_option("--depth", args.depth_m,
                    "Alternating instance with this many inputs, zero arrivals");
    cmd->add_flag("--dual", args.dual, "Start the alternating instance with OR");
}

std::string read_stream_or_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

aop::FractionalInstance make_instance(const InstanceArgs& args) {
    const int modes = (args.depth_m > 0 ? 1 : 0) +
                      (!args.instance_file.empty() ? 1 : 0) +
                      (!args.gates.empty() || !args.arrival.empty() ? 1 : 0);
    if (modes != 1) {
        throw std::invalid_argument(
            "specify exactly one of --depth, --instance, or --gates/--arrival");
    }
    aop::FractionalInstance inst;
    if (args.depth_m > 0) {
        const aop::AopSpec spec = aop::AopSpec::alternating(
            args.depth_m, args.dual ? aop::GateKind::Or : aop::GateKind::And);
        inst.m = spec.m;
        inst.gates = spec.gates;
        inst.arrival.assign(static_cast<std::size_t>(spec.m), aop::Rational(0));
    } else if (!args.instance_file.empty()) {
        inst = aop::instance_from_json(read_stream_or_file(args.instance_file));
    } else {
        const aop::AopSpec spec = aop::AopSpec::from_gate_string(args.gates);
        inst.m = spec.m;
        inst.gates = spec.gates;
        if (args.arrival.empty()) {
            inst.arrival.assign(static_cast<std::size_t>(spec.m), aop::Rational(0));
        } else {
            for (const std::string& a : args.arrival) {
                inst.arrival.push_back(aop::Rational::parse(a));
            }
        }
    }
    inst.validate();
    return inst;
}

json stats_json(const aop::SolveStats& stats, bool timing) {
    json j{{"E", stats.entries}, {"P", stats.partitions}};
    if (timing) j["ms"] = stats.ms;
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

struct SolveArgs {
    InstanceArgs inst;
    bool size_opt = false;
    int scenario = 5;
    std::optional<int> cap;
    bool emit_circuit = false;
    std::string dot_file;
    bool no_timing = false;
    std::string fractional_mode = "binary";
};

int cmd_solve(const SolveArgs& args) {
    const aop::FractionalInstance inst = make_instance(args.inst);
    aop::SolveOptions opts =
        aop::SolveOptions::scenario(args.scenario, args.size_opt);
    json out;
    std::optional<aop::Circuit> circuit;
    if (inst.integral()) {
        opts.delay_cap = args.cap;
        aop::Solver solver(aop::to_integral(inst), opts);
        const aop::OptResult r = solver.solve();
        out["delay"] = r.delay ? json(*r.delay) : json(nullptr);
        if (!r.delay) out["lower_bound"] = r.lower_bound;
        if (r.size) out["size"] = *r.size;
        out["stats"] = stats_json(r.stats, !args.no_timing);
        circuit = r.circuit;
    } else {
        if (args.cap) {
            throw std::invalid_argument(
                "--cap is not supported with fractional arrival times");
        }
        const aop::FractionalResult r =
            args.fractional_mode == "linear"
                ? aop::solve_fractional_linear(inst, opts)
                : aop::solve_fractional_binary(inst, opts);
        out["delay"] = r.delay.str();
        out["alpha"] = r.alpha.str();
        out["inner_solves"] = r.inner_solves;
        if (r.size) out["size"] = *r.size;
        out["stats"] = stats_json(r.stats, !args.no_timing);
        circuit = r.circuit;
    }
    if (args.emit_circuit && circuit) {
        out["circuit"] = json::parse(aop::circuit_to_json(*circuit));
    }
    if (!args.dot_file.empty() && circuit) {
        write_file(args.dot_file, aop::dot_graph(*circuit, "aop"));
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

struct VerifyArgs {
    InstanceArgs inst;
    std::string circuit_file;
    std::string delay;
    std::uint64_t seed = 0x5eedf00dULL;
    std::uint64_t trials = 4096;
};

int cmd_verify(const VerifyArgs& args) {
    const aop::FractionalInstance inst = make_instance(args.inst);
    const aop::Circuit circuit =
        aop::circuit_from_json(read_stream_or_file(args.circuit_file));
    if (circuit.num_inputs > inst.m) {
        throw std::invalid_argument("circuit reads more inputs than the instance has");
    }

    aop::AopSpec shell;
    shell.m = inst.m;
    shell.gates = inst.gates;
    shell.arrival.assign(static_cast<std::size_t>(inst.m), 0);
    const aop::Circuit reference = aop::standard_circuit(shell);

    std::optional<aop::Mask> counterexample;
    if (inst.m <= 20) {
        const aop::TruthTable got = aop::truth_table(circuit, inst.m);
        const aop::TruthTable want = aop::truth_table(reference, inst.m);
        if (got != want) {
            const aop::Mask total = inst.m >= 6
                                        ? (aop::Mask{1} << inst.m)
                                        : aop::Mask{1} << inst.m;
            for (aop::Mask a = 0; a < total; ++a) {
                if (((got[a >> 6] >> (a & 63)) & 1) !=
                    ((want[a >> 6] >> (a & 63)) & 1)) {
                    counterexample = a;
                    break;
                }
            }
        }
    } else {
        std::mt19937_64 rng(args.seed);
        const aop::Mask mask = shell.full_mask();
        for (std::uint64_t t = 0; t < args.trials; ++t) {
            const aop::Mask a = rng() & mask;
            if (aop::evaluate(circuit, a) != aop::evaluate(reference, a)) {
                counterexample = a;
                break;
            }
        }
    }

    json out;
    bool ok = !counterexample.has_value();
    out["equivalent"] = ok;
    if (counterexample) {
        std::string bits;
        for (int i = 0; i < inst.m; ++i) {
            bits.push_back((*counterexample & aop::bit(i)) ? '1' : '0');
        }
        out["counterexample"] = bits; // input i at string position i
    }
    const aop::Rational delay = aop::rational_delay(circuit, inst.arrival);
    out["delay"] = delay.str();
    if (!args.delay.empty()) {
        const bool delay_ok = delay == aop::Rational::parse(args.delay);
        out["delay_matches"] = delay_ok;
        ok = ok && delay_ok;
    }
    std::cout << out.dump() << "\n";
    return ok ? kExitOk : kExitVerifyFailure;
}

struct AdderArgs {
    int bits = 0;
    int scenario = 5;
    bool no_timing = false;
    bool verify = false;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0x5eedf00dULL;
    std::string json_out;
    std::string dot_dir;
};

int cmd_adder(const AdderArgs& args) {
    const aop::AdderPlan plan =
        aop::build_adder(args.bits, aop::SolveOptions::scenario(args.scenario));
    json out{{"bits", plan.n},
             {"depth", plan.depth},
             {"depths", plan.depths},
             {"stats", stats_json(plan.stats, !args.no_timing)}};

    std::optional<std::pair<std::uint64_t, std::uint64_t>> failure;
    if (plan.n <= 10 || args.verify) {
        failure = aop::verify_adder(plan, args.trials, args.seed);
        out["verified"] = !failure.has_value();
        if (failure) {
            out["failing_pair"] = json::array({failure->first, failure->second});
        }
    }

    if (!args.json_out.empty()) {
        json bundle{{"bits", plan.n}, {"depth", plan.depth}};
        json carries = json::array();
        for (const aop::Circuit& c : plan.carries) {
            carries.push_back(json::parse(aop::circuit_to_json(c)));
        }
        bundle["carries"] = carries;
        write_file(args.json_out, bundle.dump());
    }
    if (!args.dot_dir.empty()) {
        std::filesystem::create_directories(args.dot_dir);
        for (std::size_t k = 0; k < plan.carries.size(); ++k) {
            write_file(args.dot_dir + "/carry_" + std::to_string(k + 1) + ".dot",
                       aop::dot_graph(plan.carries[k],
                                      "carry_" + std::to_string(k + 1)));
        }
    }
    std::cout << out.dump() << "\n";
    return failure ? kExitVerifyFailure : kExitOk;
}

struct TableArgs {
    int max_m = 33;
    int scenario = 5;
    bool as_json = false;
    bool long_form = false;
};

const char* label_name(aop::RowLabel label) {
    switch (label) {
        case aop::RowLabel::Exact: return "exact";
        case aop::RowLabel::Bounded: return "bounded";
        case aop::RowLabel::Reference: return "reference";
    }
    return "?";
}

int cmd_table(const TableArgs& args) {
    std::vector<aop::DepthRangeRow> rows =
        aop::depth_table(args.max_m, aop::SolveOptions::scenario(args.scenario));
    if (!args.long_form) {
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [](const aop::DepthRangeRow& row) {
                                      return row.label != aop::RowLabel::Exact;
                                  }),
                   rows.end());
    }
    if (args.as_json) {
        json out = json::array();
        for (const auto& row : rows) {
            json r{{"depth", row.depth},
                   {"m_low", row.m_low},
                   {"label", label_name(row.label)}};
            r["m_high"] = row.m_high < 0 ? json(nullptr) : json(row.m_high);
            out.push_back(r);
        }
        std::cout << json{{"rows", out}}.dump() << "\n";
        return kExitOk;
    }
    std::cout << "depth  inputs           source\n";
    for (const auto& row : rows) {
        std::ostringstream range;
        range << row.m_low << "..";
        if (row.m_high < 0) {
            range << "...";
        } else {
            range << row.m_high;
        }
        std::ostringstream line;
        line.width(5);
        line << row.depth;
        std::string r = range.str();
        r.resize(std::max<std::size_t>(r.size(), 16), ' ');
        std::cout << line.str() << "  " << r << " " << label_name(row.label)
                  << "\n";
    }
    return kExitOk;
}

struct BenchArgs {
    std::string m_range = "4:12";
    std::vector<int> scenarios = {1, 2, 3, 4, 5};
    int jobs = 1;
    std::uint64_t seed = 0;
};

int cmd_bench(const BenchArgs& args) {
    int lo = 0;
    int hi = 0;
    {
        const auto colon = args.m_range.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("--m-range expects LOW:HIGH");
        }
        lo = std::stoi(args.m_range.substr(0, colon));
        hi = std::stoi(args.m_range.substr(colon + 1));
        if (lo < 1 || hi < lo) throw std::invalid_argument("bad --m-range");
    }
    for (const int s : args.scenarios) {
        if (s < 1 || s > 5) throw std::invalid_argument("scenario must be 1..5");
    }

    struct Row {
        int m;
        int scenario;
        aop::SolveStats stats;
    };
    std::vector<Row> rows;
    for (int m = lo; m <= hi; ++m) {
        for (const int s : args.scenarios) rows.push_back({m, s, {}});
    }

    const auto run = [](Row& row) {
        aop::Solver solver(aop::AopSpec::alternating(row.m),
                           aop::SolveOptions::scenario(row.scenario));
        row.stats = solver.solve().stats;
    };
    if (args.jobs > 1) {
        std::vector<std::future<void>> pending;
        std::size_t next = 0;
        while (next < rows.size() || !pending.empty()) {
            while (next < rows.size() &&
                   pending.size() < static_cast<std::size_t>(args.jobs)) {
                pending.push_back(
                    std::async(std::launch::async, run, std::ref(rows[next])));
                ++next;
            }
            pending.front().get();
            pending.erase(pending.begin());
        }
    } else {
        for (Row& row : rows) run(row);
    }

    const auto log2_cell = [](std::uint64_t v) {
        if (v == 0) return std::string("-");
        return std::to_string(
            std::lround(std::log2(static_cast<double>(v))));
    };
    std::cout << "  m  scenario  log2E  log2P        ms\n";
    for (const Row& row : rows) {
        std::ostringstream line;
        line.width(3);
        line << row.m;
        line << "  ";
        line.width(8);
        line << row.scenario;
        line << "  ";
        line.width(5);
        line << log2_cell(row.stats.entries);
        line << "  ";
        line.width(5);
        line << log2_cell(row.stats.partitions);
        line << "  ";
        line.width(8);
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(2);
        ms << row.stats.ms;
        line << ms.str();
        std::cout << line.str() << "\n";
    }
    return kExitOk;
}

int dispatch(CLI::App& app, const SolveArgs& solve_args,
             const VerifyArgs& verify_args, const AdderArgs& adder_args,
             const TableArgs& table_args, const BenchArgs& bench_args,
             int count_reps, int count_q_n) {
    if (count_reps >= 0) {
        if (count_reps < 1 || count_reps > 90) {
            throw std::invalid_argument("--count-representatives expects 1..90");
        }
        std::cout << aop::fib(count_reps + 1) << "\n";
        return kExitOk;
    }
    if (count_q_n >= 0) {
        std::cout << aop::count_q(count_q_n) << "\n";
        return kExitOk;
    }
    if (app.got_subcommand("solve")) return cmd_solve(solve_args);
    if (app.got_subcommand("verify")) return cmd_verify(verify_args);
    if (app.got_subcommand("adder")) return cmd_adder(adder_args);
    if (app.got_subcommand("table")) return cmd_table(table_args);
    if (app.got_subcommand("bench")) return cmd_bench(bench_args);
    std::cout << app.help();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact delay-optimum synthesis of generalized And-Or paths"};
    app.require_subcommand(0, 1);

    int count_reps = -1;
    app.add_option("--count-representatives", count_reps,
                   "Print the number of canonical sub-path keys for m inputs");
    int count_q_n = -1;
    app.add_option("--count-q", count_q_n,
                   "Print the extension-string count for table-size analysis");

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
    add_instance_flags(solve, solve_args.inst);
    solve->add_flag("--size-opt", solve_args.size_opt,
                    "Minimize size among strongly delay-optimum circuits");
    solve->add_option("--scenario", solve_args.scenario, "Speedup bundle 1..5")
        ->check(CLI::Range(1, 5));
    int cap_value = -1;
    CLI::Option* cap_opt =
        solve->add_option("--cap", cap_value, "External delay budget");
    solve->add_flag("--emit-circuit", solve_args.emit_circuit,
                    "Include circuit JSON in the output");
    solve->add_option("--emit-dot", solve_args.dot_file,
                      "Write the circuit as Graphviz DOT to this file");
    solve->add_flag("--no-timing", solve_args.no_timing,
                    "Omit wall-clock fields for reproducible output");
    solve->add_option("--fractional", solve_args.fractional_mode,
                      "Fractional strategy: binary or linear")
        ->check(CLI::IsMember({"binary", "linear"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Check a circuit");
    add_instance_flags(verify, verify_args.inst);
    verify->add_option("--circuit", verify_args.circuit_file,
                       "Circuit JSON file ('-' for stdin)")
        ->required();
    verify->add_option("--delay", verify_args.delay,
                       "Expected delay (integer or decimal)");
    verify->add_option("--seed", verify_args.seed, "Random seed");
    verify->add_option("--trials", verify_args.trials,
                       "Random trials when beyond exhaustive reach");

    AdderArgs adder_args;
    CLI::App* adder = app.add_subcommand("adder", "Build adder carry circuits");
    adder->add_option("--bits", adder_args.bits, "Adder width")->required();
    adder->add_option("--scenario", adder_args.scenario, "Speedup bundle 1..5")
        ->check(CLI::Range(1, 5));
    adder->add_flag("--no-timing", adder_args.no_timing,
                    "Omit wall-clock fields for reproducible output");
    adder->add_flag("--verify", adder_args.verify,
                    "Force verification (random beyond 10 bits)");
    adder->add_option("--trials", adder_args.trials, "Random trials");
    adder->add_option("--seed", adder_args.seed, "Random seed");
    adder->add_option("--json-out", adder_args.json_out,
                      "Write all carry circuits to this JSON file");
    adder->add_option("--dot-dir", adder_args.dot_dir,
                      "Write one DOT file per carry into this directory");

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "Optimum depth ranges");
    table->add_option("--max-m", table_args.max_m, "Solve exactly up to here");
    table->add_option("--scenario", table_args.scenario, "Speedup bundle 1..5")
        ->check(CLI::Range(1, 5));
    table->add_flag("--json", table_args.as_json, "JSON output");
    table->add_flag("--long", table_args.long_form,
                    "Include published and bounded rows beyond --max-m");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Scenario comparison rows");
    bench->add_option("--m-range", bench_args.m_range, "Input range LOW:HIGH");
    bench->add_option("--scenarios", bench_args.scenarios, "Scenario list")
        ->delimiter(',');
    bench->add_option("--jobs", bench_args.jobs, "Parallel solves");
    bench->add_option("--seed", bench_args.seed, "Random seed (reserved)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (cap_opt->count() > 0) solve_args.cap = cap_value;
        return dispatch(app, solve_args, verify_args, adder_args, table_args,
                        bench_args, count_reps, count_q_n);
    } catch (const aop::UnsupportedSizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedSize;
    } catch (const aop::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
