// Copyright 2026 The cqec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cqec/analysis.hpp"
#include "cqec/graph.hpp"
#include "cqec/measurement.hpp"
#include "cqec/pauli.hpp"
#include "cqec/statevector.hpp"
#include "cqec/synthesis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
    uint64_t seed = 0;
    std::vector<std::string> forced;  // "q=s" pairs
    std::string format = "text";
    std::string out_path;
    size_t max_n = cqec::kMaxOracleQubits;
    bool verbose = false;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw cqec::ParseError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const CommonOpts &opts, const std::string &text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) {
        throw cqec::ParseError("cannot open output file: " + opts.out_path);
    }
    out << text;
}

std::map<size_t, int> parse_forced(const std::vector<std::string> &pairs) {
    std::map<size_t, int> out;
    for (const auto &p : pairs) {
        auto eq = p.find('=');
        size_t q = 0;
        int s = -1;
        try {
            if (eq == std::string::npos) {
                throw std::invalid_argument("");
            }
            q = std::stoul(p.substr(0, eq));
            s = std::stoi(p.substr(eq + 1));
        } catch (const std::exception &) {
            throw cqec::ParseError("--force-outcome expects q=s, got '" + p + "'");
        }
        if (s != 0 && s != 1) {
            throw cqec::ParseError("forced outcome must be 0 or 1 in '" + p + "'");
        }
        out[q] = s;
    }
    return out;
}

cqec::Graph load_graph(const std::string &graph_path, const std::string &edges_path,
                       size_t edges_n) {
    if (!graph_path.empty()) {
        return cqec::Graph::from_json(read_file(graph_path));
    }
    if (edges_path.empty()) {
        throw cqec::ParseError("either --graph or --edges is required");
    }
    if (edges_n == 0) {
        throw cqec::ParseError("--n is required with --edges");
    }
    return cqec::Graph::from_edge_list(read_file(edges_path), edges_n);
}

std::string set_as_list(const cqec::GeneratorSet &s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += s[i].str();
    }
    return out + "]";
}

std::string ops_as_list(const std::vector<cqec::PauliOperator> &ops) {
    std::string out = "[";
    for (size_t i = 0; i < ops.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += ops[i].str();
    }
    return out + "]";
}

nlohmann::json set_as_json(const cqec::GeneratorSet &s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &g : s) {
        arr.push_back(g.str());
    }
    return arr;
}

int cmd_cluster_stabs(const CommonOpts &opts, const std::string &graph_path,
                      const std::string &edges_path, size_t edges_n) {
    cqec::Graph g = load_graph(graph_path, edges_path, edges_n);
    cqec::GeneratorSet stabs = cqec::cluster_stabilizers(g);
    if (opts.format == "json") {
        nlohmann::json j;
        j["n"] = g.num_vertices();
        j["stabilizers"] = set_as_json(stabs);
        write_output(opts, j.dump(2) + "\n");
    } else {
        write_output(opts, stabs.str());
    }
    return kExitOk;
}

int cmd_measure(const CommonOpts &opts, const std::string &stabs_path,
                const std::string &graph_path, const std::string &edges_path, size_t edges_n,
                const std::string &script_path, bool discard) {
    cqec::GeneratorSet set = stabs_path.empty()
                                 ? cqec::cluster_stabilizers(load_graph(graph_path, edges_path, edges_n))
                                 : cqec::GeneratorSet::parse(read_file(stabs_path));
    auto specs = cqec::parse_measurement_script(read_file(script_path));
    auto forced = parse_forced(opts.forced);
    for (auto &spec : specs) {
        if (auto it = forced.find(spec.qubit); it != forced.end()) {
            spec.forced_outcome = it->second;
        }
    }
    cqec::BitSource bits(opts.seed);

    std::ostringstream trace;
    nlohmann::json steps = nlohmann::json::array();
    std::vector<cqec::MeasurementRecord> records;
    // Distinct-qubit precondition of evolve_sequence, kept for the
    // step-by-step trace as well.
    for (size_t i = 0; i < specs.size(); ++i) {
        for (size_t j = i + 1; j < specs.size(); ++j) {
            if (specs[i].qubit == specs[j].qubit) {
                throw cqec::ValidationError("measurement script repeats qubit " +
                                            std::to_string(specs[i].qubit));
            }
        }
    }
    // label[q-1] = current label of original qubit q (0 once discarded).
    std::vector<size_t> label(set.num_qubits());
    for (size_t q = 0; q < set.num_qubits(); ++q) {
        label[q] = q + 1;
    }
    for (const auto &spec0 : specs) {
        cqec::MeasurementSpec spec = spec0;
        if (discard) {
            if (spec0.qubit < 1 || spec0.qubit > label.size() || label[spec0.qubit - 1] == 0) {
                throw cqec::ValidationError("qubit " + std::to_string(spec0.qubit) +
                                            " was already discarded or is out of range");
            }
            spec.qubit = label[spec0.qubit - 1];
        }

        trace << "Stabilizers: " << set_as_list(set) << "\n";
        trace << "Measurement basis: " << spec.basis << ", qubit: " << spec0.qubit << "\n";
        auto anti_idx = cqec::anticommuting_indices(set, spec);
        std::vector<cqec::PauliOperator> anti, comm;
        for (size_t i = 0; i < set.size(); ++i) {
            bool is_anti =
                std::find(anti_idx.begin(), anti_idx.end(), i) != anti_idx.end();
            (is_anti ? anti : comm).push_back(set[i]);
        }
        trace << "Anti-commute Stabilizers: " << ops_as_list(anti) << "\n";
        trace << "Commutating Stabilizers: " << ops_as_list(comm) << "\n";
        std::vector<cqec::PauliOperator> products;
        for (size_t i = 0; i < anti.size(); ++i) {
            for (size_t j = i + 1; j < anti.size(); ++j) {
                products.push_back(anti[i] * anti[j]);
            }
        }
        trace << "Multiplication of Anti Commute Stabilizers: " << ops_as_list(products)
              << "\n";
        std::vector<cqec::PauliOperator> generated;
        for (const auto &p : products) {
            generated.push_back(p);
            if (cqec::symplectic_rank(generated) != generated.size()) {
                generated.pop_back();
            }
        }
        trace << "Generated set from non-commute stabilizers: " << ops_as_list(generated)
              << "\n";

        auto [next, rec] = cqec::measure(set, spec, bits);
        set = std::move(next);
        records.push_back({spec0.qubit, rec.basis, rec.outcome, rec.deterministic});
        if (discard) {
            auto res = cqec::discard_qubit(set, spec.qubit);
            set = std::move(res.set);
            // res.new_label maps current labels; compose with `label`.
            for (size_t q = 0; q < label.size(); ++q) {
                if (label[q] != 0) {
                    label[q] = res.new_label[label[q] - 1];
                }
            }
        }
        trace << "Final set: " << set_as_list(set) << "\n\n";

        nlohmann::json step = nlohmann::json::object();
        step["qubit"] = spec0.qubit;
        step["basis"] = std::string(1, spec.basis);
        step["s"] = records.back().outcome;
        step["deterministic"] = records.back().deterministic;
        step["final"] = set_as_json(set);
        steps.push_back(std::move(step));
    }

    if (opts.format == "json") {
        nlohmann::json j;
        j["steps"] = steps;
        j["final"] = set_as_json(set);
        write_output(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << trace.str();
        out << "Records:\n";
        for (const auto &r : records) {
            out << r.to_json() << "\n";
        }
        write_output(opts, out.str());
    }
    return kExitOk;
}

int cmd_synthesize(const CommonOpts &opts, const std::string &stabs_path,
                   const std::string &qasm_path) {
    cqec::GeneratorSet target = cqec::GeneratorSet::parse(read_file(stabs_path));
    auto forced_map = parse_forced(opts.forced);
    std::optional<int> forced;
    if (auto it = forced_map.find(target.num_qubits() + 1); it != forced_map.end()) {
        forced = it->second;
    } else if (forced_map.size() == 1) {
        forced = forced_map.begin()->second;
    }
    cqec::BitSource bits(opts.seed);
    cqec::SynthesisResult result = cqec::synthesize(target, forced, bits);
    if (!qasm_path.empty()) {
        std::ofstream qasm(qasm_path);
        if (!qasm) {
            throw cqec::ParseError("cannot open output file: " + qasm_path);
        }
        qasm << cqec::to_openqasm(result.cluster.graph, result.cluster.message_index);
    }
    if (opts.format == "json") {
        write_output(opts, result.to_json() + "\n");
    } else {
        std::ostringstream out;
        out << "target:\n" << result.target.str();
        out << "check adjacency A (rowspace " << (result.row_space_equal ? "equals" : "differs from")
            << " rowspace(Hz)):\n";
        for (size_t i = 1; i <= result.check_adjacency.num_vertices(); ++i) {
            for (size_t j = 1; j <= result.check_adjacency.num_vertices(); ++j) {
                out << (i != j && result.check_adjacency.edge(i, j) ? 1 : 0)
                    << (j < result.check_adjacency.num_vertices() ? " " : "\n");
            }
        }
        out << "cluster: " << result.cluster.graph.num_vertices() << " qubits, message qubit "
            << result.cluster.message_index << "\n";
        for (const auto &r : result.records) {
            out << "measurement: " << r.to_json() << "\n";
        }
        out << "achieved:\n" << result.achieved.str();
        out << "correction: " << result.correction.str() << "\n";
        out << "verified: " << (result.verified ? "true" : "false") << "\n";
        write_output(opts, out.str());
    }
    return result.verified ? kExitOk : kExitVerificationFailure;
}

int cmd_analyze(const CommonOpts &opts, const std::string &stabs_path, size_t explicit_n) {
    cqec::GeneratorSet set = cqec::GeneratorSet::parse(read_file(stabs_path));
    if (set.empty() && explicit_n > 0) {
        set = cqec::GeneratorSet(explicit_n);  // trivial [[n,n]] presentation
    }
    cqec::AnalysisResult result = cqec::analyze_code(set);
    if (opts.format == "json") {
        write_output(opts, result.to_json() + "\n");
    } else {
        write_output(opts, result.to_text());
    }
    return kExitOk;
}

int cmd_export_circuit(const CommonOpts &opts, const std::string &graph_path,
                       const std::string &edges_path, size_t edges_n, size_t message) {
    cqec::Graph g = load_graph(graph_path, edges_path, edges_n);
    write_output(opts, cqec::to_openqasm(g, message));
    return kExitOk;
}

int cmd_verify(const CommonOpts &opts, const std::string &stabs_path) {
    cqec::GeneratorSet target = cqec::GeneratorSet::parse(read_file(stabs_path));
    auto forced_map = parse_forced(opts.forced);
    std::ostringstream out;
    bool all_ok = true;

    for (int s = 0; s <= 1; ++s) {
        std::optional<int> forced = s;
        if (auto it = forced_map.find(target.num_qubits() + 1); it != forced_map.end() &&
            it->second != s) {
            continue;
        }
        cqec::BitSource bits(opts.seed);
        cqec::SynthesisResult result = cqec::synthesize(target, forced, bits);
        if (opts.verbose) {
            std::cerr << result.to_json() << "\n";
        }
        bool ok = result.verified;
        out << "synthesis (s=" << s << "): " << (ok ? "pass" : "FAIL")
            << (result.correction.is_identity() ? "" : " correction " + result.correction.str())
            << "\n";
        all_ok = all_ok && ok;

        size_t total = result.cluster.graph.num_vertices();
        if (total <= opts.max_n) {
            // Oracle cross-check: prepare the cluster, replay the recorded
            // outcome, confirm the post-measurement state is stabilized by
            // the achieved generators (re-embedded on the full register).
            cqec::StateVector sv = cqec::prepare_cluster(result.cluster.graph);
            auto proj = cqec::measure_pauli(sv, 'X', result.cluster.message_index,
                                            result.records.at(0).outcome);
            bool oracle_ok = true;
            cqec::StateVector reduced =
                cqec::factor_out_x_eigenstate(proj.state, result.cluster.message_index,
                                              result.records.at(0).outcome);
            for (const auto &g : result.achieved) {
                if (!cqec::is_stabilized(reduced, g)) {
                    oracle_ok = false;
                }
            }
            out << "oracle (s=" << s << "): " << (oracle_ok ? "pass" : "FAIL") << "\n";
            all_ok = all_ok && oracle_ok;
        } else {
            out << "oracle (s=" << s << "): skipped (" << total << " > --max-n "
                << opts.max_n << ")\n";
        }
    }

    cqec::AnalysisResult analysis = cqec::analyze_code(target);
    out << "analysis: [[" << analysis.params.n << "," << analysis.params.k << ","
        << analysis.params.d << "]]"
        << (analysis.params.d == analysis.params.d_columns ? "" : " (column method d differs)")
        << "\n";
    out << (all_ok ? "VERIFY PASS\n" : "VERIFY FAIL\n");
    write_output(opts, out.str());
    return all_ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"cluster-state stabilizer toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--seed", opts.seed, "random seed (fully determines sampled outcomes)");
    app.add_option("--force-outcome", opts.forced, "force outcome q=s for qubit q");
    app.add_option("--format", opts.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", opts.out_path, "write output to a file instead of stdout");
    app.add_option("--max-n", opts.max_n, "statevector oracle qubit cap");
    app.add_flag("-v,--verbose", opts.verbose, "print extra diagnostics to stderr");

    std::string graph_path, edges_path, stabs_path, script_path, qasm_path;
    size_t edges_n = 0, message = 0;
    bool discard = false;

    auto *cs = app.add_subcommand("cluster-stabs", "print stabilizer generators of a cluster")->fallthrough();
    cs->add_option("--graph", graph_path, "adjacency JSON file");
    cs->add_option("--edges", edges_path, "edge list file (one 'i j' per line)");
    cs->add_option("--n", edges_n, "vertex count for --edges");

    auto *me = app.add_subcommand("measure", "evolve stabilizers under measurements")->fallthrough();
    me->add_option("--stabs", stabs_path, "stabilizer file");
    me->add_option("--graph", graph_path, "adjacency JSON file");
    me->add_option("--edges", edges_path, "edge list file");
    me->add_option("--n", edges_n, "vertex count for --edges");
    me->add_option("--script", script_path, "measurement script: '<qubit> <X|Y|Z> [<0|1>]' per line")
        ->required();
    me->add_flag("--discard", discard, "discard each qubit after measuring it");

    auto *sy = app.add_subcommand("synthesize", "build a cluster realizing an [[n,1]] code")->fallthrough();
    sy->add_option("--stabs", stabs_path, "stabilizer file with the n-1 target generators")
        ->required();
    sy->add_option("--export-qasm", qasm_path, "also write the cluster circuit as OpenQASM");

    auto *an = app.add_subcommand("analyze", "distances, Hamming bound, correctability")->fallthrough();
    an->add_option("--stabs", stabs_path, "stabilizer file")->required();
    an->add_option("--n", edges_n, "qubit count when the stabilizer file is empty");

    auto *ex = app.add_subcommand("export-circuit", "emit the cluster circuit as OpenQASM")->fallthrough();
    ex->add_option("--graph", graph_path, "adjacency JSON file");
    ex->add_option("--edges", edges_path, "edge list file");
    ex->add_option("--n", edges_n, "vertex count for --edges");
    ex->add_option("--message", message, "message qubit to X-measure (0 = none)");

    auto *ve = app.add_subcommand("verify", "synthesize + oracle + analysis, exit 0 iff all pass")->fallthrough();
    ve->add_option("--stabs", stabs_path, "stabilizer file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (cs->parsed()) {
            return cmd_cluster_stabs(opts, graph_path, edges_path, edges_n);
        }
        if (me->parsed()) {
            return cmd_measure(opts, stabs_path, graph_path, edges_path, edges_n, script_path,
                               discard);
        }
        if (sy->parsed()) {
            return cmd_synthesize(opts, stabs_path, qasm_path);
        }
        if (an->parsed()) {
            return cmd_analyze(opts, stabs_path, edges_n);
        }
        if (ex->parsed()) {
            return cmd_export_circuit(opts, graph_path, edges_path, edges_n, message);
        }
        if (ve->parsed()) {
            return cmd_verify(opts, stabs_path);
        }
    } catch (const cqec::ParseError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cqec::ValidationError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cqec::SynthesisInfeasibleError &e) {
        std::cerr << "synthesis infeasible: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const cqec::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}
