// Copyright 2026 The qaa-maxcut Authors
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


#include "qaa/cli.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaa/error.hpp"

#ifndef QAA_VERSION
#define QAA_VERSION "0.0.0"
#endif

namespace qaa::cli {

using nlohmann::ordered_json;

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw NumericalError("cannot format number");
    return std::string(buf, end);
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

std::string brute_report_json(const MaxCutSolution& sol) {
    ordered_json doc;
    doc["max_cut"] = sol.max_cut;
    doc["degeneracy"] = sol.degeneracy();
    auto list = ordered_json::array();
    for (const Partition& p : sol.solutions) list.push_back(to_msb_string(p.word, p.n_vertices));
    doc["solutions"] = list;
    return doc.dump();
}

std::string histogram_json(const HistogramReport& report) {
    const Histogram& h = report.histogram;
    ordered_json doc;
    doc["n_qubits"] = h.n_qubits;
    doc["shots"] = h.shots;
    doc["dt"] = report.schedule.dt;
    doc["steps"] = report.schedule.n_steps;
    doc["seed"] = report.seed;
    doc["noise"] = {{"preset", report.noise_name},
                    {"p_1q", report.noise.p_1q},
                    {"p_2q", report.noise.p_2q},
                    {"p_ro", report.noise.p_ro}};
    if (report.solutions) {
        auto list = ordered_json::array();
        std::vector<std::uint64_t> words;
        for (const Partition& p : report.solutions->solutions) {
            list.push_back(to_msb_string(p.word, p.n_vertices));
            words.push_back(p.word);
        }
        doc["solutions"] = list;
        doc["solution_fraction"] = h.fraction_on(words);
    }
    auto top = ordered_json::array();
    for (const auto& [word, count] : h.top(report.top)) {
        top.push_back({{"bits", to_msb_string(word, h.n_qubits)}, {"count", count}});
    }
    doc["top"] = top;
    ordered_json counts = ordered_json::object();
    for (const auto& [word, count] : h.counts) counts[to_msb_string(word, h.n_qubits)] = count;
    doc["counts"] = counts;
    return doc.dump(2) + "\n";
}

std::string flow_csv(const SpectralFlow& flow) {
    std::string out = "s,k,phase,re_scaled,im_scaled\n";
    for (const FlowSample& sample : flow.samples) {
        for (std::size_t k = 0; k < sample.eigenphases.size(); ++k) {
            out += format_double(sample.s) + "," + std::to_string(k) + "," + format_double(sample.eigenphases[k]) +
                   "," + format_double(sample.scaled_points[k].real()) + "," +
                   format_double(sample.scaled_points[k].imag()) + "\n";
        }
    }
    return out;
}

std::string branches_csv(const SpectralFlow& flow) {
    std::string out = "branch_id,s,phase\n";
    for (std::size_t b = 0; b < flow.branches.size(); ++b) {
        for (const BranchPoint& p : flow.branches[b]) {
            out += std::to_string(b) + "," + format_double(p.s) + "," + format_double(p.phase) + "\n";
        }
    }
    return out;
}

std::string index_report_json(const IndexReport& report) {
    ordered_json doc;
    doc["index"] = report.index;
    doc["crossings_down"] = report.crossings_down;
    doc["crossings_up"] = report.crossings_up;
    doc["rank_start"] = report.rank_start;
    doc["rank_end"] = report.rank_end;
    doc["evaluations"] = report.evaluations;
    return doc.dump();
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
    if (!f) throw InputError("failed writing '" + path + "'");
}

std::string branches_path_for(const std::string& out) {
    std::filesystem::path p(out);
    return (p.parent_path() / (p.stem().string() + ".branches.csv")).string();
}

// Options of one command, in the order they are replayed.
using Params = std::vector<std::pair<std::string, std::string>>;

struct Invocation {
    std::string command;
    std::string graph_path;
    Params params;
    std::string out_path;  // empty: stdout
};

struct Outputs {
    // (path or "" for stdout, contents)
    std::vector<std::pair<std::string, std::string>> files;
};

Outputs execute(const Invocation& inv, const Graph& g, const std::map<std::string, std::string>& opt) {
    Outputs outputs;
    auto num = [&](const std::string& key) { return std::stod(opt.at(key)); };
    auto count = [&](const std::string& key) { return std::stoull(opt.at(key)); };

    if (inv.command == "brute") {
        outputs.files.emplace_back(inv.out_path, brute_report_json(brute_force_maxcut(g)) + "\n");
    } else if (inv.command == "qaa") {
        const TrotterSchedule sched{num("dt"), count("steps")};
        const std::string noise_name = opt.at("noise");
        const NoiseModel noise = parse_noise_preset(noise_name);
        const std::uint64_t shots = count("shots");
        const std::uint64_t seed = count("seed");
        const Histogram h = noise_name == "none"
                                ? sample_measurements(qaa_evolve(g, sched), shots, seed)
                                : noisy_qaa_histogram({g, sched, noise, shots, seed});
        std::optional<MaxCutSolution> sol;
        if (g.n_vertices() <= kMaxBruteForceVertices) sol = brute_force_maxcut(g);
        const HistogramReport report{h, sched, noise_name, noise, seed, count("top"), sol ? &*sol : nullptr};
        outputs.files.emplace_back(inv.out_path, histogram_json(report));
    } else if (inv.command == "flow") {
        FlowParams params;
        params.n_samples = count("samples");
        params.schedule = {num("dt"), count("steps")};
        params.scale = num("scale");
        const SpectralFlow flow = compute_flow(g, params);
        outputs.files.emplace_back(inv.out_path, flow_csv(flow));
        const std::string branches = opt.at("branches");
        if (!branches.empty()) outputs.files.emplace_back(branches, branches_csv(flow));
    } else if (inv.command == "index") {
        IndexParams params;
        params.n_samples = count("samples");
        params.zz_factor = num("zz-factor");
        outputs.files.emplace_back(inv.out_path, index_report_json(intersection_index(g, params)) + "\n");
    } else {
        throw InputError("unknown command '" + inv.command + "'");
    }
    return outputs;
}

std::string manifest_json(const Invocation& inv, const std::string& graph_text, const Outputs& outputs,
                          double seconds) {
    ordered_json doc;
    doc["tool"] = "qaa";
    doc["version"] = QAA_VERSION;
    doc["command"] = inv.command;
    doc["graph_file"] = inv.graph_path;
    doc["graph_sha256"] = sha256_hex(graph_text);
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : inv.params) params[k] = v;
    doc["params"] = params;
    for (const auto& [k, v] : inv.params) {
        if (k == "seed") doc["seed"] = std::stoull(v);
    }
    auto outs = ordered_json::array();
    for (const auto& [path, text] : outputs.files) {
        outs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    }
    doc["outputs"] = outs;
    doc["duration_seconds"] = seconds;
    return doc.dump(2) + "\n";
}

void run_invocation(const Invocation& inv, const std::string& graph_text, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Graph g = [&] {
        try {
            return parse_graph(graph_text);
        } catch (const BudgetError&) {
            throw;
        } catch (const InputError& e) {
            throw InputError(inv.graph_path + ": " + e.what());
        }
    }();
    std::map<std::string, std::string> opt(inv.params.begin(), inv.params.end());
    const Outputs outputs = execute(inv, g, opt);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& [path, text] : outputs.files) {
        if (path.empty()) {
            out << text;
        } else {
            write_file(path, text);
        }
    }
    if (!inv.out_path.empty()) write_file(inv.out_path + ".manifest.json", manifest_json(inv, graph_text, outputs, seconds));
}

Invocation from_manifest(const std::string& manifest_path, const std::string& out_override, std::string& graph_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(read_file(manifest_path));
    } catch (const ordered_json::exception& e) {
        throw InputError(manifest_path + ": malformed manifest: " + e.what());
    }
    Invocation inv;
    try {
        inv.command = doc.at("command").get<std::string>();
        inv.graph_path = doc.at("graph_file").get<std::string>();
        for (const auto& [k, v] : doc.at("params").items()) inv.params.emplace_back(k, v.get<std::string>());
        graph_text = read_file(inv.graph_path);
        if (sha256_hex(graph_text) != doc.at("graph_sha256").get<std::string>()) {
            throw InputError(manifest_path + ": graph file '" + inv.graph_path + "' changed since the recorded run");
        }
        const auto& outs = doc.at("outputs");
        inv.out_path = outs.empty() ? "" : outs.at(0).at("path").get<std::string>();
    } catch (const ordered_json::exception& e) {
        throw InputError(manifest_path + ": incomplete manifest: " + e.what());
    }
    if (!out_override.empty()) {
        inv.out_path = out_override;
        for (auto& [k, v] : inv.params) {
            if (k == "branches" && !v.empty()) v = branches_path_for(out_override);
        }
    }
    return inv;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum adiabatic Max-Cut: brute force, QAA sampling, spectral flow and intersection index"};
    app.set_version_flag("--version", QAA_VERSION);
    app.require_subcommand(1);

    std::string graph_path;
    std::string out_path;

    auto* brute = app.add_subcommand("brute", "Exhaustive Max-Cut: C, D and all optimal partitions (JSON)");
    brute->add_option("graph", graph_path, "Graph JSON file")->required();
    brute->add_option("--out", out_path, "Write JSON here (plus a .manifest.json) instead of stdout");

    double dt = 0.1;
    std::uint64_t steps = 1000;
    std::uint64_t shots = 40960;
    std::uint64_t seed = 0;
    std::string noise = "none";
    std::size_t top = 8;
    auto* qaa = app.add_subcommand("qaa", "Run the adiabatic circuit and sample a histogram (JSON)");
    qaa->add_option("graph", graph_path, "Graph JSON file")->required();
    qaa->add_option("--dt", dt, "Trotter time step")->capture_default_str();
    qaa->add_option("--steps", steps, "Number of Trotter steps N_t")->capture_default_str();
    qaa->add_option("--shots", shots, "Measurement shots")->capture_default_str()->check(CLI::PositiveNumber);
    qaa->add_option("--seed", seed, "Master seed")->capture_default_str();
    qaa->add_option("--noise", noise, "none | heron-r3-opt | heron-r2-med | custom:p1,p2,pro")->capture_default_str();
    qaa->add_option("--top", top, "Entries in the top list (0 = all)")->capture_default_str();
    qaa->add_option("--out", out_path, "Write JSON here (plus a .manifest.json) instead of stdout");

    std::size_t samples = 20;
    std::uint64_t flow_steps = 50;
    double scale = 20.0;
    std::string branches_path;
    auto* flow = app.add_subcommand("flow", "Spectral flow of the Trotter unitary over s (CSV)");
    flow->add_option("graph", graph_path, "Graph JSON file")->required();
    flow->add_option("--samples", samples, "Number of s samples")->capture_default_str();
    flow->add_option("--steps", flow_steps, "Trotter steps per unitary")->capture_default_str();
    flow->add_option("--dt", dt, "Trotter time step")->capture_default_str();
    flow->add_option("--scale", scale, "Lambda(s) = scale * s")->capture_default_str();
    flow->add_option("--out", out_path, "Write CSV here (plus branches and manifest) instead of stdout");
    flow->add_option("--branches", branches_path, "Branch CSV path (default: <out stem>.branches.csv)");

    double zz_factor = kDefaultZZFactor;
    auto* index = app.add_subcommand("index", "Intersection index of the exact spectral flow (JSON)");
    index->add_option("graph", graph_path, "Graph JSON file")->required();
    index->add_option("--samples", samples, "Initial s samples before refinement")->capture_default_str();
    index->add_option("--zz-factor", zz_factor, "Scale of the problem Hamiltonian")->capture_default_str();
    index->add_option("--out", out_path, "Write JSON here (plus a .manifest.json) instead of stdout");

    std::string manifest_path;
    auto* replay = app.add_subcommand("replay", "Re-run a command from its manifest");
    replay->add_option("manifest", manifest_path, "Manifest JSON written next to an output")->required();
    replay->add_option("--out", out_path, "Override the recorded output path");

    std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << QAA_VERSION << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        std::string graph_text;
        Invocation inv;
        if (replay->parsed()) {
            inv = from_manifest(manifest_path, out_path, graph_text);
        } else {
            inv.graph_path = graph_path;
            inv.out_path = out_path;
            graph_text = read_file(graph_path);
            if (brute->parsed()) {
                inv.command = "brute";
            } else if (qaa->parsed()) {
                inv.command = "qaa";
                inv.params = {{"dt", format_double(dt)},       {"steps", std::to_string(steps)},
                              {"shots", std::to_string(shots)}, {"seed", std::to_string(seed)},
                              {"noise", noise},                 {"top", std::to_string(top)}};
            } else if (flow->parsed()) {
                inv.command = "flow";
                if (branches_path.empty() && !out_path.empty()) branches_path = branches_path_for(out_path);
                inv.params = {{"samples", std::to_string(samples)}, {"steps", std::to_string(flow_steps)},
                              {"dt", format_double(dt)},            {"scale", format_double(scale)},
                              {"branches", branches_path}};
            } else if (index->parsed()) {
                inv.command = "index";
                inv.params = {{"samples", std::to_string(samples)}, {"zz-factor", format_double(zz_factor)}};
            }
        }
        run_invocation(inv, graph_text, out);
        return kOk;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const BudgetError& e) {
        err << "budget error: " << e.what() << "\n";
        return kBudgetError;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNumericalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace qaa::cli
