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


#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qaa/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qaa");
    std::ostringstream out;
    std::ostringstream err;
    const int code = qaa::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string graph(const std::string& name) { return std::string(QAA_DATA_DIR) + "/" + name + ".json"; }

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

class CliFiles : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qaa_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST(cli_brute, fan_graph_report) {
    const Result r = run_cli({"brute", graph("fan5")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "{\"max_cut\":5,\"degeneracy\":2,\"solutions\":[\"01010\",\"10101\"]}\n");
}

TEST(cli_brute, edgeless_graph_has_every_partition_optimal) {
    const json doc = json::parse(run_cli({"brute", graph("edgeless3")}).out);
    EXPECT_EQ(doc["max_cut"], 0);
    EXPECT_EQ(doc["degeneracy"], 8);
}

TEST(cli_brute, input_errors) {
    const Result missing = run_cli({"brute", "/nonexistent/graph.json"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_TRUE(missing.out.empty());
    EXPECT_NE(missing.err.find("graph.json"), std::string::npos);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
}

TEST_F(CliFiles, malformed_graph_reports_location) {
    write(dir_ / "bad.json", "{\"vertices\": 3,\n \"edges\": [[0, 3]]}");
    const Result r = run_cli({"brute", (dir_ / "bad.json").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("edges[0]"), std::string::npos) << r.err;
}

TEST(cli_qaa, long_schedule_lands_on_solutions) {
    const Result r = run_cli({"qaa", graph("fan5"), "--steps", "10000", "--shots", "4096"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["shots"], 4096);
    EXPECT_EQ(doc["solutions"], json::array({"01010", "10101"}));
    EXPECT_EQ(doc["solution_fraction"].get<double>(), 1.0);
    for (const auto& [bits, count] : doc["counts"].items()) EXPECT_TRUE(bits == "01010" || bits == "10101") << bits;
}

TEST(cli_qaa, zero_steps_samples_uniformly) {
    const Result r = run_cli({"qaa", graph("fan5"), "--steps", "0", "--shots", "32000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    ASSERT_EQ(doc["counts"].size(), 32u);
    std::uint64_t total = 0;
    for (const auto& [bits, count] : doc["counts"].items()) {
        EXPECT_NEAR(count.get<double>(), 1000.0, 150.0) << bits;
        total += count.get<std::uint64_t>();
    }
    EXPECT_EQ(total, 32000u);
}

TEST(cli_qaa, noisy_run_keeps_solutions_on_top) {
    const Result r = run_cli({"qaa", graph("fan5"), "--steps", "20", "--shots", "8192", "--noise", "heron-r3-opt"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["noise"]["preset"], "heron-r3-opt");
    EXPECT_DOUBLE_EQ(doc["noise"]["p_2q"].get<double>(), 2e-3);
    const auto& top = doc["top"];
    ASSERT_GE(top.size(), 2u);
    std::set<std::string> leaders{top[0]["bits"].get<std::string>(), top[1]["bits"].get<std::string>()};
    EXPECT_EQ(leaders, (std::set<std::string>{"01010", "10101"}));
    std::uint64_t total = 0;
    for (const auto& [bits, count] : doc["counts"].items()) total += count.get<std::uint64_t>();
    EXPECT_EQ(total, 8192u);
}

TEST(cli_qaa, bad_arguments) {
    EXPECT_EQ(run_cli({"qaa", graph("fan5"), "--noise", "heron-r9"}).code, 2);
    EXPECT_EQ(run_cli({"qaa", graph("fan5"), "--dt", "0"}).code, 2);
    EXPECT_EQ(run_cli({"qaa", graph("fan5"), "--shots", "0"}).code, 2);
    EXPECT_EQ(run_cli({"qaa", graph("fan5"), "--steps", "many"}).code, 2);
}

TEST_F(CliFiles, budget_errors_exit_with_three) {
    json big{{"vertices", 15}, {"edges", json::array({json::array({0, 1})})}};
    write(dir_ / "big.json", big.dump());
    EXPECT_EQ(run_cli({"qaa", (dir_ / "big.json").string(), "--steps", "1"}).code, 3);
    json mid{{"vertices", 11}, {"edges", json::array({json::array({0, 1})})}};
    write(dir_ / "mid.json", mid.dump());
    EXPECT_EQ(run_cli({"flow", (dir_ / "mid.json").string()}).code, 3);
}

TEST(cli_flow, default_table) {
    const Result r = run_cli({"flow", graph("fan5")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 1u + 20 * 32);
    EXPECT_EQ(rows[0], "s,k,phase,re_scaled,im_scaled");
    for (std::size_t k = 1; k <= 32; ++k) {
        EXPECT_EQ(rows[k].substr(0, 2), "0,");
        EXPECT_NE(rows[k].find(",0,0"), std::string::npos) << rows[k];
    }
}

TEST(cli_flow, two_samples) {
    const Result r = run_cli({"flow", graph("k3"), "--samples", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::set<std::string> s_values;
    for (std::size_t k = 1; k < lines(r.out).size(); ++k) {
        const std::string row = lines(r.out)[k];
        s_values.insert(row.substr(0, row.find(',')));
    }
    EXPECT_EQ(s_values, (std::set<std::string>{"0", "1"}));
    EXPECT_EQ(run_cli({"flow", graph("k3"), "--samples", "1"}).code, 2);
}

TEST_F(CliFiles, flow_writes_branches_next_to_output) {
    const fs::path out = dir_ / "flow.csv";
    ASSERT_EQ(run_cli({"flow", graph("fan5"), "--out", out.string()}).code, 0);
    const auto branch_rows = lines(slurp(dir_ / "flow.branches.csv"));
    ASSERT_EQ(branch_rows.size(), 1u + 20 * 32);
    EXPECT_EQ(branch_rows[0], "branch_id,s,phase");
    EXPECT_TRUE(fs::exists(dir_ / "flow.csv.manifest.json"));
}

TEST(cli_index, fixture_values) {
    const json fan = json::parse(run_cli({"index", graph("fan5")}).out);
    EXPECT_EQ(fan["index"], 1);
    EXPECT_EQ(fan["rank_start"], 1);
    EXPECT_EQ(fan["rank_end"], 2);
    EXPECT_EQ(json::parse(run_cli({"index", graph("k3")}).out)["index"], 5);
    EXPECT_EQ(json::parse(run_cli({"index", graph("house")}).out)["index"], 3);
    const Result edgeless = run_cli({"index", graph("edgeless3")});
    EXPECT_EQ(edgeless.code, 4);
    EXPECT_TRUE(edgeless.out.empty());
    EXPECT_NE(edgeless.err.find("gap"), std::string::npos);
}

TEST_F(CliFiles, replay_reproduces_outputs_byte_for_byte) {
    const fs::path g = dir_ / "g.json";
    fs::copy_file(graph("fan5"), g);
    const fs::path first = dir_ / "run.json";
    ASSERT_EQ(run_cli({"qaa", g.string(), "--steps", "20", "--shots", "3000", "--noise", "heron-r2-med", "--seed",
                       "77", "--out", first.string()})
                  .code,
              0);
    const json manifest = json::parse(slurp(first.string() + ".manifest.json"));
    EXPECT_EQ(manifest["command"], "qaa");
    EXPECT_EQ(manifest["seed"], 77);
    EXPECT_EQ(manifest["params"]["noise"], "heron-r2-med");
    EXPECT_EQ(manifest["graph_sha256"].get<std::string>().size(), 64u);

    const fs::path second = dir_ / "again.json";
    const Result r = run_cli({"replay", first.string() + ".manifest.json", "--out", second.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(first), slurp(second));
    const json again = json::parse(slurp(second.string() + ".manifest.json"));
    EXPECT_EQ(again["outputs"][0]["sha256"], manifest["outputs"][0]["sha256"]);

    write(g, slurp(g) + " ");
    const Result changed = run_cli({"replay", first.string() + ".manifest.json", "--out", second.string()});
    EXPECT_EQ(changed.code, 2);
    EXPECT_NE(changed.err.find("changed"), std::string::npos);
}

TEST(cli_helpers, formatting_and_digest) {
    EXPECT_EQ(qaa::cli::format_double(-0.0), "0");
    EXPECT_EQ(qaa::cli::format_double(0.1), "0.1");
    EXPECT_EQ(qaa::cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
