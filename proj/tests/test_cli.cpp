// Copyright 2026 The PTM-QC Authors
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

#include "ptm/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Invocation {
    int code = 0;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "ptm");
    std::vector<char *> argv;
    for (std::string &a : args) {
        argv.push_back(a.data());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = ptm::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name) {
    const char *root = std::getenv("PTM_TEST_TMPDIR");
    fs::path dir = fs::path(root ? root : fs::temp_directory_path().string()) / "cli_scratch";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(cli, help_and_version) {
    EXPECT_EQ(run({"--help"}).code, ptm::cli::kExitOk);
    const Invocation v = run({"--version"});
    EXPECT_EQ(v.code, ptm::cli::kExitOk);
    EXPECT_NE(v.out.find(ptm::cli::tool_version()), std::string::npos);
}

TEST(cli, seq_csv_and_json) {
    const Invocation csv = run({"seq", "--order", "3"});
    ASSERT_EQ(csv.code, 0);
    const std::vector<std::string> rows = lines(csv.out);
    ASSERT_EQ(rows.size(), 9U);
    EXPECT_EQ(rows[0], "index,bit");
    EXPECT_EQ(rows[4], "3,0");
    EXPECT_EQ(rows[8], "7,1");

    const Invocation js = run({"seq", "--order", "4", "--format", "json"});
    ASSERT_EQ(js.code, 0);
    const Json doc = Json::parse(js.out);
    EXPECT_EQ(doc["op"], "seq");
    EXPECT_EQ(doc["values"]["bits"].size(), 16U);
    EXPECT_TRUE(doc["pass"].is_null());
    EXPECT_TRUE(doc["error_bound"].is_null());
}

TEST(cli, multigrade_rows) {
    const Invocation r = run({"multigrade", "--order", "3"});
    ASSERT_EQ(r.code, 0);
    const std::vector<std::string> rows = lines(r.out);
    ASSERT_EQ(rows.size(), 5U);
    EXPECT_EQ(rows[3], "2,70,70,true");
    EXPECT_EQ(rows[4], "3,368,416,false");
}

TEST(cli, verify_reports) {
    const Invocation r = run({"verify", "--property", "1.2.4", "--n", "5"});
    ASSERT_EQ(r.code, ptm::cli::kExitOk) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["op"], "verify");
    EXPECT_EQ(doc["params"]["property"], "xx-stabilizer");
    EXPECT_EQ(doc["pass"], true);
    EXPECT_EQ(doc["error_bound"], 1e-12);

    const Invocation z = run({"verify", "--property", "z-products", "--n", "4"});
    ASSERT_EQ(z.code, 0);
    EXPECT_EQ(Json::parse(z.out)["values"]["subsets_checked"], 15);

    const Invocation jz = run({"verify", "--property", "jz", "--d", "64"});
    ASSERT_EQ(jz.code, 0);
    EXPECT_EQ(Json::parse(jz.out)["values"]["first_failing_power"], 6);
}

TEST(cli, qec_round) {
    for (const char *code : {"shor3", "ptm3"}) {
        for (const char *site : {"0", "1", "2", "3"}) {
            const Invocation r = run({"qec", "--code", code, "--alpha", "0.6", "--beta", "0+0.8i", "--error-site", site});
            ASSERT_EQ(r.code, 0) << r.err;
            const Json doc = Json::parse(r.out);
            EXPECT_NEAR(doc["values"]["fidelity"].get<double>(), 1.0, 1e-10);
            EXPECT_EQ(doc["pass"], true);
        }
    }
}

TEST(cli, constant_and_zeta) {
    const Json c = Json::parse(run({"constant", "--bits", "64", "--digits", "5"}).out);
    EXPECT_EQ(c["values"]["value"], "0.41245");
    const Invocation z = run({"zeta", "--sigma", "2", "--terms", "10000"});
    ASSERT_EQ(z.code, 0);
    EXPECT_EQ(Json::parse(z.out)["values"]["feiler_matches_series"], true);
}

TEST(cli, usage_errors) {
    const Invocation unknown = run({"seq", "--order", "3", "--bogus"});
    EXPECT_EQ(unknown.code, ptm::cli::kExitUsage);
    EXPECT_FALSE(unknown.err.empty());
    EXPECT_EQ(run({"qec", "--code", "ptm3"}).code, ptm::cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, ptm::cli::kExitUsage);
}

TEST(cli, validation_errors_are_structured) {
    const Invocation cap = run({"state", "--n", "40", "--which", "0"});
    EXPECT_EQ(cap.code, ptm::cli::kExitValidation);
    const Json err = Json::parse(cap.err);
    EXPECT_EQ(err["error"]["kind"], "capacity");
    EXPECT_TRUE(err["error"]["message"].is_string());

    const Invocation zeta = run({"zeta", "--sigma", "0.5"});
    EXPECT_EQ(zeta.code, ptm::cli::kExitValidation);
    EXPECT_EQ(Json::parse(zeta.err)["error"]["kind"], "invalid_argument");

    const Invocation qec = run({"qec", "--code", "ptm3", "--alpha", "1", "--beta", "1"});
    EXPECT_EQ(qec.code, ptm::cli::kExitValidation);
}

TEST(cli, fractal_outputs_and_manifest) {
    const fs::path out = scratch("spectrum.csv");
    const Invocation r = run({"fractal", "--n", "8", "--out", out.string(), "--zoom", "0.25,0.125"});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::vector<std::string> rows = lines(slurp(out));
    ASSERT_EQ(rows.size(), 257U);
    EXPECT_EQ(rows[0], "j,x,intensity,log10_intensity");
    const fs::path window = scratch("spectrum_zoom_0.25_0.125.csv");
    EXPECT_TRUE(fs::exists(window));
    const Json manifest = Json::parse(slurp(out.string() + ".manifest.json"));
    EXPECT_EQ(manifest["subcommand"], "fractal");
    EXPECT_EQ(manifest["seed"], 0);
    ASSERT_EQ(manifest["outputs"].size(), 2U);
    EXPECT_EQ(manifest["outputs"][0]["sha256"].get<std::string>().size(), 64U);
}

TEST(cli, outputs_are_deterministic) {
    const fs::path a = scratch("evolve_a.csv");
    const fs::path b = scratch("evolve_b.csv");
    for (const fs::path &p : {a, b}) {
        const Invocation r = run({"evolve", "--n", "3", "--tfinal", "0.5", "--out", p.string(), "--seed", "7"});
        ASSERT_EQ(r.code, 0) << r.err;
    }
    EXPECT_EQ(slurp(a), slurp(b));
    const Json ma = Json::parse(slurp(a.string() + ".manifest.json"));
    const Json mb = Json::parse(slurp(b.string() + ".manifest.json"));
    EXPECT_EQ(ma["outputs"][0]["sha256"], mb["outputs"][0]["sha256"]);
    EXPECT_EQ(ma["seed"], 7);

    const fs::path i1 = scratch("init_1.csv");
    const fs::path i2 = scratch("init_2.csv");
    ASSERT_EQ(run({"initptm", "--n", "3", "--sign", "-", "--out", i1.string()}).code, 0);
    ASSERT_EQ(run({"initptm", "--n", "3", "--sign", "-", "--out", i2.string()}).code, 0);
    EXPECT_EQ(slurp(i1), slurp(i2));
}
