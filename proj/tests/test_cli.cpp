#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "persym/cache.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = persym::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EnumerateJson) {
    const auto r = run({"enumerate", "--n", "2", "--k", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["result"]["counts"], json({"1", "9", "126", "504", "384"}));
    EXPECT_EQ(j["result"]["method"], "exact");
    EXPECT_EQ(j["config"]["n"], 2);
    EXPECT_EQ(j["config"]["workers"], 1);
}

TEST(Cli, EnumerateCsvAndPretty) {
    const auto csv = run({"enumerate", "--n", "1", "--k", "2", "--format", "csv"});
    EXPECT_EQ(csv.out, "rank,count\n0,1\n1,3\n2,4\n");
    const auto pretty = run({"enumerate", "--n", "1", "--k", "2", "--format", "pretty"});
    EXPECT_EQ(pretty.code, 0);
    EXPECT_NE(pretty.out.find("rank"), std::string::npos);
}

TEST(Cli, EnumerateSampled) {
    const auto a = run({"enumerate", "--n", "6", "--k", "6", "--samples", "1000", "--seed", "3"});
    const auto b = run({"enumerate", "--n", "6", "--k", "6", "--samples", "1000", "--seed", "3"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = json::parse(a.out);
    EXPECT_EQ(j["result"]["method"], "sampled");
    EXPECT_EQ(j["result"]["sample_meta"]["samples"], 1000);
    EXPECT_EQ(j["frequencies"].size(), 7u);
}

TEST(Cli, ByteIdenticalAcrossWorkers) {
    const auto a = run({"enumerate", "--n", "3", "--k", "4", "--workers", "1", "--format", "csv"});
    const auto b = run({"enumerate", "--n", "3", "--k", "4", "--workers", "7", "--format", "csv"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"enumerate", "--n", "x"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"eval", "--family", "n9", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--n", "6", "--k", "6"}).code, 2);
    const auto huge = run({"enumerate", "--n", "7", "--k", "6", "--allow-huge"});
    EXPECT_EQ(huge.code, 2);
    EXPECT_NE(huge.err.find("search space too large"), std::string::npos);
}

TEST(Cli, EvalTable) {
    const auto r = run({"eval", "--family", "n6", "--k", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    ASSERT_EQ(j["rows"].size(), 7u);
    EXPECT_EQ(j["rows"][4]["value"], "645271200");
    EXPECT_EQ(j["rows"][6]["in_range"], false);
    ASSERT_EQ(j["example"].size(), 7u);
    for (const auto& e : j["example"]) {
        EXPECT_EQ(e["status"], "pass");
    }
}

TEST(Cli, EvalSingleRank) {
    const auto below = run({"eval", "--family", "n3", "--k", "2", "--i", "5"});
    EXPECT_EQ(below.code, 2);
    EXPECT_NE(below.err.find("below validity range"), std::string::npos);
    const auto forced = run({"eval", "--family", "n3", "--k", "2", "--i", "5", "--allow-below-validity",
                             "--format", "csv"});
    EXPECT_EQ(forced.code, 0);
    EXPECT_NE(forced.out.find("n3,5,2,"), std::string::npos);
    EXPECT_NE(forced.err.find("warning"), std::string::npos);
    const auto general = run({"eval", "--family", "general", "--n", "6", "--k-min", "2", "--k-max", "3",
                              "--format", "csv"});
    EXPECT_EQ(general.code, 0);
    EXPECT_NE(general.out.find("general,1,2,189,true"), std::string::npos);
    EXPECT_EQ(run({"eval", "--family", "general", "--k", "3"}).code, 2);
}

TEST(Cli, VerifyAllPasses) {
    const auto r = run({"verify", "--check", "all", "--n", "2", "--k", "4"});
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    bool saw_fail = false;
    for (const auto& c : j["checks"]) {
        saw_fail = saw_fail || c["status"] == "fail";
    }
    EXPECT_FALSE(saw_fail);
}

TEST(Cli, VerifySingleChecks) {
    EXPECT_EQ(run({"verify", "--check", "moments", "--n", "3", "--k", "3"}).code, 0);
    EXPECT_EQ(run({"verify", "--check", "crossform"}).code, 0);
    EXPECT_EQ(run({"verify", "--check", "expsum", "--n", "2", "--k", "6", "--samples", "50"}).code, 0);
    EXPECT_EQ(run({"verify", "--check", "solutions", "--n", "1", "--k", "1", "--q", "3"}).code, 0);
    EXPECT_EQ(run({"verify", "--check", "fullrank", "--n", "3", "--k", "6"}).code, 0);
    EXPECT_EQ(run({"verify", "--check", "sums"}).code, 2);
    EXPECT_EQ(run({"verify", "--check", "nope", "--n", "1", "--k", "1"}).code, 2);
}

TEST(Cli, Derive) {
    const auto r = run({"derive"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["unknown_count"], 8);
    EXPECT_EQ(j["solution"][0]["value"], "10416");
    EXPECT_TRUE(j["diff"].empty());
    EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, CountSolutions) {
    const auto r = run({"count-solutions", "--q", "2", "--n", "1", "--k", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["value"], "28");
    const auto both = run({"count-solutions", "--q", "1", "--n", "2", "--k", "3", "--method", "both"});
    ASSERT_EQ(both.code, 0);
    const auto j = json::parse(both.out);
    EXPECT_TRUE(j["agree"].get<bool>());
    EXPECT_EQ(j["results"][1]["value"], "23");
    EXPECT_EQ(run({"count-solutions", "--q", "3", "--n", "6", "--k", "6"}).code, 2);
}

TEST(Cli, CacheHitAndCorruption) {
    const fs::path dir = fs::temp_directory_path() / "persym-cli-cache-test";
    fs::remove_all(dir);
    const std::vector<std::string> args = {"enumerate", "--n", "2", "--k", "5", "--cache-dir", dir.string()};
    const auto first = run(args);
    ASSERT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.err.find("cache hit"), std::string::npos);
    const auto second = run(args);
    EXPECT_EQ(second.out, first.out);
    EXPECT_NE(second.err.find("cache hit"), std::string::npos);

    const auto path = persym::DistributionCache(dir).path_for(2, 5, persym::Method::Exact);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    in.close();
    std::string text = ss.str();
    text.replace(text.find("\"222\""), 5, "\"223\"");
    std::ofstream(path, std::ios::trunc) << text;
    const auto bad = run(args);
    EXPECT_EQ(bad.code, 3);
    EXPECT_NE(bad.err.find("cache corruption"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Cli, CacheDirFromEnvironment) {
    const fs::path dir = fs::temp_directory_path() / "persym-cli-env-cache";
    fs::remove_all(dir);
    ::setenv(persym::kCacheDirEnv, dir.c_str(), 1);
    const auto r = run({"enumerate", "--n", "1", "--k", "3"});
    ::unsetenv(persym::kCacheDirEnv);
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(fs::exists(persym::DistributionCache(dir).path_for(1, 3, persym::Method::Exact)));
    fs::remove_all(dir);
}
