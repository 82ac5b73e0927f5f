#include <gtest/gtest.h>

#include <json.hpp>
#include <fstream>
#include <sstream>

#include "sumset/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = sumset::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, SumsetJson) {
    const auto r = invoke({"sumset", "--set", "0,1,2,4", "--h", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["size"], 12);
    EXPECT_EQ(j["k"], 4);
    EXPECT_EQ(j["trivial"].size(), 10u);
    EXPECT_EQ(j["nontrivial"], nlohmann::json::array({7, 9}));
    for (const char* key : {"h", "k", "base", "size", "elements", "trivial", "nontrivial"}) EXPECT_TRUE(j.contains(key));
}

TEST(Cli, SumsetPointsAndPlain) {
    const auto r = invoke({"sumset", "--set", "0 0;0 1;1 0;1 1", "--h", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["size"], 16);
    EXPECT_EQ(j["base"][1], nlohmann::json::array({0, 1}));

    const auto plain = invoke({"sumset", "--set", "0,1,3,7", "--h", "2"});
    ASSERT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("|hA| = 10"), std::string::npos);
    EXPECT_NE(plain.out.find("0 < 1 <"), std::string::npos);
    EXPECT_NE(plain.out.find("nontrivial (3): {3,7,8}"), std::string::npos);

    const auto one = invoke({"sumset", "--set", "0,5", "--h", "1", "--format", "json"});
    ASSERT_EQ(one.code, 0);
    EXPECT_EQ(nlohmann::json::parse(one.out)["size"], 2);
}

TEST(Cli, SumsetUsageErrors) {
    EXPECT_EQ(invoke({"sumset", "--set", "0,1", "--h", "0"}).code, 2);
    EXPECT_EQ(invoke({"sumset", "--set", "0,x", "--h", "2"}).code, 2);
    EXPECT_EQ(invoke({"sumset", "--set", "0,0", "--h", "2"}).code, 2);
    EXPECT_EQ(invoke({"sumset", "--h", "2"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"sumset", "--set", "0,1", "--h", "2", "--format", "xml"}).code, 2);
}

TEST(Cli, SumsetOverflowExitCode) {
    const auto r = invoke({"sumset", "--set", "0,85070591730234615865843651857942052864", "--h", "4"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("overflow"), std::string::npos);
}

TEST(Cli, SpectrumCsv) {
    const auto r = invoke({"spectrum", "--h", "3", "--k", "4", "--max", "12", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "size,witness,is_ap");
    std::vector<int> sizes;
    while (std::getline(lines, line)) sizes.push_back(std::stoi(line.substr(0, line.find(','))));
    EXPECT_EQ(std::count(sizes.begin(), sizes.end(), 11), 0);
    EXPECT_EQ(sizes.front(), 10);
    EXPECT_NE(r.out.find("10,\"0,1,2,3\",true"), std::string::npos);
}

TEST(Cli, SpectrumJsonStableAcrossJobs) {
    auto strip = [](nlohmann::json j) {
        j.erase("duration_seconds");
        return j;
    };
    const auto a = invoke({"spectrum", "--h", "3", "--k", "5", "--max", "12", "--format", "json"});
    const auto b = invoke({"spectrum", "--h", "3", "--k", "5", "--max", "12", "--format", "json", "--jobs", "4"});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    const auto ja = nlohmann::json::parse(a.out);
    EXPECT_EQ(strip(ja), strip(nlohmann::json::parse(b.out)));
    EXPECT_EQ(ja["gap_check"]["status"], "pass");
    EXPECT_EQ(ja["gap_check"]["interval"], nlohmann::json::array({14, 14}));
}

TEST(Cli, SpectrumUsageErrors) {
    EXPECT_EQ(invoke({"spectrum", "--h", "1", "--k", "4", "--max", "12"}).code, 2);
    EXPECT_EQ(invoke({"spectrum", "--h", "3", "--k", "4", "--max", "2"}).code, 2);
    EXPECT_EQ(invoke({"spectrum", "--h", "3", "--k", "4", "--max", "8", "--jobs", "0"}).code, 2);
}

TEST(Cli, Witness) {
    const auto r = invoke({"witness", "--kind", "hk", "--h", "3", "--k", "4", "--check", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["set"], nlohmann::json::array({0, 1, 2, 4}));
    EXPECT_EQ(j["predicted"]["exact_size"], 12);
    EXPECT_EQ(j["check"]["pass"], true);

    const auto thm1 = invoke({"witness", "--kind", "thm1", "--h", "2", "--k", "5", "--params", "1", "2", "2", "5", "--check"});
    ASSERT_EQ(thm1.code, 0) << thm1.err;
    EXPECT_NE(thm1.out.find("A = {0,1,2,4,9}"), std::string::npos);
    EXPECT_NE(thm1.out.find("check: pass"), std::string::npos);

    const auto base = invoke({"witness", "--kind", "base", "--h", "4", "--params", "5", "--check"});
    ASSERT_EQ(base.code, 0) << base.err;
    EXPECT_NE(base.out.find("A = {0,1,6}"), std::string::npos);

    EXPECT_EQ(invoke({"witness", "--kind", "max", "--h", "2", "--k", "4", "--check"}).code, 0);
    EXPECT_EQ(invoke({"witness", "--kind", "thm1", "--h", "2", "--k", "4", "--params", "1", "2", "4"}).code, 2);
    EXPECT_EQ(invoke({"witness", "--kind", "zzz", "--h", "2", "--k", "4"}).code, 2);
    EXPECT_EQ(invoke({"witness", "--kind", "max", "--h", "30", "--k", "41"}).code, 3);
}

TEST(Cli, Verify) {
    const auto r = invoke({"verify", "--suite", "axioms", "--seed", "3", "--trials", "50", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["checks"].size(), 1u);
    EXPECT_EQ(j["checks"][0]["check"], "order_axioms");
    EXPECT_EQ(j["checks"][0]["pass"], true);

    EXPECT_EQ(invoke({"verify", "--suite", "axioms", "--format", "json"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--suite", "gap", "--h", "3", "--k", "4", "--max", "9", "--format", "json"}).code, 0);
    EXPECT_EQ(invoke({"verify", "--suite", "bogus"}).code, 2);
    const auto plain = invoke({"verify", "--suite", "z2", "--trials", "20"});
    EXPECT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("PASS z2_gap_sampled"), std::string::npos);
}

TEST(Cli, OutputFile) {
    const std::string path = ::testing::TempDir() + "sumset_cli_out.json";
    const auto r = invoke({"sumset", "--set", "0,1", "--h", "7", "--format", "json", "--output", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    EXPECT_EQ(nlohmann::json::parse(in)["size"], 8);
}
