#include "nearmiss/cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using namespace nearmiss;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"nearmiss"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return CliResult{code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST(CliGen, Table) {
    const CliResult r = run({"gen", "--count", "4", "--format", "tsv"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out,
              "0\t22\t23\t717\n"
              "1\t1058\t1103\t1653213\n"
              "2\t50806\t52967\t3812308653\n"
              "3\t2439746\t2543519\t8791182100413\n");
}

TEST(CliGen, SingleRowDefaultFormat) {
    const CliResult r = run({"gen", "--count", "1"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "0\t22\t23\t717\n");
}

TEST(CliGen, Jsonl) {
    const CliResult r = run({"gen", "--count", "2", "--format", "jsonl"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out,
              "{\"n\":\"0\",\"x\":\"22\",\"y\":\"23\",\"z\":\"717\"}\n"
              "{\"n\":\"1\",\"x\":\"1058\",\"y\":\"1103\",\"z\":\"1653213\"}\n");
}

TEST(CliGen, UsageErrors) {
    EXPECT_EQ(run({"gen", "--count", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"gen", "--count", "-3"}).code, kExitUsage);
    EXPECT_EQ(run({"gen"}).code, kExitUsage);
    EXPECT_EQ(run({"gen", "--count", "2", "--format", "csv"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
}

TEST(CliGen, HelpIsSuccess) {
    const CliResult r = run({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("search"), std::string::npos);
    EXPECT_EQ(r.out.find("override-z0"), std::string::npos);
}

TEST(CliGen, TsvAndJsonlCarrySameNumbers) {
    const auto tsv = lines(run({"gen", "--count", "30"}).out);
    const auto jsonl = lines(run({"gen", "--count", "30", "--format", "jsonl"}).out);
    ASSERT_EQ(tsv.size(), jsonl.size());
    for (std::size_t i = 0; i < tsv.size(); ++i) {
        const auto j = nlohmann::json::parse(jsonl[i]);
        const std::string joined = j["n"].get<std::string>() + "\t" + j["x"].get<std::string>() +
                                   "\t" + j["y"].get<std::string>() + "\t" +
                                   j["z"].get<std::string>();
        EXPECT_EQ(joined, tsv[i]);
    }
}

TEST(CliVerify, Passes) {
    const CliResult r = run({"verify", "--count", "50"});
    EXPECT_EQ(r.code, kExitOk);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 50U);
    EXPECT_EQ(rows[0], "0\t0\tmatch\tok");
    EXPECT_EQ(run({"verify", "--count", "4"}).code, kExitOk);
}

TEST(CliVerify, CorruptSeedNamesIndexZero) {
    const CliResult r = run({"verify", "--count", "4", "--override-z0", "718"});
    EXPECT_EQ(r.code, kExitCheckFailed);
    EXPECT_EQ(lines(r.out)[0], "0\t-1435\tmismatch\tFAIL");
    EXPECT_NE(r.err.find("n=0 failed"), std::string::npos);
    EXPECT_EQ(lines(r.out)[1], "1\t0\tmatch\tok");
}

TEST(CliVerify, UsageErrors) {
    EXPECT_EQ(run({"verify", "--count", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--count", "3", "--override-z0", "abc"}).code, kExitUsage);
}

TEST(CliClosedForm, ShowsCancellation) {
    const CliResult r = run({"closed-form", "--n", "2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("x_exact\t50806 + 0*sqrt(577)\n"), std::string::npos);
    EXPECT_NE(r.out.find("z\t3812308653\n"), std::string::npos);
    EXPECT_NE(r.out.find("(-1)^n*g\t48/577\n"), std::string::npos);

    const auto j = nlohmann::json::parse(run({"closed-form", "--n", "3", "--format", "jsonl"}).out);
    EXPECT_EQ(j["z"], "8791182100413");
    EXPECT_EQ(j["(-1)^n*g"], "-48/577");
}

TEST(CliIdentities, ReportAllTrue) {
    const CliResult r = run({"identities"});
    EXPECT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["coefficient_identities"].size(), 5U);
    ASSERT_EQ(j["root_identities"].size(), 3U);
    for (const auto& c : j["coefficient_identities"]) {
        EXPECT_TRUE(c["equal"].get<bool>());
        EXPECT_EQ(c["left"], c["right"]);
    }
    for (const auto& c : j["root_identities"]) EXPECT_TRUE(c["equal"].get<bool>());
    EXPECT_TRUE(j["expansion_tables"]["equal"].get<bool>());
    EXPECT_EQ(j["expansion_tables"]["lhs"].size(), 5U);
    EXPECT_TRUE(j["all_passed"].get<bool>());
    EXPECT_EQ(j["coefficient_identities"][0]["left"],
              "171116091089/665858 + 7123656081/665858*sqrt(577)");
}

TEST(CliIdentities, PerturbedGFails) {
    const CliResult r = run({"identities", "--perturb-g", "1"});
    EXPECT_EQ(r.code, kExitCheckFailed);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["all_passed"].get<bool>());
    EXPECT_TRUE(j["coefficient_identities"][0]["equal"].get<bool>());
    EXPECT_FALSE(j["coefficient_identities"][2]["equal"].get<bool>());
    EXPECT_EQ(run({"identities", "--perturb-g", "x"}).code, kExitUsage);
}

TEST(CliSearch, TableRows) {
    const CliResult r = run({"search", "--min-x", "2", "--max-x", "1200", "--exact-residual", "8"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("22\t23\t717\t8\n"), std::string::npos);
    EXPECT_NE(r.out.find("1058\t1103\t1653213\t8\n"), std::string::npos);
}

TEST(CliSearch, MatchesOracleFixture) {
    std::ifstream in(NEARMISS_FIXTURE_DIR "/search_max60_t50.tsv");
    std::stringstream expected;
    expected << in.rdbuf();
    const CliResult r = run({"search", "--max-x", "60", "--threshold", "50"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, expected.str());
}

TEST(CliSearch, ZeroHitsIsSuccess) {
    const CliResult r = run({"search", "--max-x", "1200", "--threshold", "0"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err.find("0 hits"), std::string::npos);
}

TEST(CliSearch, JsonlMatchesTsv) {
    const auto tsv = lines(run({"search", "--max-x", "40", "--threshold", "20"}).out);
    const auto jsonl =
        lines(run({"search", "--max-x", "40", "--threshold", "20", "--format", "jsonl"}).out);
    ASSERT_EQ(tsv.size(), jsonl.size());
    ASSERT_FALSE(tsv.empty());
    for (std::size_t i = 0; i < tsv.size(); ++i) {
        const auto j = nlohmann::json::parse(jsonl[i]);
        EXPECT_EQ(j["x"].get<std::string>() + "\t" + j["y"].get<std::string>() + "\t" +
                      j["z"].get<std::string>() + "\t" + j["delta"].get<std::string>(),
                  tsv[i]);
    }
}

TEST(CliSearch, WorkersAndArithmeticDoNotChangeOutput) {
    const std::string base = run({"search", "--max-x", "300", "--threshold", "25"}).out;
    EXPECT_EQ(run({"search", "--max-x", "300", "--threshold", "25", "--workers", "4"}).out, base);
    EXPECT_EQ(run({"search", "--max-x", "300", "--threshold", "25", "--arithmetic", "big"}).out, base);
}

TEST(CliSearch, UsageErrors) {
    EXPECT_EQ(run({"search", "--max-x", "10"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--max-x", "10", "--threshold", "-1"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--min-x", "0", "--max-x", "10", "--threshold", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--min-x", "20", "--max-x", "10", "--threshold", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--max-x", "ten", "--threshold", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--max-x", "10", "--threshold", "1", "--workers", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--max-x", "10", "--threshold", "2", "--exact-residual", "8"}).code,
              kExitUsage);
}
