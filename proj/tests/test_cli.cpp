#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "tqmean/means.hpp"
#include "tqmean/sequences.hpp"
#include "tqmean/serialization.hpp"
#include "tqmean/sharp_constants.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = tqmean::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct GoldenCase {
    const char* file;
    std::vector<std::string> args;
};

const std::vector<GoldenCase> kGolden = {
    {"eval.json", {"eval", "toader-qi", "1", "4"}},
    {"eval.csv", {"eval", "toader-qi", "1", "4", "--format", "csv"}},
    {"verify.json", {"verify", "--id", "G-TQ-A", "--id", "conjecture-2", "--samples", "100", "--seed", "7"}},
    {"verify.csv",
     {"verify", "--id", "G-TQ-A", "--id", "conjecture-2", "--samples", "100", "--seed", "7", "--format", "csv"}},
    {"constants.json", {"constants"}},
    {"constants.csv", {"constants", "--format", "csv"}},
    {"series.json", {"series", "i0-squared", "5"}},
    {"series.csv", {"series", "i0-squared", "5", "--format", "csv"}},
    {"table.json", {"table", "cd-ratio", "3"}},
    {"table.csv", {"table", "cd-ratio", "3", "--format", "csv"}},
    {"probe.json", {"probe", "I0-sh2t/2t"}},
    {"probe.csv", {"probe", "I0-sh2t/2t", "--format", "csv"}},
};

} // namespace

TEST(Cli, GoldenOutputs)
{
    for (const GoldenCase& g : kGolden) {
        const Outcome o = run(g.args);
        EXPECT_EQ(o.code, 0) << g.file << ": " << o.err;
        EXPECT_EQ(o.out, read_file(std::string(TQMEAN_GOLDEN_DIR) + "/" + g.file)) << g.file;
    }
}

TEST(Cli, EvalIsAThinAdapter)
{
    const Outcome o = run({"eval", "toader-qi", "1", "4"});
    ASSERT_EQ(o.code, 0);
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["mean"], "toader-qi");
    EXPECT_EQ(j["a"], 1);
    EXPECT_EQ(j["b"], 4);
    const double v = j["value"].get<double>();
    EXPECT_GT(v, 2.0);
    EXPECT_LT(v, 2.5);
    EXPECT_EQ(v, tqmean::evaluate(tqmean::MeanKind::toader_qi(), tqmean::PositivePair(1, 4)));

    // full round-trip precision on input and output
    const Outcome p = run({"eval", "power:0.75", "0.1", "0.30000000000000004"});
    const double expected = tqmean::evaluate(tqmean::MeanKind::power(0.75), tqmean::PositivePair(0.1, 0.30000000000000004));
    EXPECT_EQ(nlohmann::json::parse(p.out)["value"].get<double>(), expected);
    EXPECT_EQ(nlohmann::json::parse(p.out)["b"].get<double>(), 0.30000000000000004);
}

TEST(Cli, ConstantsIsAThinAdapter)
{
    const Outcome o = run({"constants", "--p", "0.9,0.95,0.99"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_NEAR(j["t0"].get<double>(), 2.7113555314, 1e-6);
    EXPECT_EQ(j["t0"].get<double>(), tqmean::find_t0_delta0().location);
    EXPECT_EQ(j["delta0"].get<double>(), tqmean::find_t0_delta0().value);
    ASSERT_EQ(j["lambda0"].size(), 3u);
    EXPECT_EQ(j["lambda0"][2]["p"].get<double>(), 0.99);
    EXPECT_EQ(j["lambda0"][2]["value"].get<double>(), tqmean::find_lambda0(0.99).value);
}

TEST(Cli, TableIsAThinAdapter)
{
    const Outcome s = run({"table", "s-sequence", "1"});
    const auto j = nlohmann::json::parse(s.out);
    EXPECT_EQ(j["rows"][0]["num"], "1");
    EXPECT_EQ(j["rows"][1]["num"], "3");
    EXPECT_EQ(j["rows"][1]["den"], "4");

    const Outcome v = run({"table", "v-sequence", "3", "--format", "csv"});
    EXPECT_EQ(v.out, "n,value\n0,0/1\n1,0/1\n2,3/80\n3,4/189\n");

    const Outcome cd = run({"table", "cd-ratio", "3", "--format", "csv"});
    EXPECT_EQ(cd.out, "n,value\n1,2/3\n2,41/60\n3,19/28\n");

    const Outcome big = run({"table", "wallis", "60"});
    const auto w = nlohmann::json::parse(big.out);
    EXPECT_EQ(w["rows"][60]["num"].get<std::string>() + "/" + w["rows"][60]["den"].get<std::string>(),
              tqmean::to_fraction_string(tqmean::wallis_ratio(60)));
}

TEST(Cli, VerifyIsDeterministic)
{
    const Outcome a = run({"verify", "--samples", "100", "--seed", "7"});
    const Outcome b = run({"verify", "--samples", "100", "--seed", "7"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["reports"].size(), tqmean::registry().size());
    EXPECT_EQ(j["theorem_failures"], 0);
}

TEST(Cli, VerifyReportsMatchLibrary)
{
    const Outcome o = run({"verify", "--id", "I0-L-A", "--samples", "300", "--seed", "5"});
    const auto j = tqmean::Json::parse(o.out);
    EXPECT_EQ(tqmean::dump(j["reports"][0]), tqmean::dump(tqmean::to_json(tqmean::verify_case("I0-L-A", 300, 5))));
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"eval", "toader-qi", "1"}).code, 2);
    EXPECT_EQ(run({"eval", "toader-qi", "1", "4", "--bogus"}).code, 2);
    EXPECT_EQ(run({"eval", "toader-qi", "1", "4", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"eval", "median", "1", "4"}).code, 2);
    EXPECT_EQ(run({"eval", "toader-qi", "0", "4"}).code, 2);
    EXPECT_EQ(run({"eval", "toader-qi", "one", "4"}).code, 2);
    EXPECT_EQ(run({"verify", "--id", "nope"}).code, 2);
    EXPECT_EQ(run({"verify", "--samples", "0"}).code, 2);
    EXPECT_EQ(run({"table", "nope", "3"}).code, 2);
    EXPECT_EQ(run({"series", "nope", "3"}).code, 2);
    EXPECT_EQ(run({"probe", "G-TQ-A"}).code, 2);
    EXPECT_EQ(run({"constants", "--p", "0.5"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);

    const Outcome usage = run({"eval", "toader-qi", "1", "4", "--bogus"});
    EXPECT_TRUE(usage.out.empty());
    EXPECT_NE(usage.err.find("--bogus"), std::string::npos);

    // unattainable accuracy is a numerical failure, not a usage error
    EXPECT_EQ(run({"eval", "toader", "1", "1e6", "--tolerance", "1e-30"}).code, 1);
}

TEST(Cli, ConjectureCasesExitZero)
{
    const Outcome o = run({"verify", "--id", "conjecture-L32", "--id", "conjecture-2", "--samples", "2000"});
    EXPECT_EQ(o.code, 0);
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["reports"][0]["status"], "conjecture");
    EXPECT_EQ(j["reports"][1]["status"], "conjecture");
}

TEST(Cli, GlobalFlagsAnywhere)
{
    EXPECT_EQ(run({"--format", "csv", "eval", "arithmetic", "2", "4"}).out, "mean,a,b,value\narithmetic,2,4,3\n");
    EXPECT_EQ(run({"eval", "arithmetic", "2", "4", "--format", "csv"}).out, "mean,a,b,value\narithmetic,2,4,3\n");
}
