#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "tqmean/serialization.hpp"

using namespace tqmean;

TEST(Dump, NumbersUseSeventeenSignificantDigits)
{
    EXPECT_EQ(dump(Json(0.1), -1), "0.10000000000000001");
    EXPECT_EQ(dump(Json(1.0), -1), "1");
    EXPECT_EQ(dump(Json(1.0 / 3.0), -1), "0.33333333333333331");
    EXPECT_EQ(dump(Json(2.5e-300), -1), "2.5e-300");
    EXPECT_EQ(dump(Json(42), -1), "42");
    EXPECT_EQ(dump(Json(std::numeric_limits<double>::quiet_NaN()), -1), "null");
    EXPECT_EQ(dump(Json(std::numeric_limits<double>::infinity()), -1), "null");
}

TEST(Dump, RoundTripsThroughAParser)
{
    const double x = 0.67664295834379173;
    const Json j{{"x", x}, {"s", "a\"b"}, {"list", {1, 2.5, true}}, {"empty", Json::array()}};
    const Json back = Json::parse(dump(j));
    EXPECT_EQ(back["x"].get<double>(), x);
    EXPECT_EQ(back["s"], "a\"b");
    EXPECT_EQ(back["list"][1].get<double>(), 2.5);
    EXPECT_EQ(back["empty"].size(), 0u);
}

TEST(Dump, Layout)
{
    const Json j{{"a", 1}, {"b", {2, 3}}};
    EXPECT_EQ(dump(j, -1), R"({"a":1,"b":[2,3]})");
    EXPECT_EQ(dump(j, 2), "{\n  \"a\": 1,\n  \"b\": [\n    2,\n    3\n  ]\n}");
    EXPECT_EQ(dump(Json::object(), 2), "{}");
}

TEST(Csv, Quoting)
{
    EXPECT_EQ(csv_row({"a", "b c", "1/2"}), "a,b c,1/2");
    EXPECT_EQ(csv_row({"x,y", "say \"hi\""}), "\"x,y\",\"say \"\"hi\"\"\"");
    EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(ToJson, CoeffTable)
{
    const Json j = to_json(v_sequence(3));
    EXPECT_EQ(j["kind"], "v-sequence");
    ASSERT_EQ(j["coefficients"].size(), 4u);
    EXPECT_EQ(j["coefficients"][2]["num"], "3");
    EXPECT_EQ(j["coefficients"][2]["den"], "80");
    EXPECT_EQ(j["coefficients"][3]["n"], 3);
}

TEST(ToJson, SequenceRows)
{
    const Json exact = to_json(sequence_table("s-sequence", 1));
    EXPECT_EQ(exact[1]["num"], "3");
    EXPECT_EQ(exact[1]["den"], "4");
    const Json real = to_json(sequence_table("rhosigma-ratio", 1));
    EXPECT_TRUE(real[0].contains("value"));
    EXPECT_FALSE(real[0].contains("num"));
}

TEST(ToJson, VerifyReportSchema)
{
    const Json j = to_json(verify_case("G-TQ-A", 50, 3));
    for (const char* key : {"id", "status", "samples", "seed", "min_margin", "violations", "passed"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_TRUE(j["min_margin"].contains("value"));
    EXPECT_TRUE(j["min_margin"]["location"].contains("a"));
    EXPECT_EQ(j["status"], "theorem");
    EXPECT_EQ(verify_csv_fields(verify_case("G-TQ-A", 50, 3)).size(), kVerifyCsvHeader.size());

    const Json w = to_json(verify_case("W-KI", 1, 1));
    EXPECT_TRUE(w["min_margin"]["location"].contains("n"));
}

TEST(ToJson, SolverAndMonotonicity)
{
    const Json s = to_json(find_t0_delta0());
    EXPECT_TRUE(s["converged"].get<bool>());
    EXPECT_NEAR(s["location"].get<double>(), 2.7113555314, 1e-6);
    const Json m = to_json(monotonicity_scan(RatioFunction::r0(), log_grid(0.1, 10, 5)));
    EXPECT_EQ(m["shape"], "decreasing");
    EXPECT_EQ(m["values"].size(), 5u);
}
