#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "altsum/output.hpp"

using namespace altsum;

TEST_CASE("records carry truncated fixed-point values") {
    SumResult r;
    r.value = {BigComplex(BigReal("0.69314718055994530941", 40))};
    r.d = 10;
    r.m = 6;
    r.n_or_c = 29;
    r.d1 = 24;
    r.bound = pow10(-11, 30) * 3;
    r.elapsed_ms = 1.4;
    OutputRecord rec = make_record(r, Engine::alt, 1);
    CHECK(rec.values.size() == 1);
    CHECK(rec.values[0].first == "0.6931471805"); // truncated, not rounded
    CHECK(rec.values[0].second == "0.0000000000");
    CHECK(rec.engine == "alt");
    CHECK(rec.digits == 10);
    CHECK(rec.peak_memory_bytes > 0);
}

TEST_CASE("json round-trips byte-identically") {
    SumResult r;
    r.value = {BigComplex(BigReal("1.25", 30), BigReal("-0.5", 30))};
    r.d = 4;
    r.m = 8;
    r.n_or_c = 17;
    r.d1 = 18;
    r.bound = pow10(-5, 30);
    OutputRecord rec = make_record(r, Engine::em, 2);
    std::string once = to_json_string(rec);
    std::string twice = nlohmann::json::parse(once).dump();
    CHECK(once == twice);

    auto parsed = nlohmann::json::parse(once);
    CHECK(parsed["engine"] == "em");
    CHECK(parsed["workers"] == 2);
    CHECK(parsed["values"][0]["re"] == "1.2500");
    CHECK(parsed["values"][0]["im"] == "-0.5000");
    CHECK(parsed["digits"] == 4);
}

TEST_CASE("text output prints complex parts only when present") {
    SumResult r;
    r.value = {BigComplex(BigReal("2.5", 30), BigReal("-1.25", 30))};
    r.d = 3;
    OutputRecord rec = make_record(r, Engine::alt, 1);
    std::string text = to_text(rec);
    CHECK(text.find("2.500 - 1.250i") != std::string::npos);

    SumResult s;
    s.value = {BigComplex(BigReal("2.5", 30))};
    s.d = 3;
    std::string text2 = to_text(make_record(s, Engine::alt, 1));
    CHECK(text2.find("value = 2.500\n") != std::string::npos);
    CHECK(text2.find("i") == std::string::npos);
}

TEST_CASE("validated runs accept stable results and reject drifting ones") {
    SummationPlan plan;
    plan.d = 10;
    plan.d1 = 24;
    plan.bound = pow10(-11, 30);

    SumResult stable = run_validated(plan, [&](long d1) {
        SumResult r;
        r.value = {BigComplex(BigReal(make_rational(2, 3), d1))};
        r.d = plan.d;
        r.d1 = d1;
        return r;
    });
    CHECK(stable.d1 == 24);

    long calls = 0;
    CHECK_THROWS_AS(run_validated(plan,
                                  [&](long d1) {
                                      SumResult r;
                                      // drifts with the precision: never stable
                                      r.value = {BigComplex(BigReal(calls++, d1))};
                                      r.d = plan.d;
                                      r.d1 = d1;
                                      return r;
                                  }),
                    accuracy_error);
    CHECK(calls == 4); // two attempts, two runs each
}
