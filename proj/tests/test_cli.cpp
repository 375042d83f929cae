#include "doctest.h"

#include "qleg/cli.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace qleg::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "qleg");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string strip(std::string s)
{
    while (!s.empty() && s.back() == '\n')
        s.pop_back();
    return s;
}

} // namespace

TEST_CASE("eval examples")
{
    const Outcome o = invoke({"eval", "--k", "1", "--l", "0", "--x", "0"});
    CHECK(o.code == kExitOk);
    CHECK(strip(o.out) == R"({"re":-1.0,"im":0.0})");
    CHECK(o.err.empty());

    const json j = json::parse(invoke({"eval", "--k", "1", "--l", "0", "--x", "1", "--hobson"}).out);
    CHECK(j["re"].get<double>() == 0.0);
    CHECK(j["im"].get<double>() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));

    CHECK(strip(invoke({"eval", "--k", "2", "--l", "0", "--x", "1", "--format", "text"}).out) == "0+1i");
    CHECK(invoke({"eval", "--k", "2", "--l", "0", "--x", "1", "--format", "csv"}).out == "re,im\n0,1\n");
}

TEST_CASE("poly reports integer coefficients as strings")
{
    const json j = json::parse(invoke({"poly", "--k", "3", "--l", "0"}).out);
    CHECK(j["sigma"] == 0);
    CHECK(j["degree"] == 2);
    CHECK(j["coefficients"] == json::array({"-2", "0", "6"}));
    CHECK_FALSE(j.contains("a0"));

    const json b = json::parse(invoke({"poly", "--k", "21", "--l", "20"}).out);
    // (-1)^21 2^20 20!
    CHECK(b["a0"] == "-2551082656125828464640000");
    CHECK(b["coefficients"] == json::array({"-2551082656125828464640000"}));
}

TEST_CASE("a0 example")
{
    const Outcome o = invoke({"a0", "--l", "2"});
    CHECK(o.code == kExitOk);
    const json j = json::parse(o.out);
    CHECK(j["closed"] == "-8");
    CHECK(j["sum"] == "-8");
    CHECK(j["equal"] == true);
}

TEST_CASE("gram example")
{
    const Outcome o = invoke({"gram", "--k", "2", "--tol", "1e-10"});
    REQUIRE(o.code == kExitOk);
    const json j = json::parse(o.out);
    const double two_pi = 2 * std::numbers::pi;
    for (const auto& e : j["entries"]) {
        const int l = e["l"], lp = e["lp"];
        const double re = e["value"]["re"];
        if (l != lp)
            CHECK(std::abs(re) < 1e-8);
        else
            CHECK(re == doctest::Approx(l == 0 ? -two_pi : two_pi).epsilon(1e-10));
    }
    CHECK(j["entries"][0]["expected_pi_coefficient"] == "-2");
    CHECK(j["converged"] == true);

    const std::string csv = invoke({"gram", "--k", "2", "--tol", "1e-10", "--format", "csv"}).out;
    CHECK(csv.rfind("l,lp,re,im,expected_re,deviation\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("integrate and asym")
{
    const json i = json::parse(invoke({"integrate", "--k", "3", "--l", "1", "--lp", "1", "--tol", "1e-10"}).out);
    CHECK(i["value"]["re"].get<double>() == doctest::Approx(-8 * std::numbers::pi).epsilon(1e-10));
    CHECK(i["converged"] == true);
    CHECK(i["expected_pi_coefficient"] == "-8");

    const json a = json::parse(invoke({"asym", "--k", "1", "--l", "0", "--x", "10", "--terms", "20"}).out);
    CHECK(a["value"]["re"].get<double>() == doctest::Approx(-1 / std::sqrt(101.0)).epsilon(1e-12));
    CHECK(a["terms_used"].get<int>() <= 20);
    CHECK(a.contains("truncation_estimate"));
}

TEST_CASE("exit codes")
{
    CHECK(invoke({"eval", "--k", "1"}).code == kExitUsage);
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"bogus"}).code == kExitUsage);
    CHECK(invoke({"eval", "--k", "1", "--l", "0", "--x", "0", "--format", "xml"}).code == kExitUsage);
    CHECK(invoke({"eval", "--k", "1", "--l", "0.5", "--x", "1"}).code == kExitUsage);
    CHECK(invoke({"verify", "--suite", "some"}).code == kExitUsage);
    CHECK(invoke({"--help"}).code == kExitOk);

    const Outcome bad_index = invoke({"eval", "--k", "1", "--l", "1", "--x", "0"});
    CHECK(bad_index.code == kExitFailure);
    CHECK(bad_index.err.rfind("error: ", 0) == 0);
    CHECK(bad_index.out.empty());

    CHECK(invoke({"eval", "--k", "1", "--l", "0", "--x", "0", "--hobson"}).code == kExitFailure);
    CHECK(invoke({"asym", "--k", "1", "--l", "-0.5", "--x", "10"}).code == kExitFailure);
    CHECK(invoke({"gram", "--k", "11"}).code == kExitFailure);
}

TEST_CASE("verify exact suite passes")
{
    const Outcome o = invoke({"verify", "--suite", "exact"});
    CHECK(o.code == kExitOk);
    const json j = json::parse(o.out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == 6);
    CHECK(o.err.empty());
}

TEST_CASE("JSON output is deterministic and round-trips")
{
    const std::vector<std::vector<std::string>> cases{
        {"eval", "--k", "5", "--l", "2", "--x", "0.3"},
        {"eval", "--k", "4", "--l", "0", "--x", "-7.25", "--hobson"},
        {"poly", "--k", "12", "--l", "3"},
        {"a0", "--l", "30"},
        {"gram", "--k", "4", "--tol", "1e-10"},
        {"integrate", "--k", "4", "--l", "0", "--lp", "2"},
        {"asym", "--k", "2", "--l", "-0.25", "--x", "-40"},
    };
    for (const auto& args : cases) {
        const Outcome first = invoke(args), second = invoke(args);
        CAPTURE(args.front());
        CHECK(first.code == kExitOk);
        CHECK(first.out == second.out);
        const std::string text = strip(first.out);
        CHECK(nlohmann::ordered_json::parse(text).dump() == text);
    }
}

TEST_CASE("gram output does not depend on --threads")
{
    CHECK(invoke({"gram", "--k", "6", "--threads", "1"}).out == invoke({"gram", "--k", "6", "--threads", "3"}).out);
}
