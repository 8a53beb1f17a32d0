#include <doctest.h>

#include "cds/verify.hpp"

using namespace cds;

TEST_CASE("every suite passes at small n")
{
    VerifyOptions o;
    o.n = 3;
    o.samples = 60;
    for (auto name : suite_names()) {
        CAPTURE(name);
        const VerificationSuite s = run_suite(std::string(name), o);
        CHECK_FALSE(s.checks.empty());
        for (const auto& c : s.checks) {
            CAPTURE(c.tag);
            CAPTURE(c.detail);
            CHECK(c.passed);
        }
        CHECK(s.passed());
    }
}

TEST_CASE("suite lookup and limits")
{
    CHECK_THROWS_AS(run_suite("nonsense", {}), std::out_of_range);
    VerifyOptions o;
    o.n = 9;
    CHECK_THROWS_AS(run_suite("game-coherence", o), LimitExceeded);
    const json j = run_suite("examples", {});
    CHECK(j["passed"] == true);
}
