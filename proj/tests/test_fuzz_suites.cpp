#include "initforms/fuzz.hpp"

#include <doctest.h>

using namespace initforms;

namespace {

fuzz::SuiteResult run(const char* name, int count) {
    return fuzz::run_suite(name, 0x5eed0001u, count);
}

}  // namespace

TEST_CASE("every property suite is clean at unit scale") {
    for (const std::string& name : fuzz::suite_names()) {
        CAPTURE(name);
        fuzz::SuiteResult r = fuzz::run_suite(name, 0x5eed0001u, 40);
        CAPTURE(r.notes.empty() ? "" : r.notes.front());
        CHECK(r.failures == 0);
    }
}

TEST_CASE("canonical text form is a fixed point at full scale") {
    fuzz::SuiteResult r = run("canonical-form", 1000);
    CHECK(r.count == 1000);
    CHECK(r.failures == 0);
}

TEST_CASE("sum-initial exercises both classifications") {
    fuzz::SuiteResult r = run("sum-initial", 200);
    CHECK(r.failures == 0);
    CHECK(r.counters["verified"] > 0);
    CHECK(r.counters["hypothesis_fails"] > 0);
}

TEST_CASE("coaction mutants split across both rejection classes") {
    fuzz::SuiteResult r = run("coaction-mutants", 20);
    CHECK(r.failures == 0);
    CHECK(r.counters["counit_rejected"] == 10);
    CHECK(r.counters["coassoc_rejected"] == 10);
}

TEST_CASE("prop23 sees nonzero twists") {
    fuzz::SuiteResult r = run("prop23", 100);
    CHECK(r.failures == 0);
    CHECK(r.counters["verified"] > 0);
}

TEST_CASE("divide-soundness hits both outcomes") {
    fuzz::SuiteResult r = run("divide-soundness", 120);
    CHECK(r.failures == 0);
    CHECK(r.counters["divisible"] > 0);
    CHECK(r.counters["not_divisible"] > 0);
}

TEST_CASE("suites are deterministic given the seed") {
    fuzz::SuiteResult a = fuzz::run_suite("product-law", 99, 50);
    fuzz::SuiteResult b = fuzz::run_suite("product-law", 99, 50);
    CHECK(a.failures == b.failures);
    CHECK(a.counters == b.counters);
    CHECK(a.notes == b.notes);
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(fuzz::run_suite("no-such-suite", 1, 1), Error);
}
