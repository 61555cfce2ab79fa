#include <doctest.h>

#include "ctree/errors.hpp"
#include "ctree/oracle.hpp"

using namespace ctree;

TEST_CASE("orbit") {
    auto o = orbit(1);
    CHECK(o.values == std::vector<Nat>{1, 4, 2, 1});
    CHECK(o.reached_one);

    o = orbit(3);
    CHECK(o.values == std::vector<Nat>{3, 10, 5, 16, 8, 4, 2, 1});
    CHECK(o.steps == 7);

    o = orbit(27);
    CHECK(o.steps == 111);
    CHECK(*std::max_element(o.values.begin(), o.values.end()) == 9232);

    o = orbit(27, 50);
    CHECK_FALSE(o.reached_one);
    CHECK(o.steps == 50);
    CHECK(o.values.size() == 51);
    CHECK_THROWS_AS(orbit(0), DomainError);
}

TEST_CASE("check names round-trip") {
    for (Check c : all_checks()) {
        CHECK(parse_check(check_name(c)) == c);
    }
    CHECK(all_checks().size() == 7);
    CHECK(check_name(Check::CanonicalRelation) == "canonical-relation");
    CHECK_THROWS_AS(parse_check("collatz"), ParseError);
}

TEST_CASE("small sweeps") {
    auto r = sweep(3, 100, {Check::CanonicalRelation});
    CHECK(r.passed());
    CHECK(r.checks_run.at("canonical-relation") == 49);
    CHECK(r.trivial_cycle_excluded.empty());

    r = sweep(1, 2, std::set<Check>(all_checks().begin(), all_checks().end()));
    CHECK(r.passed());
    CHECK(r.trivial_cycle_excluded == std::vector<Nat>{1});

    r = sweep(1, 4001, std::set<Check>(all_checks().begin(), all_checks().end()));
    CHECK(r.passed());
    CHECK(r.checks_run.at("classification") == 2000);
    CHECK(r.checks_run.at("primitive-decomposition") == 1999);
}

TEST_CASE("invalid ranges") {
    CHECK_THROWS_AS(sweep(10, 10, {Check::Classification}), DomainError);
    CHECK_THROWS_AS(sweep(10, 5, {Check::Classification}), DomainError);
    CHECK_THROWS_AS(sweep(0, 5, {Check::Classification}), DomainError);
}

TEST_CASE("partitioning does not change the report") {
    const std::set<Check> all(all_checks().begin(), all_checks().end());
    const auto one = sweep(1, 20001, all, {.partitions = 1});
    for (unsigned parts : {2u, 3u, 7u, 64u}) {
        const auto many = sweep(1, 20001, all, {.partitions = parts});
        CHECK(many.checks_run == one.checks_run);
        CHECK(many.failures.size() == one.failures.size());
        CHECK(many.trivial_cycle_excluded == one.trivial_cycle_excluded);
    }
}

TEST_CASE("budget exhaustion is reported as a failure") {
    const auto r = sweep(27, 29, {Check::PrimitiveDecomposition}, {.budget = 10});
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].value == 27);
    CHECK(r.failures[0].check == "orbit");
}
