#include <doctest.h>

#include "brute.hpp"
#include "ctree/arith.hpp"
#include "ctree/errors.hpp"

using namespace ctree;

TEST_CASE("v2") {
    CHECK(v2(40) == 3);
    CHECK(v2(1) == 0);
    CHECK(v2(160) == 5);
    CHECK(v2(pow2(200)) == 200);
    CHECK_THROWS_AS(v2(0), DomainError);
}

TEST_CASE("collatz_step") {
    CHECK(collatz_step(3) == 10);
    CHECK(collatz_step(10) == 5);
    CHECK(collatz_step(1) == 4);
    CHECK_THROWS_AS(collatz_step(0), DomainError);
}

TEST_CASE("odd_to_odd") {
    auto s = odd_to_odd(3);
    CHECK(s.next == 5);
    CHECK(s.divisions == 1);
    s = odd_to_odd(17);
    CHECK(s.next == 13);
    CHECK(s.divisions == 2);
    s = odd_to_odd(9);
    CHECK(s.next == 7);
    CHECK(s.divisions == 2);
    s = odd_to_odd(1);
    CHECK(s.next == 1);
    CHECK(s.divisions == 2);
    CHECK_THROWS_AS(odd_to_odd(10), DomainError);
}

TEST_CASE("odd_to_odd agrees with step-by-step iteration") {
    for (unsigned long x = 3; x <= 100'000; x += 2) {
        const auto s = odd_to_odd(x);
        REQUIRE(pow2(s.divisions) * s.next == 3 * Nat(x) + 1);
        REQUIRE(is_odd(s.next));

        Nat y = x;
        for (unsigned i = 0; i <= s.divisions; ++i) y = collatz_step(y);
        REQUIRE(y == s.next);

        const auto b = brute::next_odd(x);
        REQUIRE(s.next == b.next);
        REQUIRE(s.divisions == b.halvings);
    }
}

TEST_CASE("arbitrary precision") {
    const Nat big = pow2(130) + 1;  // odd, beyond 128 bits
    const auto s = odd_to_odd(big);
    CHECK(pow2(s.divisions) * s.next == 3 * big + 1);
    CHECK(residue(Nat(-7), 8) == 1);
}

TEST_CASE("parse_nat") {
    CHECK(parse_nat("0") == 0);
    CHECK(parse_nat("123456789012345678901234567890") == Nat("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_nat(""), ParseError);
    CHECK_THROWS_AS(parse_nat("-3"), ParseError);
    CHECK_THROWS_AS(parse_nat("0x10"), ParseError);
    CHECK_THROWS_AS(parse_nat(" 7"), ParseError);
}
