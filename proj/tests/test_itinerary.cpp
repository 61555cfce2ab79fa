#include <doctest.h>

#include "brute.hpp"
#include "ctree/errors.hpp"
#include "ctree/itinerary.hpp"

using namespace ctree;

namespace {

std::vector<Nat> values(const PrimitiveItinerary& it) {
    std::vector<Nat> v;
    for (const auto& n : it.nodes) v.push_back(n.value);
    return v;
}

PrimitiveItinerary backward(unsigned long v) {
    return std::get<PrimitiveItinerary>(primitive_backward(classify(v)));
}

}  // namespace

TEST_CASE("primitive_forward examples") {
    auto it = primitive_forward(classify(15));
    CHECK(values(it) == std::vector<Nat>{15, 23, 35, 53});
    CHECK(chronological(it) == "0111");
    CHECK(it.divisors == std::vector<unsigned>{2, 2, 2});

    it = primitive_forward(classify(9));
    CHECK(values(it) == std::vector<Nat>{9, 7, 11, 17, 13});
    CHECK(chronological(it) == "02112");
    CHECK(it.divisors == std::vector<unsigned>{4, 2, 2, 4});

    it = primitive_forward(classify(21));
    CHECK(values(it) == std::vector<Nat>{21});
    CHECK(chronological(it) == "0");
    CHECK(it.length() == 1);

    it = primitive_forward(classify(33));
    CHECK(values(it) == std::vector<Nat>{33, 25, 19, 29});
    CHECK(chronological(it) == "0221");

    // 3:0 ->2 5:1 and 81:0 ->4 61:2 have length two
    CHECK(primitive_forward(classify(3)).length() == 2);
    CHECK(values(primitive_forward(classify(81))) == std::vector<Nat>{81, 61});

    CHECK_THROWS_AS(primitive_forward(classify(13)), DomainError);
}

TEST_CASE("primitive_forward budget") {
    // 57 -> 43 -> 65 -> 49 -> 37 needs four steps
    CHECK_THROWS_AS(primitive_forward(classify(57), 3), ResourceError);
    CHECK(primitive_forward(classify(57), 4).length() == 5);
}

TEST_CASE("primitive_backward examples") {
    auto it = backward(13);
    CHECK(it.start().value == 9);
    CHECK(it.start().character == 3);
    CHECK(render(it).text == "21120");
    CHECK(render(it).str() == "21120^{9(3)}");

    it = backward(53);
    CHECK(it.start().value == 15);
    CHECK(render(it).str() == "1110^{15(5)}");

    CHECK(render(backward(85)).str() == "210^{75(1)}");

    CHECK(std::holds_alternative<TrivialCycle>(primitive_backward(classify(1))));

    // a 0-node is its own length-one trace
    CHECK(values(backward(27)) == std::vector<Nat>{27});

    CHECK_THROWS_AS(primitive_backward(classify(13), 2), ResourceError);
}

TEST_CASE("render") {
    CHECK(render(primitive_forward(classify(9))).str() == "21120^{9(3)}");
    CHECK(render(primitive_forward(classify(15))).str() == "1110^{15(5)}");
    CHECK(render(primitive_forward(classify(21))).str() == "0^{21(1)}");
}

TEST_CASE("forward itinerary matches brute force on 0-nodes") {
    for (brute::u64 z = 3; z < 60'000; z += 6) {
        const auto it = primitive_forward(classify(z));
        const auto b = brute::forward_itinerary(z);
        REQUIRE(it.length() == b.size());
        for (std::size_t i = 0; i < b.size(); ++i) REQUIRE(it.nodes[i].value == b[i]);
        REQUIRE(render(it).text == brute::symbols_endpoint_first(b));
    }
}

TEST_CASE("itinerary invariants and step divisor law") {
    for (unsigned long z = 3; z < 60'000; z += 6) {
        const auto it = primitive_forward(classify(z));
        REQUIRE(it.symbols.front() == NodeKind::Zero);
        REQUIRE(it.end().is_pump());
        for (std::size_t i = 0; i + 1 < it.length(); ++i) {
            REQUIRE(it.nodes[i].is_hub());
            if (i > 0) REQUIRE(it.nodes[i].kind != NodeKind::Zero);
            const auto r = residue(it.nodes[i].value, 8);
            REQUIRE(it.divisors[i] == (r == 1 ? 4u : 2u));
            REQUIRE(it.divisors[i] * it.nodes[i + 1].value == 3 * it.nodes[i].value + 1);
            REQUIRE((it.divisors[i] == 2) == (it.nodes[i + 1].kind == NodeKind::One));
        }
    }
}

TEST_CASE("backward/forward round trip for pumps up to 1e5") {
    unsigned max_depth = 0;
    for (unsigned long v = 5; v <= 100'000; v += 8) {  // v = 5 mod 8
        const auto node = classify(v);
        const auto back = std::get<PrimitiveItinerary>(primitive_backward(node, 1000));
        max_depth = std::max<unsigned>(max_depth, static_cast<unsigned>(back.length()));
        const auto fwd = primitive_forward(back.start());
        REQUIRE(values(fwd) == values(back));
        REQUIRE(fwd.divisors == back.divisors);
    }
    CHECK(max_depth < 1000);
}
