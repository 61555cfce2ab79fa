#include <doctest.h>

#include "brute.hpp"
#include "ctree/errors.hpp"
#include "ctree/ladder.hpp"

using namespace ctree;

namespace {

std::vector<Nat> nodes_of(const CLadder& l) {
    std::vector<Nat> v;
    for (const auto& r : l.rungs) v.push_back(r.node);
    return v;
}

std::vector<int> kinds_of(const std::vector<KindStep>& ks) {
    std::vector<int> v;
    for (const auto& k : ks) v.push_back(code(k.kind));
    return v;
}

}  // namespace

TEST_CASE("generate_ladder examples") {
    auto l = generate_ladder(classify(3), 3);
    CHECK(nodes_of(l) == std::vector<Nat>{3, 13, 53, 213});
    std::vector<Nat> images;
    for (const auto& r : l.rungs) images.push_back(r.image);
    CHECK(images == std::vector<Nat>{10, 40, 160, 640});
    CHECK(l.length == 3);

    CHECK(nodes_of(generate_ladder(classify(1), 2)) == std::vector<Nat>{1, 5, 21});

    l = generate_ladder(classify(3), 0);
    CHECK(nodes_of(l) == std::vector<Nat>{3});
    CHECK(l.rungs[0].image == 10);

    CHECK_THROWS_AS(generate_ladder(classify(13), 2), DomainError);
}

TEST_CASE("ladder rungs obey the canonical relation and fall to one node") {
    for (unsigned long h = 1; h < 2000; h += 2) {
        const auto hub = classify(h);
        if (!hub.is_hub()) continue;
        const auto l = generate_ladder(hub, 12);
        const Nat bottom = odd_to_odd(h).next;
        for (std::size_t i = 0; i + 1 < l.rungs.size(); ++i) {
            REQUIRE(3 * l.rungs[i + 1].node + 1 == 4 * (3 * l.rungs[i].node + 1));
            REQUIRE(l.rungs[i + 1].image == 4 * l.rungs[i].image);
            REQUIRE(odd_to_odd(l.rungs[i + 1].node).next == bottom);
            REQUIRE(classify(l.rungs[i + 1].node).is_pump());
        }
        REQUIRE(ladder_hub(classify(l.rungs.back().node)).value == h);
    }
}

TEST_CASE("pump_kind_sequence examples") {
    auto ks = pump_kind_sequence(generate_ladder(classify(3), 5));
    CHECK(kinds_of(ks) == std::vector<int>{0, 2, 1, 0, 2, 1});
    CHECK(ks[0].character == 1);
    CHECK(ks[3].character == 5);

    CHECK(kinds_of(pump_kind_sequence(generate_ladder(classify(1), 3))) == std::vector<int>{2, 1, 0, 2});

    // 9, 37, 149, 597 classified by brute force
    ks = pump_kind_sequence(generate_ladder(classify(9), 3));
    std::vector<int> expected;
    for (brute::u64 v : {9ull, 37ull, 149ull, 597ull}) expected.push_back(brute::kind(v));
    CHECK(expected == std::vector<int>{0, 2, 1, 0});
    CHECK(kinds_of(ks) == expected);
    CHECK(ks[0].character == brute::character(9));
    CHECK(ks[0].character == 3);
}

TEST_CASE("pump kind and character periodicity over the first 1e4 hubs") {
    const int next_kind[] = {2, 0, 1};
    unsigned hubs = 0;
    for (unsigned long h = 1; hubs < 10'000; h += 2) {
        const auto hub = classify(h);
        if (!hub.is_hub()) continue;
        ++hubs;
        const auto ks = pump_kind_sequence(generate_ladder(hub, 100));
        std::optional<int> last_char;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (i > 0) REQUIRE(code(ks[i].kind) == next_kind[code(ks[i - 1].kind)]);
            if (ks[i].kind == NodeKind::Zero) {
                if (last_char) {
                    const int expected = *last_char == 1 ? 5 : *last_char == 5 ? 3 : 1;
                    REQUIRE(ks[i].character == expected);
                }
                last_char = ks[i].character;
            }
        }
    }
}

TEST_CASE("even_thread") {
    CHECK(even_thread(classify(3), 2).preimages == std::vector<Nat>{6, 12});
    CHECK(even_thread(classify(213), 2).preimages == std::vector<Nat>{426, 852});
    CHECK(even_thread(classify(21), 1).preimages == std::vector<Nat>{42});
    CHECK_THROWS_AS(even_thread(classify(5), 1), DomainError);

    const auto t = even_thread(classify(27), 10);
    for (const auto& e : t.preimages) {
        Nat v = e;
        while (!is_odd(v)) v = collatz_step(v);
        CHECK(v == 27);
    }
}
