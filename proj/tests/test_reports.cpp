#include <doctest.h>

#include "ctree/errors.hpp"
#include "ctree/reports.hpp"

using namespace ctree;

namespace {

// Symbol at position pos (0 = endpoint) of a rendered sequence cell, or -1.
int symbol_at(const std::string& cell, std::size_t pos) {
    const auto hat = cell.find('^');
    if (hat == std::string::npos || pos >= hat) return -1;
    return cell[pos] - '0';
}

}  // namespace

TEST_CASE("table 1 and 2 cells") {
    const auto t1 = table_1(16);
    CHECK(t1.rows.size() == 16);
    CHECK(t1.columns == std::vector<std::string>{"p", "preimage", "node", "pump"});
    CHECK(t1.cell(1, "preimage") == "3:0^{(1)}");
    CHECK(t1.cell(1, "node") == "5");
    CHECK(t1.cell(1, "pump") == "true");
    CHECK(t1.cell(2, "preimage") == "7:2");
    CHECK(t1.cell(3, "preimage") == "11:1");
    CHECK(t1.cell(9, "node") == "53");
    CHECK(t1.cell(9, "pump") == "true");
    CHECK(t1.deviations.empty());

    const auto t2 = table_2(16);
    CHECK(t2.cell(1, "preimage") == "1:2");
    CHECK(t2.cell(1, "node") == "1");
    CHECK(t2.cell(1, "pump") == "false");
    CHECK(t2.cell(2, "preimage") == "9:0^{(3)}");
    CHECK(t2.cell(3, "node") == "13");
    CHECK(t2.cell(3, "pump") == "true");
    CHECK(t2.deviations.empty());
}

TEST_CASE("pump tables") {
    const auto t3 = pump_table(1, 6);
    REQUIRE(t3.table_id);
    CHECK(*t3.table_id == 3);
    CHECK(t3.cell(1, "zero_node").empty());
    CHECK(t3.cell(1, "two_node") == "1*");
    CHECK(t3.cell(1, "two_sequence") == "222...");
    CHECK(t3.cell(2, "two_sequence") == "210^{75(1)}");
    CHECK(t3.cell(5, "one_sequence") == "1110^{26512143(5)}");
    CHECK(t3.deviations.size() == 2);

    const auto t4 = pump_table(3, 6);
    CHECK(*t4.table_id == 4);
    CHECK(t4.cell(1, "zero_node") == "3^{(1)}");
    CHECK(t4.cell(1, "two_sequence") == "21120^{9(3)}");
    CHECK(t4.cell(3, "one_node") == "218453");
    CHECK(t4.deviations.empty());  // the blank rows start at 7

    const auto other = pump_table(7, 3);
    CHECK_FALSE(other.table_id);
    CHECK(other.deviations.empty());
    CHECK_THROWS_AS(pump_table(5, 3), DomainError);
    CHECK_THROWS_AS(pump_table(2, 3), DomainError);
}

TEST_CASE("table 5") {
    const auto t = table_5(22);
    CHECK(t.cell(1, "zero_node") == "3^{(1)}");
    CHECK(t.cell(4, "zero_node") == "21^{(1)}");
    CHECK(t.cell(15, "two_node") == "349");
    CHECK(t.deviations.size() == 4);
    CHECK(table_5(9).deviations.empty());
}

TEST_CASE("table 5 counting periodicity") {
    // The symbol at position j depends only on m mod 3^j, and stepping m by
    // 3^(j-1) cycles it in a fixed order.
    const std::size_t rows = 243;
    const auto t = table_5(rows);
    for (const char* column : {"two_sequence", "one_sequence"}) {
        for (std::size_t pos = 1; pos <= 3; ++pos) {
            std::size_t period = 1;
            for (std::size_t i = 0; i < pos; ++i) period *= 3;
            for (std::size_t r = 1; r + period <= rows; ++r) {
                const int a = symbol_at(t.cell(r, column), pos);
                const int b = symbol_at(t.cell(r + period, column), pos);
                if (a >= 0 && b >= 0) REQUIRE(a == b);
            }
        }
        // position 1 steps through a cycle as m steps by 1
        for (std::size_t r = 1; r + 1 <= rows; ++r) {
            const int a = symbol_at(t.cell(r, column), 1);
            const int b = symbol_at(t.cell(r + 1, column), 1);
            REQUIRE(a >= 0);
            const int step = std::string(column) == "two_sequence" ? 1 : 2;
            REQUIRE(b == (a + step) % 3);
        }
    }
}

TEST_CASE("regeneration is byte-identical") {
    for (int id = 1; id <= 5; ++id) {
        CHECK(to_text(table_by_id(id, 10)) == to_text(table_by_id(id, 10)));
        CHECK(to_csv(table_by_id(id, 10)) == to_csv(table_by_id(id, 10)));
    }
    CHECK_THROWS_AS(table_by_id(6, 3), DomainError);
    CHECK_THROWS_AS(table_by_id(0, 3), DomainError);
}

TEST_CASE("csv layout") {
    const std::string csv = to_csv(table_1(2));
    CHECK(csv.rfind("p,preimage,node,pump\n", 0) == 0);
    CHECK(csv.find("0,3:0^{(1)},5,true\n") != std::string::npos);
}
