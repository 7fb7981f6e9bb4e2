#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "bgk/groups.hpp"

using namespace bgk;

TEST_CASE("classical family tables") {
    GroupType su2 = lookup_group("SU(2)");
    CHECK(su2.entries == std::vector<int>{2});
    CHECK(su2.dim == 3);

    CHECK(lookup_group("SU(5)").entries == std::vector<int>{2, 3, 4, 5});
    CHECK(lookup_group("Sp(1)").entries == std::vector<int>{2});
    CHECK(lookup_group("Sp(1)").dim == 3);
    CHECK(lookup_group("Sp(2)").entries == std::vector<int>{2, 4});
    CHECK(lookup_group("Sp(2)").dim == 10);
    CHECK(lookup_group("Spin(7)").entries == std::vector<int>{2, 4, 6});
    CHECK(lookup_group("Spin(7)").dim == 21);
    CHECK(lookup_group("Spin(9)").entries == std::vector<int>{2, 4, 6, 8});
    CHECK(lookup_group("Spin(11)").entries == std::vector<int>{2, 4, 6, 8, 10});

    // Spin(2m) keeps the duplicate entry m when m is even
    CHECK(lookup_group("Spin(8)").entries == std::vector<int>{2, 4, 4, 6});
    CHECK(lookup_group("Spin(8)").dim == 28);
    CHECK(lookup_group("Spin(10)").entries == std::vector<int>{2, 4, 5, 6, 8});
    CHECK(lookup_group("Spin(12)").entries == std::vector<int>{2, 4, 6, 6, 8, 10});
    CHECK(lookup_group("Spin(16)").entries == std::vector<int>{2, 4, 6, 8, 8, 10, 12, 14});
}

TEST_CASE("low spin aliases") {
    CHECK(lookup_group("Spin(3)") == lookup_group("SU(2)"));
    CHECK(lookup_group("Spin(5)") == lookup_group("Sp(2)"));
    CHECK(lookup_group("Spin(6)") == lookup_group("SU(4)"));
    CHECK_THROWS_AS(lookup_group("Spin(4)"), std::invalid_argument);  // not simple
    CHECK_THROWS_AS(lookup_group("Spin(2)"), std::invalid_argument);
    CHECK_THROWS_AS(lookup_group("SU(1)"), std::invalid_argument);
    CHECK_THROWS_AS(lookup_group("Sp(0)"), std::invalid_argument);
}

TEST_CASE("exceptional tables") {
    CHECK(lookup_group("G2").entries == std::vector<int>{2, 6});
    CHECK(lookup_group("G2").dim == 14);
    CHECK(lookup_group("F4").entries == std::vector<int>{2, 6, 8, 12});
    CHECK(lookup_group("F4").dim == 52);
    CHECK(lookup_group("E6").entries == std::vector<int>{2, 5, 6, 8, 9, 12});
    CHECK(lookup_group("E6").dim == 78);
    CHECK(lookup_group("E7").entries == std::vector<int>{2, 6, 8, 10, 12, 14, 18});
    CHECK(lookup_group("E7").dim == 133);
    CHECK(lookup_group("E8").entries == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
    CHECK(lookup_group("E8").dim == 248);
}

TEST_CASE("dimension identity certifies every table row") {
    for (int n = 2; n <= 12; ++n)
        CHECK(dimension_check(lookup_group("SU(" + std::to_string(n) + ")")));
    for (int n = 1; n <= 8; ++n)
        CHECK(dimension_check(lookup_group("Sp(" + std::to_string(n) + ")")));
    for (int n : {3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16})
        CHECK(dimension_check(lookup_group("Spin(" + std::to_string(n) + ")")));
    for (const char* name : {"G2", "F4", "E6", "E7", "E8"})
        CHECK(dimension_check(lookup_group(name)));

    CHECK_FALSE(dimension_check(GroupType{{2, 3}, "", 9}));  // sum is 8
    CHECK_THROWS_AS(dimension_check(GroupType{{2, 3}, "", std::nullopt}),
                    std::invalid_argument);
}

TEST_CASE("parse catalog names") {
    CHECK(parse_group_spec("SU(3)").entries == std::vector<int>{2, 3});
    CHECK(parse_group_spec("su(5)") == lookup_group("SU(5)"));
    CHECK(parse_group_spec(" Spin(10) ") == lookup_group("Spin(10)"));
    CHECK(parse_group_spec("e8") == lookup_group("E8"));
    CHECK(parse_group_spec("E8") == lookup_group("E8"));
    CHECK(parse_group_spec("g2") == lookup_group("G2"));
    CHECK(parse_group_spec("sp(3)") == lookup_group("Sp(3)"));
    CHECK(parse_group_spec("su( 4 )") == lookup_group("SU(4)"));
}

TEST_CASE("parse type literals") {
    GroupType t = parse_group_spec("type:2,6");
    CHECK(t.entries == std::vector<int>{2, 6});
    CHECK(t.name.empty());
    CHECK_FALSE(t.dim.has_value());
    CHECK(t.display() == "type:{2,6}");

    CHECK(parse_group_spec("type:6,2,4").entries == std::vector<int>{2, 4, 6});  // sorted
    CHECK(parse_group_spec("type:4,4").entries == std::vector<int>{4, 4});       // dups kept
    CHECK(parse_group_spec("type: 2 , 4 ").entries == std::vector<int>{2, 4});

    GroupType d = parse_group_spec("type:2,4@dim=10");
    CHECK(d.dim == 10);
    CHECK(dimension_check(d));
    CHECK_FALSE(dimension_check(parse_group_spec("type:2,3@dim=9")));
}

TEST_CASE("parse errors carry positions") {
    for (const char* bad : {"", "su(", "su", "su(2", "su(2)x", "type:", "type:1,3",
                            "type:2,", "type:2@dim=", "xyz", "su(x)", "(2)", "type:2,4,"}) {
        CHECK_THROWS_AS(parse_group_spec(bad), std::invalid_argument);
    }
    try {
        parse_group_spec("type:1,3");
        FAIL("expected a syntax error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
        CHECK(std::string(e.what()).find("below 2") != std::string::npos);
    }
    CHECK_THROWS_AS(lookup_group("Q5"), std::invalid_argument);
    CHECK_THROWS_AS(lookup_group("SU(999999999999)"), std::invalid_argument);
}

TEST_CASE("display and helpers") {
    CHECK(lookup_group("SU(5)").display() == "SU(5)");
    CHECK(lookup_group("E8").rank() == 8);
    CHECK(lookup_group("E8").max_entry() == 30);
    CHECK(parse_group_spec("type:2,4,6").display() == "type:{2,4,6}");
}
