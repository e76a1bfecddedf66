#include <catch2/catch_amalgamated.hpp>

#include <qtcat/json_io.hpp>

using namespace qtcat;

TEST_CASE("json shapes") {
    SECTION("partition and dyck sequence are plain arrays") {
        CHECK(to_json(Partition({3, 1})).dump() == "[3,1]");
        CHECK(to_json(DyckSequence({0, 1, 0})).dump() == "[0,1,0]");
        CHECK(to_json(Partition()).dump() == "[]");
    }

    SECTION("diagram is an array of [p, q] pairs") {
        CHECK(to_json(LatticeDiagram({{0, 0}, {2, 1}})).dump() == "[[0,0],[2,1]]");
    }

    SECTION("alternant carries leading term first with a/b coefficients") {
        Alternant f = term(LatticeDiagram({{0, 0}, {2, 1}}), Rat(1, 2));
        f += term(LatticeDiagram({{2, 0}, {0, 1}}), -3);
        Json j = to_json(f);
        REQUIRE(j.size() == 2);
        CHECK(j[0]["diagram"].dump() == "[[0,0],[2,1]]");
        CHECK(j[0]["coeff"] == "1/2");
        CHECK(j[1]["coeff"] == "-3/1");
    }

    SECTION("bivariate coefficients are decimal strings") {
        BivariatePolynomial p;
        p.add(2, 1, 7);
        Json j = to_json(p);
        REQUIRE(j.size() == 1);
        CHECK(j[0]["q"] == 2);
        CHECK(j[0]["t"] == 1);
        CHECK(j[0]["coeff"] == "7");
    }

    SECTION("column serializes decreasing") {
        CHECK(to_json(ColumnSpec::from_decreasing({5, 3, 1})).dump() == "[5,3,1]");
    }

    SECTION("tableau rows are bottom-up and round-trip") {
        Tableau t({{1, 2, 7, 7}, {3, 4}});
        Json j = to_json(t);
        CHECK(j.dump() == R"({"rows":[[1,2,7,7],[3,4]]})");
        CHECK(tableau_from_json(j) == t);
        CHECK(tableau_from_json(to_json(Tableau())) == Tableau());
        CHECK_THROWS_AS(tableau_from_json(Json::array()), std::invalid_argument);
    }

    SECTION("basis report carries the component header and element fields") {
        auto elements = basis_for(5, 4, 2);
        Json j = basis_report(5, 4, 2, elements, dim_A(5, 4, 2));
        CHECK(j["n"] == 5);
        CHECK(j["k"] == 4);
        CHECK(j["l"] == 2);
        CHECK(j["dim"] == "2");
        REQUIRE(j["elements"].size() == 2);
        for (const auto& e : j["elements"]) {
            CHECK(e.contains("lambda"));
            CHECK(e.contains("tableau"));
            CHECK(e.contains("leading_diagram"));
            CHECK(e.contains("term_count"));
        }
    }
}
