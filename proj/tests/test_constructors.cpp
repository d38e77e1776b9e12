#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "bidio/constructors.hpp"
#include "bidio/exactmath.hpp"
#include "bidio/geometry.hpp"

using bidio::Int;
namespace cons = bidio::constructors;
namespace geo = bidio::geometry;
using geo::LatticePoint;

TEST_CASE("triangles use the odd and even leg formulas") {
    const auto k5 = cons::triangle_with_side(5);
    REQUIRE(k5.size() == 3);
    CHECK((k5[0] == LatticePoint{0, 0}));
    CHECK((k5[1] == LatticePoint{5, 0}));
    CHECK((k5[2] == LatticePoint{0, 12}));
    CHECK(geo::squared_distance(k5[1], k5[2]) == 169);

    const auto k4 = cons::triangle_with_side(4);
    CHECK((k4[2] == LatticePoint{0, 3}));
    const auto k3 = cons::triangle_with_side(3);
    CHECK((k3[2] == LatticePoint{0, 4}));

    const auto k1000 = cons::triangle_with_side(1000);
    CHECK((k1000[2] == LatticePoint{0, 249999}));
    CHECK(bidio::exact_sqrt(geo::squared_distance(k1000[1], k1000[2])).value() ==
          250001);
    const auto k999 = cons::triangle_with_side(999);
    CHECK((k999[2] == LatticePoint{0, 499000}));
    CHECK(bidio::exact_sqrt(geo::squared_distance(k999[1], k999[2])).value() == 499001);

    CHECK_THROWS_AS(cons::triangle_with_side(2), std::domain_error);
    CHECK_THROWS_AS(cons::triangle_with_side(0), std::domain_error);
}

TEST_CASE("triangle legs are long enough to be nondegenerate") {
    for (long k = 3; k <= 400; ++k) {
        const auto tri = cons::triangle_with_side(k);
        const Int w = tri[2].y;
        if (k % 2 == 1) {
            CHECK(w == (Int(k) * k - 1) / 2);
            CHECK(w >= 4);
        } else {
            CHECK(w == Int(k) * k / 4 - 1);
            CHECK(w >= 3);
        }
    }
}

TEST_CASE("rectangles default to the minimal admissible width") {
    const auto k3 = cons::rectangle_with_side(3);
    REQUIRE(k3.size() == 1);
    REQUIRE(k3[0].size() == 4);
    CHECK((k3[0][2] == LatticePoint{3, 4}));
    const auto k7 = cons::rectangle_with_side(7);
    CHECK((k7[0][2] == LatticePoint{7, 24}));
    CHECK(bidio::exact_sqrt(geo::squared_distance(k7[0][0], k7[0][2])).value() == 25);

    const std::map<long, long> minimal_widths = {
        {3, 4},  {4, 3},  {5, 12}, {6, 8},   {7, 24}, {8, 6},  {9, 12},
        {10, 24}, {11, 60}, {12, 5}, {13, 84}, {14, 48}, {15, 8}, {16, 12}};
    for (const auto& [k, w] : minimal_widths) {
        const auto rects = cons::rectangle_with_side(k);
        REQUIRE(rects.size() == 1);
        CHECK(rects[0][2].y == w);
    }
    CHECK_THROWS_AS(cons::rectangle_with_side(2), std::domain_error);
}

TEST_CASE("width enumeration lists every admissible width in order") {
    CHECK((cons::rectangle_widths(12, 40) == std::vector<Int>{5, 9, 16, 35}));
    CHECK(cons::rectangle_widths(3, 3).empty());
    CHECK((cons::rectangle_widths(3, 4) == std::vector<Int>{4}));
    const auto limited = cons::rectangle_with_side(12, Int(40));
    REQUIRE(limited.size() == 4);
    CHECK(limited[0][2].y == 5);
    CHECK(limited[3][2].y == 35);
    CHECK(cons::rectangle_with_side(3, Int(3)).empty());
}

TEST_CASE("the divisor construction matches a direct minimal-width scan") {
    for (long k = 3; k <= 200; ++k) {
        const auto rects = cons::rectangle_with_side(k);
        REQUIRE(rects.size() == 1);
        Int direct = 0;
        for (Int w = 1;; ++w) {
            if (bidio::is_perfect_square(Int(k) * k + w * w)) {
                direct = w;
                break;
            }
        }
        CHECK(rects[0][2].y == direct);
    }
}

TEST_CASE("constructed polygons certify with a length-k pair") {
    for (long k : {3, 4, 5, 12, 40, 41, 100, 101, 999, 1000}) {
        const auto tri = cons::triangle_with_side(k);
        const auto tri_report = geo::certify(tri, Int(k), geo::ConfigMode::polygon);
        CHECK(tri_report.is_diophantine);
        CHECK(!tri_report.pairs_with_length.empty());
        CHECK(tri_report.is_simple.value());

        const auto rects = cons::rectangle_with_side(k);
        const auto rect_report =
            geo::certify(rects.at(0), Int(k), geo::ConfigMode::polygon);
        CHECK(rect_report.is_diophantine);
        CHECK(!rect_report.pairs_with_length.empty());
        CHECK(rect_report.is_convex.value());
    }
}

TEST_CASE("huge side lengths stay exact") {
    const Int k("1000000000000000001");
    const auto tri = cons::triangle_with_side(k);
    const Int w = tri[2].y;
    CHECK(w == (k * k - 1) / 2);
    CHECK(bidio::exact_sqrt(geo::squared_distance(tri[1], tri[2])).value() ==
          (k * k + 1) / 2);
}
