#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "bidio/exactmath.hpp"
#include "bidio/geometry.hpp"
#include "bidio/search.hpp"

using bidio::Int;
namespace geo = bidio::geometry;
namespace search = bidio::search;
using geo::LatticePoint;
using search::Arrangement;

namespace {

std::multiset<std::multiset<Int>> edge_sets(const search::SearchReport& report) {
    std::multiset<std::multiset<Int>> out;
    for (const auto& w : report.witnesses) {
        out.insert(std::multiset<Int>(w.edge_lengths.begin(), w.edge_lengths.end()));
    }
    return out;
}

std::set<std::vector<LatticePoint>> canonical_sets(const search::SearchReport& report) {
    std::set<std::vector<LatticePoint>> out;
    for (const auto& w : report.witnesses) out.insert(geo::canonical_form(w.vertices));
    return out;
}

}  // namespace

TEST_CASE("apex pair distances evaluate the four arrangements exactly") {
    CHECK(!search::apex_pair_distance({3, Arrangement::same_side, 0, 7}).has_value());
    const auto mirror3 = search::apex_pair_distance({3, Arrangement::opposite_side, 7, 7});
    REQUIRE(mirror3.has_value());
    CHECK(*mirror3 == 48);
    const auto mirror4 = search::apex_pair_distance({4, Arrangement::opposite_side, 5, 5});
    REQUIRE(mirror4.has_value());
    CHECK(*mirror4 == 24);
    // b = d on the same side is the isosceles trapezoid, separation 2b + k.
    const auto trapezoid = search::apex_pair_distance({3, Arrangement::same_side, 7, 7});
    REQUIRE(trapezoid.has_value());
    CHECK(*trapezoid == 17);
    CHECK_THROWS_AS(search::apex_pair_distance({3, Arrangement::same_side, 1, 7}),
                    std::domain_error);
}

TEST_CASE("triangle search over small radii finds exactly the family classes") {
    const auto k1 = search::brute_force_triangles(1, 30);
    CHECK(k1.witnesses.empty());
    const auto k2 = search::brute_force_triangles(2, 30);
    CHECK(k2.witnesses.empty());

    const auto k3 = search::brute_force_triangles(3, 30);
    REQUIRE(k3.witnesses.size() == 2);
    const std::multiset<std::multiset<Int>> k3_expected = {{3, 4, 5}, {3, 25, 26}};
    CHECK(edge_sets(k3) == k3_expected);

    const auto k4 = search::brute_force_triangles(4, 60);
    REQUIRE(k4.witnesses.size() == 3);
    const std::multiset<std::multiset<Int>> k4_expected = {
        {3, 4, 5}, {4, 13, 15}, {4, 51, 53}};
    CHECK(edge_sets(k4) == k4_expected);
}

TEST_CASE("triangle search uses oblique anchors when k is a hypotenuse") {
    const auto k5 = search::brute_force_triangles(5, 20);
    REQUIRE(k5.witnesses.size() == 4);
    const std::multiset<std::multiset<Int>> expected = {
        {3, 4, 5}, {5, 5, 6}, {5, 5, 8}, {5, 12, 13}};
    CHECK(edge_sets(k5) == expected);
    for (const auto& w : k5.witnesses) {
        CHECK(geo::certify(w.vertices).is_diophantine);
    }
}

TEST_CASE("triangle search is deterministic across thread counts") {
    const auto serial = search::brute_force_triangles(5, 20, 1);
    const auto parallel = search::brute_force_triangles(5, 20, 3);
    CHECK(serial.scanned == parallel.scanned);
    REQUIRE(serial.witnesses.size() == parallel.witnesses.size());
    for (std::size_t i = 0; i < serial.witnesses.size(); ++i) {
        CHECK(serial.witnesses[i].vertices == parallel.witnesses[i].vertices);
        CHECK(serial.witnesses[i].edge_lengths == parallel.witnesses[i].edge_lengths);
    }
}

TEST_CASE("triangle search preconditions") {
    CHECK_THROWS_AS(search::brute_force_triangles(0, 30), std::invalid_argument);
    CHECK_THROWS_AS(search::brute_force_triangles(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(search::brute_force_triangles(3, 2000000000), std::invalid_argument);
    CHECK_THROWS_AS(search::brute_force_triangles(3, 30, 0), std::invalid_argument);
}

TEST_CASE("apex pair scan reports no b != d hits and all mirrors") {
    const auto r3 = search::scan_apex_pairs(3, 10);
    CHECK(r3.distinct_hits.empty());
    REQUIRE(r3.mirror_hits.size() == 2);
    CHECK(r3.mirror_hits[0].b == 0);
    CHECK(r3.mirror_hits[0].c == 8);
    CHECK(r3.mirror_hits[1].b == 7);
    CHECK(r3.mirror_hits[1].c == 48);

    const auto r4 = search::scan_apex_pairs(4, 1000000);
    CHECK(r4.distinct_hits.empty());
    REQUIRE(r4.mirror_hits.size() == 11);
    CHECK(r4.mirror_hits[1].b == 5);
    CHECK(r4.mirror_hits[1].c == 24);
    CHECK(r4.mirror_hits[10].b == 978120);
    CHECK_THROWS_AS(search::scan_apex_pairs(3, 0), std::invalid_argument);
}

TEST_CASE("n-gon assembly on k = 3 finds the five quadrilateral classes") {
    const auto report = search::extend_to_ngon(3, 4, 100);
    REQUIRE(report.witnesses.size() == 5);
    const std::set<std::vector<LatticePoint>> expected = {
        {{0, 0}, {0, 3}, {4, 0}, {4, 3}},
        {{0, 0}, {0, 3}, {24, -7}, {24, 10}},
        {{0, 0}, {0, 3}, {140, -48}, {140, 51}},
        {{0, 0}, {0, 48}, {7, 24}, {10, 24}},
        {{0, 0}, {0, 280}, {48, 140}, {51, 140}},
    };
    CHECK(canonical_sets(report) == expected);
    for (const auto& w : report.witnesses) {
        CHECK(geo::is_simple_polygon(w.vertices));
        CHECK(geo::certify(w.vertices, Int(3)).is_diophantine);
        REQUIRE(w.edge_lengths.size() == 4);
    }
}

TEST_CASE("n-gon assembly on k = 4 finds the seven quadrilateral classes") {
    const auto report = search::extend_to_ngon(4, 4, 100);
    REQUIRE(report.witnesses.size() == 7);
    const std::set<std::vector<LatticePoint>> expected = {
        {{0, 0}, {0, 3}, {4, 0}, {4, 3}},
        {{0, 0}, {0, 4}, {12, -5}, {12, 9}},
        {{0, 0}, {0, 4}, {45, -24}, {45, 28}},
        {{0, 0}, {0, 4}, {168, -95}, {168, 99}},
        {{0, 0}, {0, 24}, {5, 12}, {9, 12}},
        {{0, 0}, {0, 90}, {24, 45}, {28, 45}},
        {{0, 0}, {0, 336}, {95, 168}, {99, 168}},
    };
    CHECK(canonical_sets(report) == expected);
}

TEST_CASE("no pentagon assembles from the early family members") {
    CHECK(search::extend_to_ngon(3, 5, 2000).witnesses.empty());
    CHECK(search::extend_to_ngon(4, 5, 2000).witnesses.empty());
    CHECK_THROWS_AS(search::extend_to_ngon(3, 3, 100), std::invalid_argument);
    CHECK_THROWS_AS(search::extend_to_ngon(5, 4, 100), std::invalid_argument);
}

TEST_CASE("search reports carry their parameters") {
    const auto report = search::extend_to_ngon(3, 4, 100);
    CHECK(report.kind == "ngon");
    bool saw_k = false;
    for (const auto& [key, value] : report.params) {
        if (key == "k") {
            saw_k = true;
            CHECK(value == "3");
        }
    }
    CHECK(saw_k);
    CHECK(report.scanned > 0);
}
