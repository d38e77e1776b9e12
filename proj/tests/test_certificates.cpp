#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "bidio/certificates.hpp"

namespace cert = bidio::certificates;

TEST_CASE("the parity case registry is fixed") {
    const auto& cases = cert::parity_cases();
    REQUIRE(cases.size() == 9);
    const std::vector<std::string> ids = {"L3",    "K2",    "K3_II",
                                          "K3_III_contr", "K4_II", "K4_IV",
                                          "EQ16",  "EQ16i", "K3_13_odd"};
    for (std::size_t i = 0; i < ids.size(); ++i) {
        CHECK(cases[i].id == ids[i]);
        CHECK(!cases[i].equation.empty());
        CHECK(!cases[i].reason.empty());
    }
    CHECK(cases[0].free_variables == 1);
    CHECK(cases[6].free_variables == 2);
    CHECK(cases[7].free_variables == 2);
}

TEST_CASE("every parity case scans clean") {
    for (const auto& pc : cert::parity_cases()) {
        const auto result = cert::verify_parity_case(pc.id, 2000);
        CHECK(result.case_id == pc.id);
        CHECK(result.equation == pc.equation);
        CHECK(result.witness_count == 0);
        CHECK(result.witnesses.empty());
        CHECK(result.verified_range == 2000);
        CHECK(result.scanned > 0);
    }
}

TEST_CASE("two-variable scans cover the full triangular grid") {
    const auto eq16 = cert::verify_parity_case("EQ16", 300);
    CHECK(eq16.scanned == 44850);  // pairs d > b >= 1 up to 300
    const auto eq16i = cert::verify_parity_case("EQ16i", 300);
    CHECK(eq16i.scanned == 45150);  // pairs d >= b >= 1 up to 300
    CHECK(eq16.witness_count == 0);
    CHECK(eq16i.witness_count == 0);
}

TEST_CASE("scan preconditions are enforced") {
    CHECK_THROWS_AS(cert::verify_parity_case("NOPE", 100), std::invalid_argument);
    CHECK_THROWS_AS(cert::verify_parity_case("L3", 0), std::invalid_argument);
    CHECK_THROWS_AS(cert::verify_parity_case("L3", 3000000001ULL),
                    std::invalid_argument);
}

TEST_CASE("unknown ids name the known ones") {
    try {
        cert::verify_parity_case("EQ99", 10);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("EQ16") != std::string::npos);
        CHECK(what.find("L3") != std::string::npos);
    }
}

TEST_CASE("small-k nonexistence searches come back empty") {
    const auto k1 = cert::nonexistence_k12(1, 25);
    CHECK(k1.case_id == "K1_SEARCH");
    CHECK(k1.witness_count == 0);
    CHECK(k1.scanned == 2601);  // one anchor, (2 * 25 + 1)^2 third vertices
    CHECK(k1.verified_range == 25);
    const auto k2 = cert::nonexistence_k12(2, 25);
    CHECK(k2.case_id == "K2_SEARCH");
    CHECK(k2.witness_count == 0);
    CHECK_THROWS_AS(cert::nonexistence_k12(3, 25), std::invalid_argument);
    CHECK_THROWS_AS(cert::nonexistence_k12(1, 1), std::invalid_argument);
}
