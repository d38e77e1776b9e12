#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "bidio/exactmath.hpp"

using bidio::Int;
using bidio::Rational;
using bidio::u128;

TEST_CASE("isqrt floor behavior on known values") {
    CHECK(bidio::isqrt(0) == 0);
    CHECK(bidio::isqrt(1) == 1);
    CHECK(bidio::isqrt(2) == 1);
    CHECK(bidio::isqrt(3) == 1);
    CHECK(bidio::isqrt(4) == 2);
    CHECK(bidio::isqrt(2025) == 45);
    CHECK(bidio::isqrt(4900) == 70);
    CHECK(bidio::isqrt(4901) == 70);
    CHECK(bidio::isqrt(19600) == 140);
    CHECK_THROWS_AS(bidio::isqrt(-1), std::domain_error);
}

TEST_CASE("isqrt is exact far beyond 64 bits") {
    const Int big = Int("123456789012345678901234567890");
    const Int sq = big * big;
    CHECK(bidio::isqrt(sq) == big);
    CHECK(bidio::isqrt(sq - 1) == big - 1);
    CHECK(bidio::isqrt(sq + 1) == big);
}

TEST_CASE("exact_sqrt distinguishes squares from near misses") {
    CHECK(bidio::exact_sqrt(0).value() == 0);
    CHECK(bidio::exact_sqrt(4900).value() == 70);
    CHECK(!bidio::exact_sqrt(4901).has_value());
    CHECK(!bidio::exact_sqrt(2).has_value());
    CHECK(bidio::exact_sqrt(19600).value() == 140);
    const Int big = Int("987654321098765432109876543210");
    CHECK(bidio::exact_sqrt(big * big).value() == big);
    CHECK(!bidio::exact_sqrt(big * big + 1).has_value());
    CHECK_THROWS_AS(bidio::exact_sqrt(-4), std::domain_error);
}

TEST_CASE("is_perfect_square agrees with exact_sqrt on a dense range") {
    for (long n = 0; n <= 10000; ++n) {
        CHECK(bidio::is_perfect_square(n) == bidio::exact_sqrt(n).has_value());
    }
}

TEST_CASE("isqrt_u64 matches the arbitrary-precision version") {
    for (std::uint64_t n = 0; n <= 30000; ++n) {
        CHECK(bidio::isqrt_u64(n) == bidio::isqrt(Int(static_cast<unsigned long>(n))).get_ui());
    }
    const std::uint64_t top = UINT64_MAX;
    CHECK(bidio::isqrt_u64(top) == 4294967295ULL);
    CHECK(bidio::isqrt_u64(4294967295ULL * 4294967295ULL) == 4294967295ULL);
    CHECK(bidio::isqrt_u64(4294967295ULL * 4294967295ULL - 1) == 4294967294ULL);
}

TEST_CASE("is_square_u64 with residue prefilters is exact") {
    std::uint64_t root = 0;
    for (std::uint64_t n = 0; n <= 30000; ++n) {
        const bool expected = bidio::is_perfect_square(Int(static_cast<unsigned long>(n)));
        CHECK(bidio::is_square_u64(n, &root) == expected);
        if (expected) CHECK(root * root == n);
    }
    CHECK(bidio::is_square_u64(4294967295ULL * 4294967295ULL));
    CHECK(!bidio::is_square_u64(UINT64_MAX));
}

TEST_CASE("u128 square root handles values past 64 bits") {
    const u128 base = (u128(1) << 63) + 12345;
    const u128 sq = base * base;
    CHECK(bidio::isqrt_u128(sq) == base);
    CHECK(bidio::isqrt_u128(sq - 1) == base - 1);
    u128 root = 0;
    CHECK(bidio::is_square_u128(sq, &root));
    CHECK(root == base);
    CHECK(!bidio::is_square_u128(sq + 1));
    CHECK(!bidio::is_square_u128(sq - 1));
    CHECK(bidio::isqrt_u128(0) == 0);
    CHECK(bidio::isqrt_u128(3) == 1);
}

TEST_CASE("decimal conversions round-trip and reject junk") {
    CHECK(bidio::to_decimal(Int(0)) == "0");
    CHECK(bidio::to_decimal(Int(-17)) == "-17");
    const Int big = Int("340282366920938463463374607431768211456");
    CHECK(bidio::parse_decimal(bidio::to_decimal(big)) == big);
    CHECK(bidio::parse_decimal("-987654321987654321") == Int("-987654321987654321"));
    CHECK_THROWS_AS(bidio::parse_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(bidio::parse_decimal("-"), std::invalid_argument);
    CHECK_THROWS_AS(bidio::parse_decimal("12a"), std::invalid_argument);
    CHECK_THROWS_AS(bidio::parse_decimal("+5"), std::invalid_argument);
    CHECK_THROWS_AS(bidio::parse_decimal(" 5"), std::invalid_argument);
    CHECK_THROWS_AS(bidio::parse_decimal("1.5"), std::invalid_argument);
}

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0, 9));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational ordering and rendering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5, 13) < Rational(3, 5));
    CHECK(Rational(-7, 25) > Rational(-12, 37));
    CHECK(Rational(2, 1).str() == "2");
    CHECK(Rational(0, 3).str() == "0");
    CHECK(Rational(3, 5).str() == "3/5");
    CHECK(Rational(-7, 25).str() == "-7/25");
    CHECK(Rational(1, 2) <= Rational(1, 2));
    CHECK(Rational(1, 2) >= Rational(1, 2));
    CHECK(Rational(1, 2) != Rational(2, 3));
}
