#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

// Arbitrary-precision integers and exact rationals. Everything downstream
// (heights, squared distances, Pell solutions) runs through these; there is
// deliberately no floating point anywhere in the library, since the parity
// arguments the certificates rely on do not survive rounding.

namespace bidio {

using Int = mpz_class;
using u128 = unsigned __int128;

// Floor square root of n >= 0. Negative input throws std::domain_error.
Int isqrt(const Int& n);

// Root of n when n is a perfect square, empty otherwise. Same precondition.
std::optional<Int> exact_sqrt(const Int& n);

bool is_perfect_square(const Int& n);

// Scalar fast paths for bounded scan loops. Exact over the whole range of the
// argument type (digit-by-digit method, no division, no floating point).
std::uint64_t isqrt_u64(std::uint64_t n);
u128 isqrt_u128(u128 n);

// Perfect-square tests with quadratic-residue prefilters so the common
// (non-square) case costs a few table lookups. On success the root is stored
// through `root` when non-null.
bool is_square_u64(std::uint64_t n, std::uint64_t* root = nullptr);
bool is_square_u128(u128 n, u128* root = nullptr);

// Decimal-string conversions used by every file format; values routinely
// exceed 64 bits in deep family enumeration. parse_decimal accepts an
// optional leading '-' followed by digits, nothing else.
std::string to_decimal(const Int& n);
Int parse_decimal(const std::string& s);

// Exact rational, always in lowest terms with a positive denominator.
class Rational {
 public:
    Rational() : num_(0), den_(1) {}
    Rational(Int num, Int den);
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    // "3/5", "-7/25", "0", "2"
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
    Int num_;
    Int den_;
};

}  // namespace bidio
