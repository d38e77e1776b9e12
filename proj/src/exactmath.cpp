#include "bidio/exactmath.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace bidio {

namespace {

template <std::size_t M>
constexpr std::array<bool, M> square_residues() {
    std::array<bool, M> t{};
    for (std::size_t i = 0; i < M; ++i) t[i * i % M] = true;
    return t;
}

constexpr auto kSq64 = square_residues<64>();
constexpr auto kSq63 = square_residues<63>();
constexpr auto kSq65 = square_residues<65>();
constexpr auto kSq11 = square_residues<11>();

// n mod m without going through the slow 128/64 division path.
inline std::uint32_t mod_small(u128 n, std::uint32_t m) {
    const std::uint64_t lo = static_cast<std::uint64_t>(n);
    const std::uint64_t hi = static_cast<std::uint64_t>(n >> 64);
    // 2^64 mod m folds the high word into the low residue.
    const std::uint64_t fold = ((~std::uint64_t(0)) % m + 1) % m;
    return static_cast<std::uint32_t>((lo % m + (hi % m) * fold) % m);
}

}  // namespace

Int isqrt(const Int& n) {
    if (n < 0) {
        throw std::domain_error("isqrt: negative input " + n.get_str());
    }
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) {
        throw std::domain_error("exact_sqrt: negative input " + n.get_str());
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    std::uint64_t r = 0;
    std::uint64_t bit = std::uint64_t(1) << 62;
    while (bit > n) bit >>= 2;
    while (bit != 0) {
        if (n >= r + bit) {
            n -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

u128 isqrt_u128(u128 n) {
    if (n <= ~std::uint64_t(0)) return isqrt_u64(static_cast<std::uint64_t>(n));
    u128 r = 0;
    u128 bit = u128(1) << 126;
    while (bit > n) bit >>= 2;
    while (bit != 0) {
        if (n >= r + bit) {
            n -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

bool is_square_u64(std::uint64_t n, std::uint64_t* root) {
    if (!kSq64[n & 63]) return false;
    if (!kSq63[n % 63]) return false;
    if (!kSq65[n % 65]) return false;
    if (!kSq11[n % 11]) return false;
    const std::uint64_t r = isqrt_u64(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

bool is_square_u128(u128 n, u128* root) {
    if (n <= ~std::uint64_t(0)) {
        std::uint64_t r64 = 0;
        if (!is_square_u64(static_cast<std::uint64_t>(n), &r64)) return false;
        if (root) *root = r64;
        return true;
    }
    if (!kSq64[static_cast<std::size_t>(n & 63)]) return false;
    if (!kSq63[mod_small(n, 63)]) return false;
    if (!kSq65[mod_small(n, 65)]) return false;
    if (!kSq11[mod_small(n, 11)]) return false;
    const u128 r = isqrt_u128(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

std::string to_decimal(const Int& n) { return n.get_str(); }

Int parse_decimal(const std::string& s) {
    std::size_t i = 0;
    if (!s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) {
        throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') {
            throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
        }
    }
    return Int(s, 10);
}

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

}  // namespace bidio
