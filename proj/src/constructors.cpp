#include "bidio/constructors.hpp"

#include <stdexcept>

namespace bidio::constructors {

namespace {

void check_k(const Int& k, const char* shape) {
    if (k < 3) {
        throw std::domain_error("no bidiophantine " + std::string(shape) +
                                " has a side of length " + k.get_str() +
                                "; the smallest is k = 3");
    }
}

std::vector<geometry::LatticePoint> rectangle_points(const Int& k, const Int& w) {
    return {{Int(0), Int(0)}, {k, Int(0)}, {k, w}, {Int(0), w}};
}

// Smallest w >= 1 with k^2 + w^2 a perfect square, through the divisor
// pairing e*f = k^2, w = (f - e)/2: w shrinks as e grows, so the first
// admissible divisor below k wins. For even k both divisors must be even or
// (f - e)/2 is not an integer.
Int minimal_width(const Int& k) {
    const Int ksq = k * k;
    for (Int e = k - 1; e >= 1; --e) {
        if (ksq % e != 0) continue;
        const Int f = ksq / e;
        if ((f - e) % 2 != 0) continue;
        const Int w = (f - e) / 2;
        if (w >= 1) return w;
    }
    throw std::logic_error("no rectangle width found for k = " + k.get_str());
}

}  // namespace

std::vector<geometry::LatticePoint> triangle_with_side(const Int& k) {
    check_k(k, "triangle");
    const Int w = (k % 2 != 0) ? Int((k * k - 1) / 2) : Int(k * k / 4 - 1);
    return {{Int(0), Int(0)}, {k, Int(0)}, {Int(0), w}};
}

std::vector<std::vector<geometry::LatticePoint>> rectangle_with_side(
    const Int& k, const std::optional<Int>& width_limit) {
    check_k(k, "rectangle");
    std::vector<std::vector<geometry::LatticePoint>> out;
    if (!width_limit) {
        out.push_back(rectangle_points(k, minimal_width(k)));
        return out;
    }
    for (const Int& w : rectangle_widths(k, *width_limit)) {
        out.push_back(rectangle_points(k, w));
    }
    return out;
}

std::vector<Int> rectangle_widths(const Int& k, const Int& width_limit) {
    check_k(k, "rectangle");
    if (width_limit < 0) {
        throw std::invalid_argument("rectangle_widths: width limit must be >= 0");
    }
    std::vector<Int> out;
    const Int ksq = k * k;
    for (Int w = 1; w <= width_limit; ++w) {
        if (is_perfect_square(ksq + w * w)) out.push_back(w);
    }
    return out;
}

}  // namespace bidio::constructors
