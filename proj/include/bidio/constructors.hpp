#pragma once

#include <optional>
#include <vector>

#include "bidio/exactmath.hpp"
#include "bidio/geometry.hpp"

// Constructive witnesses for the positive existence results: for every
// k >= 3 there is a bidiophantine triangle and a bidiophantine rectangle with
// a side of length exactly k. k in {1, 2} is rejected (no such polygon
// exists; see the certificates module).

namespace bidio::constructors {

// Axis-aligned right triangle (0,0), (k,0), (0,w) with
//   w = (k^2 - 1)/2  for odd k   (hypotenuse (k^2 + 1)/2)
//   w = k^2/4 - 1    for even k  (hypotenuse k^2/4 + 1).
// k < 3 throws std::domain_error.
std::vector<geometry::LatticePoint> triangle_with_side(const Int& k);

// Axis-aligned rectangles k x w with integral diagonal, as vertex cycles
// (0,0), (k,0), (k,w), (0,w). Without a limit: just the minimal-w rectangle.
// With a limit: one rectangle per admissible w <= limit, ascending (possibly
// none). k < 3 throws std::domain_error.
std::vector<std::vector<geometry::LatticePoint>> rectangle_with_side(
    const Int& k, const std::optional<Int>& width_limit = std::nullopt);

// The admissible widths themselves: all w <= limit with k^2 + w^2 a perfect
// square, ascending.
std::vector<Int> rectangle_widths(const Int& k, const Int& width_limit);

}  // namespace bidio::constructors
