#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bidio/exactmath.hpp"

// Lattice points, exact squared-distance matrices, and the certifier that
// decides whether a configuration has all pairwise distances natural
// ("bidiophantine" when the vertices are lattice points, which here they
// always are). All predicates are exact integer arithmetic.

namespace bidio::geometry {

struct LatticePoint {
    Int x;
    Int y;
};

inline bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.x == b.x && a.y == b.y;
}
inline bool operator!=(const LatticePoint& a, const LatticePoint& b) {
    return !(a == b);
}
inline bool operator<(const LatticePoint& a, const LatticePoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Int squared_distance(const LatticePoint& p, const LatticePoint& q);

// (a - o) x (b - o); zero iff the three points are collinear.
Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b);
bool collinear(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r);

enum class ConfigMode { set, polygon };

// Ordered list of >= 2 pairwise distinct points plus its exact squared
// distance matrix. In polygon mode the order is read as a vertex cycle.
class PointConfiguration {
 public:
    PointConfiguration(std::vector<LatticePoint> points, ConfigMode mode);

    const std::vector<LatticePoint>& points() const { return points_; }
    ConfigMode mode() const { return mode_; }
    const Int& squared(std::size_t i, std::size_t j) const {
        return squared_[i * points_.size() + j];
    }

 private:
    std::vector<LatticePoint> points_;
    std::vector<Int> squared_;
    ConfigMode mode_;
};

struct CertificationReport {
    ConfigMode mode = ConfigMode::set;
    bool is_diophantine = false;
    // n x n; entry present iff the squared distance is a perfect square
    // (diagonal entries are 0).
    std::vector<std::vector<std::optional<Int>>> integer_distances;
    std::optional<Int> query_length;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_with_length;
    // Polygon mode only: whether the cycle is a simple polygon, and if so
    // whether it is strictly convex (straight angles count as non-convex).
    std::optional<bool> is_simple;
    std::optional<bool> is_convex;
    std::vector<std::array<std::size_t, 3>> collinear_triples;
};

// Full report for >= 3 distinct points; duplicate points and short lists are
// rejected with std::invalid_argument. When k is given, pairs_with_length
// lists exactly the index pairs at distance k.
CertificationReport certify(const PointConfiguration& config,
                            const std::optional<Int>& k = std::nullopt);
CertificationReport certify(const std::vector<LatticePoint>& points,
                            const std::optional<Int>& k = std::nullopt,
                            ConfigMode mode = ConfigMode::set);

// Exact simplicity test for the vertex cycle: no repeated vertices, no edge
// crossings or touchings, no doubled-back adjacent edges. Straight angles are
// allowed (the polygon is still simple, just not strictly convex).
bool is_simple_polygon(const std::vector<LatticePoint>& cycle);

// True iff all cross products of consecutive edges share one sign. Throws
// std::domain_error when the cycle is not a simple polygon.
bool is_convex(const std::vector<LatticePoint>& cycle);

// All pairs (a, b) with 0 < a <= b and a^2 + b^2 = k^2, ascending in a.
// Empty output certifies that every length-k segment between lattice points
// is axis-parallel. k >= 1.
std::vector<std::pair<Int, Int>> hypotenuse_decompositions(const Int& k);

// Deduplication key for congruence classes under translation and the 8 axis
// symmetries: minimum over the symmetry images of the sorted point list
// translated so its least point is the origin. Deterministic and equal for
// congruent configurations in any vertex order.
std::vector<LatticePoint> canonical_form(const std::vector<LatticePoint>& points);

// Canonical simple-polygon ordering of a small point set (n <= 8): the
// lexicographically least simple cycle over the canonical form, anchored at
// its least vertex. Falls back to the sorted canonical form when no simple
// polygonization exists.
std::vector<LatticePoint> canonical_polygon(const std::vector<LatticePoint>& points);

}  // namespace bidio::geometry
