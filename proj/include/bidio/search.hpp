#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bidio/exactmath.hpp"
#include "bidio/families.hpp"
#include "bidio/geometry.hpp"

// The searches behind the classification results: a raw lattice oracle for
// triangles over a length-k segment, the apex-pair distance equations, and
// the n-gon assembly that collapses the pentagon question to a handful of
// admissible parameters.

namespace bidio::search {

// Two family apexes over the same base segment: same_side puts them on the
// same side of the base line at opposite ends (horizontal gap b + d + k,
// vertical gap |h_b - h_d|); opposite_side puts them on opposite sides at the
// same end (horizontal gap |d - b|, vertical gap h_b + h_d).
enum class Arrangement { same_side, opposite_side };

const char* arrangement_name(Arrangement a);

struct ApexPairQuery {
    int k;
    Arrangement arrangement;
    Int b;
    Int d;
};

struct Witness {
    std::vector<geometry::LatticePoint> vertices;  // canonical simple cycle
    std::vector<Int> edge_lengths;                 // along that cycle
};

struct PairHit {
    Arrangement arrangement;
    Int b;
    Int d;
    Int c;
};

struct SearchReport {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t scanned = 0;
    std::int64_t elapsed_ms = 0;
    std::vector<Witness> witnesses;
    // apex-pair scans only:
    std::vector<PairHit> distinct_hits;  // b != d, both arrangements (expected empty)
    std::vector<PairHit> mirror_hits;    // b == d, opposite side (one per admissible b)
};

// Exact apex separation c for the query; present iff c^2 is a perfect
// square. Inadmissible b or d is a contract violation (std::domain_error).
std::optional<Int> apex_pair_distance(const ApexPairQuery& q);

// Every triangle (up to congruence) with all three pairwise distances
// natural, one pair at distance exactly k, and all |coordinates| <= radius
// once the length-k segment is anchored at the origin along +x (one anchor
// per hypotenuse decomposition covers non-axis-parallel segments).
// Degenerate collinear configurations are excluded. radius >= k.
SearchReport brute_force_triangles(std::int64_t k, std::int64_t radius, int jobs = 1);

// All admissible pairs b != d up to b_limit in both arrangements (expected:
// no integral separation), plus the b == d opposite-side mirror hits
// (expected: every admissible b). b_limit >= 1.
SearchReport scan_apex_pairs(int k, const Int& b_limit);

// Candidate n-gons assembled from the two segment endpoints plus n-2 family
// apexes with admissible b <= b_limit, requiring every pairwise distance
// natural and no three vertices collinear. n >= 4.
SearchReport extend_to_ngon(int k, int n, const Int& b_limit);

}  // namespace bidio::search
