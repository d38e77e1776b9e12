#include "bidio/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bidio::geometry {

namespace {

std::string point_str(const LatticePoint& p) {
    return "(" + p.x.get_str() + ", " + p.y.get_str() + ")";
}

// r is on the closed segment [p, q]; assumes the three are collinear.
bool on_segment(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

// Closed-segment intersection test (touching counts).
bool segments_intersect(const LatticePoint& a, const LatticePoint& b,
                        const LatticePoint& c, const LatticePoint& d) {
    const Int d1 = cross(c, d, a);
    const Int d2 = cross(c, d, b);
    const Int d3 = cross(a, b, c);
    const Int d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

using Symmetry = LatticePoint (*)(const LatticePoint&);

constexpr std::array<Symmetry, 8> kSymmetries = {
    [](const LatticePoint& p) { return LatticePoint{p.x, p.y}; },
    [](const LatticePoint& p) { return LatticePoint{p.x, -p.y}; },
    [](const LatticePoint& p) { return LatticePoint{-p.x, p.y}; },
    [](const LatticePoint& p) { return LatticePoint{-p.x, -p.y}; },
    [](const LatticePoint& p) { return LatticePoint{p.y, p.x}; },
    [](const LatticePoint& p) { return LatticePoint{p.y, -p.x}; },
    [](const LatticePoint& p) { return LatticePoint{-p.y, p.x}; },
    [](const LatticePoint& p) { return LatticePoint{-p.y, -p.x}; },
};

}  // namespace

Int squared_distance(const LatticePoint& p, const LatticePoint& q) {
    const Int dx = p.x - q.x;
    const Int dy = p.y - q.y;
    return dx * dx + dy * dy;
}

Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool collinear(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r) {
    return cross(p, q, r) == 0;
}

PointConfiguration::PointConfiguration(std::vector<LatticePoint> points, ConfigMode mode)
    : points_(std::move(points)), mode_(mode) {
    const std::size_t n = points_.size();
    if (n < 2) {
        throw std::invalid_argument("point configuration needs at least 2 points, got " +
                                    std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points_[i] == points_[j]) {
                throw std::invalid_argument("duplicate point " + point_str(points_[i]) +
                                            " at indices " + std::to_string(i) + " and " +
                                            std::to_string(j));
            }
        }
    }
    squared_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Int d = squared_distance(points_[i], points_[j]);
            squared_[j * n + i] = d;
            squared_[i * n + j] = std::move(d);
        }
    }
}

CertificationReport certify(const PointConfiguration& config, const std::optional<Int>& k) {
    const auto& pts = config.points();
    const std::size_t n = pts.size();
    if (n < 3) {
        throw std::invalid_argument("certify needs at least 3 points, got " +
                                    std::to_string(n));
    }
    if (k && *k < 0) {
        throw std::invalid_argument("certify: query length must be nonnegative");
    }

    CertificationReport report;
    report.mode = config.mode();
    report.query_length = k;
    report.integer_distances.assign(n, std::vector<std::optional<Int>>(n));
    report.is_diophantine = true;
    for (std::size_t i = 0; i < n; ++i) {
        report.integer_distances[i][i] = Int(0);
        for (std::size_t j = i + 1; j < n; ++j) {
            auto root = exact_sqrt(config.squared(i, j));
            if (!root) report.is_diophantine = false;
            report.integer_distances[i][j] = root;
            report.integer_distances[j][i] = std::move(root);
        }
    }

    if (k) {
        const Int ksq = (*k) * (*k);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (config.squared(i, j) == ksq) report.pairs_with_length.emplace_back(i, j);
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t l = j + 1; l < n; ++l) {
                if (collinear(pts[i], pts[j], pts[l])) {
                    report.collinear_triples.push_back({i, j, l});
                }
            }
        }
    }

    if (config.mode() == ConfigMode::polygon) {
        const bool simple = is_simple_polygon(pts);
        report.is_simple = simple;
        if (simple) report.is_convex = is_convex(pts);
    }
    return report;
}

CertificationReport certify(const std::vector<LatticePoint>& points,
                            const std::optional<Int>& k, ConfigMode mode) {
    return certify(PointConfiguration(points, mode), k);
}

bool is_simple_polygon(const std::vector<LatticePoint>& cycle) {
    const std::size_t n = cycle.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cycle[i] == cycle[j]) return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t i2 = (i + 1) % n;
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t j2 = (j + 1) % n;
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Shared vertex; the other two endpoints must not fold back
                // onto the same ray, or the boundary overlaps itself.
                const LatticePoint& shared = (j == i + 1) ? cycle[j] : cycle[0];
                const LatticePoint& a = (j == i + 1) ? cycle[i] : cycle[n - 1];
                const LatticePoint& b = (j == i + 1) ? cycle[j2] : cycle[1];
                if (collinear(a, shared, b)) {
                    const Int dot = (a.x - shared.x) * (b.x - shared.x) +
                                    (a.y - shared.y) * (b.y - shared.y);
                    if (dot > 0) return false;
                }
            } else {
                if (segments_intersect(cycle[i], cycle[i2], cycle[j], cycle[j2])) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_convex(const std::vector<LatticePoint>& cycle) {
    if (!is_simple_polygon(cycle)) {
        throw std::domain_error("is_convex: the vertex cycle is not a simple polygon");
    }
    const std::size_t n = cycle.size();
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Int c = cross(cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]);
        if (c == 0) return false;
        const int s = c > 0 ? 1 : -1;
        if (sign == 0) {
            sign = s;
        } else if (s != sign) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<Int, Int>> hypotenuse_decompositions(const Int& k) {
    if (k < 1) {
        throw std::domain_error("hypotenuse_decompositions: k must be >= 1, got " +
                                k.get_str());
    }
    std::vector<std::pair<Int, Int>> out;
    const Int ksq = k * k;
    if (mpz_fits_ulong_p(k.get_mpz_t()) && k <= 3000000000UL) {
        const std::uint64_t kk = mpz_get_ui(k.get_mpz_t());
        const std::uint64_t kk2 = kk * kk;
        for (std::uint64_t a = 1; 2 * a * a <= kk2; ++a) {
            std::uint64_t b = 0;
            if (is_square_u64(kk2 - a * a, &b)) out.emplace_back(Int(a), Int(b));
        }
        return out;
    }
    for (Int a = 1; 2 * a * a <= ksq; ++a) {
        if (auto b = exact_sqrt(ksq - a * a)) out.emplace_back(a, *b);
    }
    return out;
}

std::vector<LatticePoint> canonical_form(const std::vector<LatticePoint>& points) {
    std::vector<LatticePoint> best;
    std::vector<LatticePoint> image(points.size());
    for (const auto sym : kSymmetries) {
        for (std::size_t i = 0; i < points.size(); ++i) image[i] = sym(points[i]);
        const auto least = *std::min_element(image.begin(), image.end());
        for (auto& p : image) {
            p.x -= least.x;
            p.y -= least.y;
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
    }
    return best;
}

std::vector<LatticePoint> canonical_polygon(const std::vector<LatticePoint>& points) {
    auto canon = canonical_form(points);
    const std::size_t n = canon.size();
    if (n > 8) {
        throw std::invalid_argument("canonical_polygon supports at most 8 vertices");
    }
    if (n < 3) return canon;

    std::vector<std::size_t> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<LatticePoint> cycle(n), best;
    cycle[0] = canon[0];
    do {
        for (std::size_t i = 0; i < rest.size(); ++i) cycle[i + 1] = canon[rest[i]];
        if (is_simple_polygon(cycle) && (best.empty() || cycle < best)) best = cycle;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best.empty() ? canon : best;
}

}  // namespace bidio::geometry
