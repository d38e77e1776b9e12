#include "bidio/search.hpp"

#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

namespace bidio::search {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

Witness make_witness(const std::vector<geometry::LatticePoint>& points) {
    Witness w;
    w.vertices = geometry::canonical_polygon(points);
    const std::size_t n = w.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = exact_sqrt(
            geometry::squared_distance(w.vertices[i], w.vertices[(i + 1) % n]));
        if (!d) throw std::logic_error("witness with non-integral edge");
        w.edge_lengths.push_back(*d);
    }
    return w;
}

void check_certifies(const std::vector<geometry::LatticePoint>& points) {
    if (!geometry::certify(points).is_diophantine) {
        throw std::logic_error("search produced a witness that does not certify");
    }
}

struct RawHit {
    std::int64_t bx, by, x, y;
};

void scan_stripe(std::int64_t radius,
                 const std::vector<std::pair<std::int64_t, std::int64_t>>& anchors,
                 std::int64_t x_lo, std::int64_t x_hi, std::vector<RawHit>& out) {
    for (const auto& [bx, by] : anchors) {
        for (std::int64_t x = x_lo; x < x_hi; ++x) {
            for (std::int64_t y = -radius; y <= radius; ++y) {
                if (bx * y == by * x) continue;  // collinear with both endpoints
                const std::uint64_t d1 =
                    std::uint64_t(x * x) + std::uint64_t(y * y);
                if (!is_square_u64(d1)) continue;
                const std::int64_t dx = x - bx;
                const std::int64_t dy = y - by;
                const std::uint64_t d2 =
                    std::uint64_t(dx * dx) + std::uint64_t(dy * dy);
                if (!is_square_u64(d2)) continue;
                out.push_back({bx, by, x, y});
            }
        }
    }
}

}  // namespace

const char* arrangement_name(Arrangement a) {
    return a == Arrangement::same_side ? "same_side" : "opposite_side";
}

std::optional<Int> apex_pair_distance(const ApexPairQuery& q) {
    const auto mb = families::member(q.k, q.b);
    const auto md = families::member(q.k, q.d);
    Int horizontal, vertical;
    if (q.arrangement == Arrangement::same_side) {
        horizontal = q.b + q.d + q.k;
        vertical = mb.height - md.height;
    } else {
        horizontal = q.d - q.b;
        vertical = mb.height + md.height;
    }
    return exact_sqrt(horizontal * horizontal + vertical * vertical);
}

SearchReport brute_force_triangles(std::int64_t k, std::int64_t radius, int jobs) {
    if (k < 1) throw std::invalid_argument("brute_force_triangles: k must be >= 1");
    if (radius < k) {
        throw std::invalid_argument("brute_force_triangles: radius must be >= k");
    }
    if (radius > 1000000000) {
        throw std::invalid_argument(
            "brute_force_triangles: radius above the 64-bit scan bound 10^9");
    }
    if (jobs < 1) throw std::invalid_argument("brute_force_triangles: jobs must be >= 1");
    const auto start = Clock::now();

    std::vector<std::pair<std::int64_t, std::int64_t>> anchors{{k, 0}};
    for (const auto& [a, b] : geometry::hypotenuse_decompositions(Int(k))) {
        // one representative per unordered leg pair; the mirror image is
        // congruent and collapses in canonical form
        anchors.emplace_back(b.get_si(), a.get_si());
    }

    std::vector<std::vector<RawHit>> hits(jobs);
    const std::int64_t span = 2 * radius + 1;
    const std::int64_t chunk = (span + jobs - 1) / jobs;
    if (jobs == 1) {
        scan_stripe(radius, anchors, -radius, radius + 1, hits[0]);
    } else {
        std::vector<std::thread> workers;
        for (int j = 0; j < jobs; ++j) {
            const std::int64_t lo = -radius + j * chunk;
            const std::int64_t hi = std::min(lo + chunk, radius + 1);
            if (lo > radius) break;
            workers.emplace_back(scan_stripe, radius, std::cref(anchors), lo, hi,
                                 std::ref(hits[j]));
        }
        for (auto& w : workers) w.join();
    }

    std::map<std::vector<geometry::LatticePoint>, Witness> found;
    for (const auto& stripe : hits) {
        for (const auto& h : stripe) {
            const std::vector<geometry::LatticePoint> tri = {
                {Int(0), Int(0)}, {Int(h.bx), Int(h.by)}, {Int(h.x), Int(h.y)}};
            auto canon = geometry::canonical_form(tri);
            if (found.contains(canon)) continue;
            check_certifies(tri);
            found.emplace(std::move(canon), make_witness(tri));
        }
    }

    SearchReport report;
    report.kind = "triangles";
    report.params = {{"k", std::to_string(k)},
                     {"radius", std::to_string(radius)},
                     {"jobs", std::to_string(jobs)}};
    report.scanned = std::uint64_t(anchors.size()) * std::uint64_t(span) *
                     std::uint64_t(span);
    for (auto& kv : found) report.witnesses.push_back(std::move(kv.second));
    report.elapsed_ms = ms_since(start);
    return report;
}

SearchReport scan_apex_pairs(int k, const Int& b_limit) {
    if (b_limit < 1) throw std::invalid_argument("scan_apex_pairs: b_limit must be >= 1");
    const auto start = Clock::now();
    const auto admissible = families::admissible_b_values(k, b_limit);

    SearchReport report;
    report.kind = "apex-pairs";
    report.params = {{"k", std::to_string(k)}, {"b_limit", b_limit.get_str()}};

    for (std::size_t i = 0; i < admissible.size(); ++i) {
        for (std::size_t j = i + 1; j < admissible.size(); ++j) {
            const Int& b = admissible[i];
            const Int& d = admissible[j];
            for (const auto arr : {Arrangement::same_side, Arrangement::opposite_side}) {
                if (auto c = apex_pair_distance({k, arr, b, d})) {
                    report.distinct_hits.push_back({arr, b, d, *c});
                }
                ++report.scanned;
            }
            if (k == 3) {
                // parity re-derivation: the same-end-same-side separation
                // would need an odd number to equal an even one
                const auto mb = families::member(k, b);
                const auto md = families::member(k, d);
                const Int gap = d - b;
                const Int odd_side = 8 * gap * gap + 6 * gap + 1;
                const Int even_side =
                    8 * ((b + 1) * (b + 2) + (d + 1) * (d + 2)) -
                    2 * mb.height * md.height;
                if (odd_side % 2 == 0 || even_side % 2 != 0) {
                    throw std::logic_error("parity re-derivation failed at b = " +
                                           b.get_str() + ", d = " + d.get_str());
                }
            }
        }
    }
    for (const Int& b : admissible) {
        const auto c = apex_pair_distance({k, Arrangement::opposite_side, b, b});
        if (!c) throw std::logic_error("mirror separation 2h must be integral");
        report.mirror_hits.push_back({Arrangement::opposite_side, b, b, *c});
        ++report.scanned;
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

SearchReport extend_to_ngon(int k, int n, const Int& b_limit) {
    if (k != 3 && k != 4) throw std::invalid_argument("extend_to_ngon: k must be 3 or 4");
    if (n < 4) {
        throw std::invalid_argument(
            "extend_to_ngon: n must be >= 4 (triangles come from the family itself)");
    }
    if (b_limit < 0) throw std::invalid_argument("extend_to_ngon: b_limit must be >= 0");
    const auto start = Clock::now();

    const geometry::LatticePoint end_a{0, 0};
    const geometry::LatticePoint end_b{k, 0};
    std::vector<geometry::LatticePoint> nodes;
    for (const Int& b : families::admissible_b_values(k, b_limit)) {
        const auto m = families::member(k, b);
        nodes.push_back({-b, m.height});
        nodes.push_back({-b, -m.height});
        nodes.push_back({k + b, m.height});
        nodes.push_back({k + b, -m.height});
    }
    for (const auto& p : nodes) {
        // family construction guarantees both endpoint distances are integral
        if (!is_perfect_square(geometry::squared_distance(p, end_a)) ||
            !is_perfect_square(geometry::squared_distance(p, end_b))) {
            throw std::logic_error("apex node without integral endpoint distances");
        }
    }

    const std::size_t count = nodes.size();
    std::vector<bool> compat(count * count, false);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const bool ok =
                nodes[i] != nodes[j] &&
                is_perfect_square(geometry::squared_distance(nodes[i], nodes[j]));
            compat[i * count + j] = compat[j * count + i] = ok;
        }
    }

    SearchReport report;
    report.kind = "ngon";
    report.params = {{"k", std::to_string(k)},
                     {"n", std::to_string(n)},
                     {"b_limit", b_limit.get_str()}};

    const std::size_t need = std::size_t(n) - 2;
    std::map<std::vector<geometry::LatticePoint>, Witness> found;
    std::vector<std::size_t> chosen;

    auto emit = [&]() {
        ++report.scanned;
        std::vector<geometry::LatticePoint> pts{end_a, end_b};
        for (const auto idx : chosen) pts.push_back(nodes[idx]);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                for (std::size_t l = j + 1; l < pts.size(); ++l) {
                    if (geometry::collinear(pts[i], pts[j], pts[l])) return;
                }
            }
        }
        auto canon = geometry::canonical_form(pts);
        if (found.contains(canon)) return;
        check_certifies(pts);
        found.emplace(std::move(canon), make_witness(pts));
    };

    auto extend = [&](auto&& self, std::size_t from) -> void {
        if (chosen.size() == need) {
            emit();
            return;
        }
        for (std::size_t i = from; i < count; ++i) {
            bool ok = true;
            for (const auto idx : chosen) {
                if (!compat[idx * count + i]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);

    for (auto& kv : found) report.witnesses.push_back(std::move(kv.second));
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace bidio::search
