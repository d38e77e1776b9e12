#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bidio/certificates.hpp"
#include "bidio/constructors.hpp"
#include "bidio/exactmath.hpp"
#include "bidio/families.hpp"
#include "bidio/geometry.hpp"
#include "bidio/json_io.hpp"
#include "bidio/pell.hpp"
#include "bidio/reproduce.hpp"
#include "bidio/search.hpp"

namespace {

using bidio::Int;
using bidio::geometry::LatticePoint;
using nlohmann::json;

bool is_decimal_integer(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

const CLI::Validator kDecimal(
    [](std::string& s) -> std::string {
        return is_decimal_integer(s) ? std::string{}
                                     : "\"" + s + "\" is not a decimal integer";
    },
    "INTEGER");

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_points(const std::vector<LatticePoint>& pts) {
    std::string out;
    for (const auto& p : pts) {
        if (!out.empty()) out += ";";
        out += bidio::to_decimal(p.x) + " " + bidio::to_decimal(p.y);
    }
    return out;
}

void print_certify_csv(const bidio::geometry::CertificationReport& report) {
    std::cout << "i,j,squared_distance,distance\n";
    const auto& m = report.integer_distances;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            std::cout << i << "," << j << ",";
            if (m[i][j]) {
                const Int& d = *m[i][j];
                std::cout << bidio::to_decimal(d * d) << "," << bidio::to_decimal(d);
            } else {
                std::cout << ",";
            }
            std::cout << "\n";
        }
    }
}

void print_search_csv(const bidio::search::SearchReport& report) {
    if (report.kind == "apex-pairs") {
        std::cout << "set,arrangement,b,d,c\n";
        for (const auto& h : report.distinct_hits) {
            std::cout << "distinct," << bidio::search::arrangement_name(h.arrangement)
                      << "," << bidio::to_decimal(h.b) << "," << bidio::to_decimal(h.d)
                      << "," << bidio::to_decimal(h.c) << "\n";
        }
        for (const auto& h : report.mirror_hits) {
            std::cout << "mirror," << bidio::search::arrangement_name(h.arrangement)
                      << "," << bidio::to_decimal(h.b) << "," << bidio::to_decimal(h.d)
                      << "," << bidio::to_decimal(h.c) << "\n";
        }
        return;
    }
    std::cout << "index,vertex_count,vertices,edge_lengths\n";
    for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
        const auto& w = report.witnesses[i];
        std::string edges;
        for (const auto& e : w.edge_lengths) {
            if (!edges.empty()) edges += ";";
            edges += bidio::to_decimal(e);
        }
        std::cout << i << "," << w.vertices.size() << "," << join_points(w.vertices)
                  << "," << edges << "\n";
    }
}

json polygon_json(const std::vector<LatticePoint>& vertices) {
    return bidio::io::point_config_to_json(bidio::geometry::PointConfiguration(
        vertices, bidio::geometry::ConfigMode::polygon));
}

int usage_error(const std::string& message) {
    std::cerr << "usage error: " << message << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    static const std::vector<std::string> kSubcommands = {
        "certify", "pell",  "family",   "construct",
        "search",  "certify-impossible", "reproduce"};
    if (argc >= 2 && argv[1][0] != '-') {
        const std::string first = argv[1];
        bool known = false;
        for (const auto& name : kSubcommands) known = known || name == first;
        if (!known) {
            std::cerr << "unknown subcommand: " << first
                      << " (expected one of certify, pell, family, construct, search, "
                         "certify-impossible, reproduce)\n";
            return 2;
        }
    }

    CLI::App app{"exact-arithmetic toolkit for lattice polygons with natural pairwise "
                 "distances"};
    app.require_subcommand(1);

    std::string certify_file;
    std::string certify_k;
    std::string certify_format = "json";
    auto* certify_cmd = app.add_subcommand(
        "certify", "check all pairwise distances of a point file");
    certify_cmd->add_option("--file", certify_file, "point file (JSON)")->required();
    certify_cmd->add_option("--k", certify_k, "also locate pairs at this exact length")
        ->check(kDecimal);
    certify_cmd->add_option("--format", certify_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::int64_t pell_d = 0;
    std::int64_t pell_n = 0;
    std::size_t pell_count = 0;
    std::string pell_format = "csv";
    auto* pell_cmd =
        app.add_subcommand("pell", "solutions of x^2 - d*y^2 = n in increasing x");
    pell_cmd->add_option("--d", pell_d, "nonsquare parameter d")->required();
    pell_cmd->add_option("--n", pell_n, "right-hand side n")->required();
    pell_cmd->add_option("--count", pell_count, "number of solutions")->required();
    pell_cmd->add_option("--format", pell_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    int family_k = 0;
    std::string family_limit;
    std::string family_format = "csv";
    auto* family_cmd = app.add_subcommand(
        "family", "admissible triangle family members with foot offset up to a limit");
    family_cmd->add_option("--k", family_k, "base length, 3 or 4")->required();
    family_cmd->add_option("--limit", family_limit, "largest foot offset b")
        ->required()
        ->check(kDecimal);
    family_cmd->add_option("--format", family_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string construct_shape;
    std::string construct_k;
    std::string construct_limit;
    auto* construct_cmd = app.add_subcommand(
        "construct", "a certified triangle or rectangle with a side of length k");
    construct_cmd->add_option("--shape", construct_shape, "triangle or rectangle")
        ->required()
        ->check(CLI::IsMember({"triangle", "rectangle"}));
    construct_cmd->add_option("--k", construct_k, "required side length")
        ->required()
        ->check(kDecimal);
    construct_cmd->add_option("--limit", construct_limit,
                              "rectangle only: list every width up to this limit")
        ->check(kDecimal);

    auto* search_cmd = app.add_subcommand("search", "exhaustive lattice searches");
    search_cmd->require_subcommand(1);

    std::int64_t tri_k = 0;
    std::int64_t tri_radius = 0;
    int tri_jobs = 1;
    std::string tri_format = "json";
    auto* tri_cmd = search_cmd->add_subcommand(
        "triangles", "all triangles with a length-k pair inside a coordinate box");
    tri_cmd->add_option("--k", tri_k, "required pair distance")->required();
    tri_cmd->add_option("--radius", tri_radius, "coordinate bound")->required();
    tri_cmd->add_option("--jobs", tri_jobs, "worker threads");
    tri_cmd->add_option("--format", tri_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    int pairs_k = 0;
    std::string pairs_limit;
    std::string pairs_format = "json";
    auto* pairs_cmd = search_cmd->add_subcommand(
        "pairs", "apex pair separations over all admissible b, d up to a limit");
    pairs_cmd->add_option("--k", pairs_k, "base length, 3 or 4")->required();
    pairs_cmd->add_option("--limit", pairs_limit, "largest foot offset")
        ->required()
        ->check(kDecimal);
    pairs_cmd->add_option("--format", pairs_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    int ngon_k = 0;
    int ngon_n = 0;
    std::string ngon_limit;
    std::string ngon_format = "json";
    auto* ngon_cmd = search_cmd->add_subcommand(
        "ngon", "n-gons assembled from the base segment plus family apexes");
    ngon_cmd->add_option("--k", ngon_k, "base length, 3 or 4")->required();
    ngon_cmd->add_option("--n", ngon_n, "vertex count, at least 4")->required();
    ngon_cmd->add_option("--limit", ngon_limit, "largest foot offset")
        ->required()
        ->check(kDecimal);
    ngon_cmd->add_option("--format", ngon_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string imp_case;
    std::uint64_t imp_limit = 0;
    int imp_k = 0;
    std::int64_t imp_radius = 0;
    auto* imp_cmd = app.add_subcommand(
        "certify-impossible",
        "impossibility certificate: a parity case scan or a k in {1, 2} search");
    auto* imp_case_opt =
        imp_cmd->add_option("--case", imp_case, "parity case id (see --help-cases)");
    auto* imp_limit_opt =
        imp_cmd->add_option("--limit", imp_limit, "scan bound per free variable");
    auto* imp_k_opt = imp_cmd->add_option("--k", imp_k, "segment length, 1 or 2");
    auto* imp_radius_opt =
        imp_cmd->add_option("--radius", imp_radius, "coordinate bound for the search");
    imp_cmd->add_flag_callback(
        "--help-cases",
        [] {
            for (const auto& pc : bidio::certificates::parity_cases()) {
                std::cout << pc.id << ": " << pc.equation << " (" << pc.reason << ")\n";
            }
            std::exit(0);
        },
        "list the parity case ids and exit");

    auto* reproduce_cmd = app.add_subcommand(
        "reproduce", "run the full acceptance ledger and print the pass/fail table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*certify_cmd) {
            const auto config = bidio::io::read_point_file(certify_file);
            std::optional<Int> k;
            if (!certify_k.empty()) k = bidio::parse_decimal(certify_k);
            const auto report = bidio::geometry::certify(config, k);
            if (certify_format == "json") {
                emit(bidio::io::report_to_json(report));
            } else {
                print_certify_csv(report);
            }
            return 0;
        }

        if (*pell_cmd) {
            const auto sols = bidio::pell::generate(pell_d, pell_n, pell_count);
            if (pell_format == "csv") {
                std::cout << "x,y,d,n\n";
                for (const auto& s : sols) {
                    std::cout << bidio::to_decimal(s.x()) << ","
                              << bidio::to_decimal(s.y()) << ","
                              << bidio::to_decimal(s.d()) << ","
                              << bidio::to_decimal(s.n()) << "\n";
                }
            } else {
                json arr = json::array();
                for (const auto& s : sols) {
                    arr.push_back({{"x", bidio::to_decimal(s.x())},
                                   {"y", bidio::to_decimal(s.y())},
                                   {"d", bidio::to_decimal(s.d())},
                                   {"n", bidio::to_decimal(s.n())}});
                }
                emit(arr);
            }
            return 0;
        }

        if (*family_cmd) {
            const auto values =
                bidio::families::admissible_b_values(family_k, bidio::parse_decimal(family_limit));
            if (family_format == "csv") {
                std::cout << "b,h,side_short,side_long,x0,y0,x1,y1,x2,y2\n";
                for (const auto& b : values) {
                    const auto m = bidio::families::member(family_k, b);
                    const auto tri = bidio::families::realize(m, {0, 0}, 1);
                    const auto canon = bidio::geometry::canonical_polygon(
                        std::vector<LatticePoint>(tri.begin(), tri.end()));
                    std::cout << bidio::to_decimal(m.b) << ","
                              << bidio::to_decimal(m.height) << ","
                              << bidio::to_decimal(m.side_short) << ","
                              << bidio::to_decimal(m.side_long);
                    for (const auto& p : canon) {
                        std::cout << "," << bidio::to_decimal(p.x) << ","
                                  << bidio::to_decimal(p.y);
                    }
                    std::cout << "\n";
                }
            } else {
                json arr = json::array();
                for (const auto& b : values) {
                    const auto m = bidio::families::member(family_k, b);
                    const auto tri = bidio::families::realize(m, {0, 0}, 1);
                    const auto canon = bidio::geometry::canonical_polygon(
                        std::vector<LatticePoint>(tri.begin(), tri.end()));
                    json verts = json::array();
                    for (const auto& p : canon) {
                        verts.push_back(json::array(
                            {bidio::to_decimal(p.x), bidio::to_decimal(p.y)}));
                    }
                    arr.push_back({{"b", bidio::to_decimal(m.b)},
                                   {"height", bidio::to_decimal(m.height)},
                                   {"side_short", bidio::to_decimal(m.side_short)},
                                   {"side_long", bidio::to_decimal(m.side_long)},
                                   {"vertices", std::move(verts)}});
                }
                emit(arr);
            }
            return 0;
        }

        if (*construct_cmd) {
            const Int k = bidio::parse_decimal(construct_k);
            if (construct_shape == "triangle") {
                if (!construct_limit.empty()) {
                    return usage_error("--limit applies to --shape rectangle only");
                }
                emit(polygon_json(bidio::constructors::triangle_with_side(k)));
            } else {
                std::optional<Int> limit;
                if (!construct_limit.empty()) limit = bidio::parse_decimal(construct_limit);
                const auto rects = bidio::constructors::rectangle_with_side(k, limit);
                if (!limit) {
                    emit(polygon_json(rects.at(0)));
                } else {
                    json arr = json::array();
                    for (const auto& r : rects) arr.push_back(polygon_json(r));
                    emit(arr);
                }
            }
            return 0;
        }

        if (*tri_cmd) {
            const auto report =
                bidio::search::brute_force_triangles(tri_k, tri_radius, tri_jobs);
            if (tri_format == "json") {
                emit(bidio::io::search_report_to_json(report));
            } else {
                print_search_csv(report);
            }
            return 0;
        }

        if (*pairs_cmd) {
            const auto report = bidio::search::scan_apex_pairs(
                pairs_k, bidio::parse_decimal(pairs_limit));
            if (pairs_format == "json") {
                emit(bidio::io::search_report_to_json(report));
            } else {
                print_search_csv(report);
            }
            return 0;
        }

        if (*ngon_cmd) {
            const auto report = bidio::search::extend_to_ngon(
                ngon_k, ngon_n, bidio::parse_decimal(ngon_limit));
            if (ngon_format == "json") {
                emit(bidio::io::search_report_to_json(report));
            } else {
                print_search_csv(report);
            }
            return 0;
        }

        if (*imp_cmd) {
            const bool case_mode = imp_case_opt->count() > 0;
            const bool search_mode = imp_k_opt->count() > 0;
            if (case_mode == search_mode) {
                return usage_error(
                    "certify-impossible needs exactly one of --case or --k");
            }
            bidio::certificates::ImpossibilityCertificate cert;
            if (case_mode) {
                if (imp_limit_opt->count() == 0) {
                    return usage_error("--case requires --limit");
                }
                cert = bidio::certificates::verify_parity_case(imp_case, imp_limit);
            } else {
                if (imp_radius_opt->count() == 0) {
                    return usage_error("--k requires --radius");
                }
                cert = bidio::certificates::nonexistence_k12(imp_k, imp_radius);
            }
            emit(bidio::io::certificate_to_json(cert));
            return 0;
        }

        if (*reproduce_cmd) {
            const auto items = bidio::reproduce::run_full_ledger();
            bidio::reproduce::print_ledger(items, std::cout);
            return bidio::reproduce::all_passed(items) ? 0 : 1;
        }
    } catch (const bidio::io::FileError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const bidio::io::FormatError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
