#include "bidio/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bidio::io {

namespace {

using nlohmann::json;

json point_to_json(const geometry::LatticePoint& p) {
    return json::array({to_decimal(p.x), to_decimal(p.y)});
}

json points_to_json(const std::vector<geometry::LatticePoint>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(point_to_json(p));
    return arr;
}

json pair_hits_to_json(const std::vector<search::PairHit>& hits) {
    json arr = json::array();
    for (const auto& h : hits) {
        arr.push_back({{"arrangement", search::arrangement_name(h.arrangement)},
                       {"b", to_decimal(h.b)},
                       {"d", to_decimal(h.d)},
                       {"c", to_decimal(h.c)}});
    }
    return arr;
}

}  // namespace

json point_config_to_json(const geometry::PointConfiguration& config) {
    return {{"mode", config.mode() == geometry::ConfigMode::polygon ? "polygon" : "set"},
            {"vertices", points_to_json(config.points())}};
}

geometry::PointConfiguration point_config_from_json(const json& j) {
    if (!j.is_object() || !j.contains("mode") || !j.contains("vertices")) {
        throw FormatError("point file must be an object with \"mode\" and \"vertices\"");
    }
    const auto mode_str = j.at("mode").get<std::string>();
    geometry::ConfigMode mode;
    if (mode_str == "polygon") {
        mode = geometry::ConfigMode::polygon;
    } else if (mode_str == "set") {
        mode = geometry::ConfigMode::set;
    } else {
        throw FormatError("unknown mode \"" + mode_str +
                          "\"; expected \"polygon\" or \"set\"");
    }
    if (!j.at("vertices").is_array()) throw FormatError("\"vertices\" must be an array");
    std::vector<geometry::LatticePoint> pts;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) {
            throw FormatError(
                "each vertex must be a two-element array of decimal strings");
        }
        try {
            pts.push_back({parse_decimal(v[0].get<std::string>()),
                           parse_decimal(v[1].get<std::string>())});
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    try {
        return geometry::PointConfiguration(std::move(pts), mode);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

geometry::PointConfiguration read_point_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot read input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    json j;
    try {
        j = json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw FormatError("malformed JSON in " + path + ": " + e.what());
    }
    return point_config_from_json(j);
}

json report_to_json(const geometry::CertificationReport& report) {
    json distances = json::array();
    for (const auto& row : report.integer_distances) {
        json jrow = json::array();
        for (const auto& entry : row) {
            if (entry) {
                jrow.push_back(to_decimal(*entry));
            } else {
                jrow.push_back(nullptr);
            }
        }
        distances.push_back(std::move(jrow));
    }
    json out = {
        {"mode", report.mode == geometry::ConfigMode::polygon ? "polygon" : "set"},
        {"is_diophantine", report.is_diophantine},
        {"integer_distances", std::move(distances)},
    };
    if (report.query_length) {
        out["query_length"] = to_decimal(*report.query_length);
        json pairs = json::array();
        for (const auto& [i, j] : report.pairs_with_length) {
            pairs.push_back(json::array({i, j}));
        }
        out["pairs_with_length"] = std::move(pairs);
    }
    if (report.is_simple) out["is_simple"] = *report.is_simple;
    if (report.is_convex) out["is_convex"] = *report.is_convex;
    json triples = json::array();
    for (const auto& t : report.collinear_triples) {
        triples.push_back(json::array({t[0], t[1], t[2]}));
    }
    out["collinear_triples"] = std::move(triples);
    return out;
}

json search_report_to_json(const search::SearchReport& report) {
    json params = json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        json edges = json::array();
        for (const auto& e : w.edge_lengths) edges.push_back(to_decimal(e));
        witnesses.push_back(
            {{"vertices", points_to_json(w.vertices)}, {"edge_lengths", std::move(edges)}});
    }
    json out = {{"kind", report.kind},
                {"params", std::move(params)},
                {"scanned", std::to_string(report.scanned)},
                {"elapsed_ms", report.elapsed_ms},
                {"witnesses", std::move(witnesses)}};
    if (report.kind == "apex-pairs") {
        out["distinct_hits"] = pair_hits_to_json(report.distinct_hits);
        out["mirror_hits"] = pair_hits_to_json(report.mirror_hits);
    }
    return out;
}

json certificate_to_json(const certificates::ImpossibilityCertificate& cert) {
    return {{"case", cert.case_id},
            {"equation", cert.equation},
            {"reason", cert.reason},
            {"verified_range", to_decimal(cert.verified_range)},
            {"scanned", std::to_string(cert.scanned)},
            {"witness_count", std::to_string(cert.witness_count)},
            {"witnesses", cert.witnesses}};
}

}  // namespace bidio::io
