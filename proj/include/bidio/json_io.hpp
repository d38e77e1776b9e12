#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bidio/certificates.hpp"
#include "bidio/geometry.hpp"
#include "bidio/search.hpp"

// JSON (de)serialization. All numbers travel as decimal strings so any
// consumer survives values beyond 64 bits. Point files use
//   {"mode": "polygon"|"set", "vertices": [["x","y"], ...]}.

namespace bidio::io {

// Unreadable file vs. malformed content are distinct failures so the CLI can
// report them separately (both are usage errors, not domain errors).
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json point_config_to_json(const geometry::PointConfiguration& config);
geometry::PointConfiguration point_config_from_json(const nlohmann::json& j);

// Reads and parses a point file; FileError when unreadable, FormatError when
// the content is not valid JSON or not a valid point configuration.
geometry::PointConfiguration read_point_file(const std::string& path);

nlohmann::json report_to_json(const geometry::CertificationReport& report);
nlohmann::json search_report_to_json(const search::SearchReport& report);
nlohmann::json certificate_to_json(const certificates::ImpossibilityCertificate& cert);

}  // namespace bidio::io
