// JSON persistence for series and forms, plus runtime configuration.
//
// Schemas (all coefficients are exact rationals rendered as strings, a
// Gaussian rational appearing as the pair ["re", "im"]):
//   q-series     {"den": D, "prec": "p/q", "terms": [[n, ["re","im"]], ...]}
//                sorted by n; the exponent of a term is n/D.
//   jacobi       {"kind": "jacobi", "weight": k, "index": m, "den": D,
//                 "prec": "p/q", "terms": [[n, r, ["re","im"]], ...]}
//                with q-exponent n/D and integer elliptic index r.
//   hjf          {"kind": "hjf", "weight": k, "index": m, "den": D,
//                 "prec": "p/q",
//                 "components": {"a,b": [[L, ["re","im"]], ...], ...}}
//                storing the theta decomposition; component exponents are
//                L/D and "prec" is the precision of the assembled form.
// External generator files use the hjf/jacobi schemas and must carry an
// additional non-empty "source" string describing where the data came from.

#pragma once

#include "hjf/hermitian.hpp"
#include "hjf/jacobi.hpp"
#include "hjf/qseries.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace hjf {

// Malformed input: JSON syntax errors (message carries line/column from the
// parser) or schema violations (message names the offending field).
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const QSeries& f);
nlohmann::json to_json(const JacobiExpansion& f);
nlohmann::json to_json(const HermitianExpansion& f);

QSeries qseries_from_json(const nlohmann::json& j);
JacobiExpansion jacobi_from_json(const nlohmann::json& j);
HermitianExpansion hjf_from_json(const nlohmann::json& j);

enum class FormKind { qseries, jacobi, hjf };
FormKind detect_kind(const nlohmann::json& j);

// Parse with diagnostics; throws format_error on malformed input.
nlohmann::json parse_json_text(const std::string& text);
nlohmann::json parse_json_file(const std::string& path);

// Reads an external generator file: same schemas as above plus a required
// non-empty "source" field.  Throws format_error on schema or kind mismatch.
HermitianExpansion load_external_hjf(const std::string& path);
JacobiExpansion load_external_jacobi(const std::string& path);

// Runtime configuration.  Sources, in increasing precedence: built-in
// defaults, optional config file (same JSON shape), the HJF_DATA_DIR
// environment variable, command-line flags (applied by the caller).
inline constexpr const char* kDataDirEnvVar = "HJF_DATA_DIR";

struct Config {
    Rat precision = rat(40);
    std::string data_dir;        // empty = no external data available
    std::string format = "json"; // "json" | "text"
};

// Parse a config JSON object ({"precision": …, "data_dir": …, "format": …},
// every field optional); enforces precision >= 8 and a known format.
Config config_from_json(const nlohmann::json& j, Config base = {});

// Loads the optional config file (if path non-empty), then overlays the
// environment variable.
Config load_config(const std::string& config_path);

}  // namespace hjf
