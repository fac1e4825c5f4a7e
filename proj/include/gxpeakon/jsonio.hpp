#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gxpeakon/types.hpp"

namespace gx {

/// A configuration plus run options, as loaded from a JSON document with
/// top-level keys "layout", "spectral", "groups" and (optionally) "run".
struct RunConfig {
    GroupLayout layout;
    SpectralData spectral;
    GroupParams params;

    double t0 = -10.0;
    double t1 = 10.0;
    int samples = 101;
    double h = 1e-5;
    int steps = 10000;
    double tolerance = 1e-6;
};

/// Parses the JSON text; throws std::runtime_error with a descriptive
/// message on malformed documents.
RunConfig parse_config(const std::string& text);

/// Serializes a configuration back to the same JSON schema.
std::string config_to_json(const GroupLayout& layout, const SpectralData& spectral,
                           const GroupParams& params);

/// A rectangular result table with named columns plus layout metadata.
struct Table {
    std::string parity;
    int K = 0;
    std::vector<int> x_sizes, y_sizes;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// CSV with a header row and 17 significant digits (doubles survive a
/// round trip).
void write_csv(std::ostream& os, const Table& table);

/// {"meta": {...}, "columns": [...], "rows": [[...], ...]}.
void write_json(std::ostream& os, const Table& table);

}  // namespace gx
