#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace jtsim::cli {

// Rectangular numeric result with a metadata block (resolved config,
// conventions, tool version). Rendering is byte-deterministic: fixed float
// formatting and fixed row order.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    nlohmann::json metadata;

    // '#'-prefixed metadata preamble, header row, then one line per row with
    // 12 significant digits in lowercase scientific notation.
    std::string to_csv() const;

    // {"metadata": ..., "columns": [...], "rows": [[...]]}
    std::string to_json_text() const;
    nlohmann::json to_json() const;
};

// 12 significant digits, lowercase scientific.
std::string format_value(double v);

nlohmann::json make_metadata(const nlohmann::json& resolved_config);

} // namespace jtsim::cli
