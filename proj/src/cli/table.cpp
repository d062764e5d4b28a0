#include "cli/table.hpp"

#include "jtsim/version.hpp"

#include <cstdio>

namespace jtsim::cli {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

nlohmann::json make_metadata(const nlohmann::json& resolved_config) {
    nlohmann::json meta;
    meta["config"] = resolved_config;
    meta["conventions"] = {
        {"basis_order", "qubit x mode1 x mode2, index ((q*d1)+n1)*d2+n2"},
        {"vectorization", "column-stacking"},
        {"spectrum", "P(omega) = 2 Re integral_0^inf C(t) exp(-i omega t) dt, no 2pi prefactor"},
    };
    meta["version"] = JTSIM_VERSION;
    return meta;
}

std::string ResultTable::to_csv() const {
    std::string out;
    out += "# jtsim " JTSIM_VERSION "\n";
    if (metadata.contains("conventions"))
        out += "# conventions: " + metadata["conventions"].dump() + "\n";
    if (metadata.contains("config"))
        out += "# config: " + metadata["config"].dump() + "\n";

    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ",";
        out += columns[i];
    }
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += format_value(row[i]);
        }
        out += "\n";
    }
    return out;
}

nlohmann::json ResultTable::to_json() const {
    nlohmann::json doc;
    doc["metadata"] = metadata;
    doc["columns"] = columns;
    doc["rows"] = rows;
    return doc;
}

std::string ResultTable::to_json_text() const { return to_json().dump(2) + "\n"; }

} // namespace jtsim::cli
