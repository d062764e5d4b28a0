#include "cli/config.hpp"
#include "cli/runners.hpp"
#include "jtsim/errors.hpp"
#include "jtsim/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string format;
    std::string dims;
    int jobs = 0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Path to the JSON run configuration")
        ->required();
    cmd->add_option("--out", flags.out_path, "Output path (default: stdout or config value)");
    cmd->add_option("--format", flags.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--dims", flags.dims, "Per-mode Fock truncations, e.g. 2,2");
    cmd->add_option("--jobs", flags.jobs, "Worker threads for sweep points")
        ->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw jtsim::ConfigError("config error: cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::array<int, 2> parse_dims(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw jtsim::ConfigError("config error at --dims: expected d1,d2");
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw jtsim::ConfigError("config error at --dims: expected integers d1,d2");
    }
}

int run_command(const std::string& mode, const CommonFlags& flags) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(flags.config_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw jtsim::ConfigError(std::string("config error: malformed document: ") + e.what());
    }
    if (!doc.is_object())
        throw jtsim::ConfigError("config error at <root>: expected a JSON object");
    if (doc.contains("mode") && doc["mode"] != mode)
        throw jtsim::ConfigError("config error at mode: config says '" +
                                 doc["mode"].get<std::string>() + "' but the subcommand is '" +
                                 mode + "'");
    doc["mode"] = mode;

    jtsim::cli::RunConfig cfg = jtsim::cli::config_from_json(doc);
    if (!flags.out_path.empty())
        cfg.out_path = flags.out_path;
    if (!flags.format.empty())
        cfg.format = flags.format == "csv" ? jtsim::cli::OutputFormat::csv
                                           : jtsim::cli::OutputFormat::json;
    if (!flags.dims.empty())
        cfg.dims = parse_dims(flags.dims);
    if (flags.jobs > 0)
        cfg.jobs = flags.jobs;
    cfg.validate();

    const jtsim::cli::ResultTable table = jtsim::cli::run(cfg);
    const std::string rendered = cfg.format == jtsim::cli::OutputFormat::csv
                                     ? table.to_csv()
                                     : table.to_json_text();
    if (cfg.out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out)
            throw jtsim::ConfigError("config error: cannot write '" + cfg.out_path + "'");
        out << rendered;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-frequency vibronic circuit simulator: eigenvalue bands, "
                 "emission spectra and parameter maps"};
    app.set_version_flag("--version", JTSIM_VERSION);
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> modes = {
        {"eigens", "Eigenvalue bands over a parameter sweep"},
        {"spectrum", "Cavity emission spectrum at one operating point"},
        {"sweep", "Spectrum map over a parameter sweep (long-format rows)"},
        {"map-params", "Parameter dictionary between model forms"},
        {"hardware", "Resonator frequencies and hopping from lumped-element values"},
    };

    std::vector<CommonFlags> flags(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i)
        add_common_flags(app.add_subcommand(modes[i].first, modes[i].second), flags[i]);

    CLI11_PARSE(app, argc, argv);

    try {
        for (std::size_t i = 0; i < modes.size(); ++i)
            if (app.get_subcommand(modes[i].first)->parsed())
                return run_command(modes[i].first, flags[i]);
        std::cerr << "error: config: no subcommand given\n";
        return 2;
    } catch (const jtsim::ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const jtsim::NumericalError& e) {
        std::cerr << "error: numeric: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
