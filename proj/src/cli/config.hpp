#pragma once

#include "jtsim/dynamics.hpp"
#include "jtsim/model.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace jtsim::cli {

enum class Mode { eigens, spectrum, sweep, map_params, hardware };
enum class ModelForm { scaled, circuit, jt };
enum class OutputFormat { csv, json };

std::string to_string(Mode m);
std::string to_string(ModelForm f);
std::string to_string(OutputFormat f);

// Inclusive linspace grid: param ∈ {k_eff, Delta, J} (scaled form; J means
// hopping Δ/2).
struct SweepSpec {
    std::string param;
    double from = 0.0;
    double to = 0.0;
    int steps = 0; // number of grid points, >= 2
};

struct OmegaGrid {
    double from = 0.0;
    double to = 2.0;
    int points = 401;

    std::vector<double> grid() const;
};

// Fully resolved run description. Defaults follow the reference operating
// point: rates (1e-3, 1e-3, 1e-2), n_th = 0.1, mode dims (2,2), omega grid
// [0,2] with 401 points, five eigenvalues.
struct RunConfig {
    Mode mode = Mode::eigens;
    ModelForm form = ModelForm::scaled;
    ScaledParams scaled;
    CircuitParams circuit;
    JTParams jt;
    bool has_model = false;
    DissipationParams dissipation;
    std::array<int, 2> dims{2, 2};
    std::optional<SweepSpec> sweep;
    std::optional<SweepSpec> sweep2;
    OmegaGrid omega;
    int eigenvalue_count = 5;
    std::optional<HardwareParams> hardware;
    std::string out_path;
    OutputFormat format = OutputFormat::csv;
    int jobs = 1;

    // Cross-field invariants; throws ConfigError. Called after flag overrides.
    void validate() const;
};

// Parses a JSON config document, applies defaults, rejects unknown keys.
RunConfig parse_config(const std::string& text);
RunConfig config_from_json(const nlohmann::json& doc);

// The fully resolved configuration; parsing it again reproduces the run.
nlohmann::json resolved_config_json(const RunConfig& cfg);

std::vector<double> linspace(double from, double to, int points);

} // namespace jtsim::cli
