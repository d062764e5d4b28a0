#pragma once

#include "cli/config.hpp"
#include "cli/table.hpp"

namespace jtsim::cli {

ResultTable run_eigens(const RunConfig& cfg);
ResultTable run_spectrum(const RunConfig& cfg);
ResultTable run_sweep(const RunConfig& cfg);
ResultTable run_map_params(const RunConfig& cfg);
ResultTable run_hardware(const RunConfig& cfg);

// Dispatch on cfg.mode.
ResultTable run(const RunConfig& cfg);

} // namespace jtsim::cli
