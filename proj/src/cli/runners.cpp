#include "cli/runners.hpp"

#include "jtsim/errors.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace jtsim::cli {

namespace {

// Evaluates fn(0..count-1) on up to `jobs` threads. Work items are
// independent; callers index into preallocated slots, so row order stays
// deterministic regardless of scheduling.
void parallel_for(int jobs, std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(std::max(jobs, 1), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

ScaledParams with_sweep_value(ScaledParams p, const std::string& param, double v) {
    if (param == "k_eff")
        p.k_eff = v;
    else if (param == "Delta")
        p.Delta = v;
    else // J: hopping Delta/2
        p.Delta = 2.0 * v;
    return p;
}

Operator build_hamiltonian(const RunConfig& cfg, const HilbertSpace& space) {
    switch (cfg.form) {
    case ModelForm::scaled: return build_scaled_hamiltonian(cfg.scaled, space);
    case ModelForm::circuit: return build_circuit_hamiltonian(cfg.circuit, space);
    case ModelForm::jt: return build_jt_hamiltonian(cfg.jt, space);
    }
    throw ConfigError("config error at model.form: unknown form");
}

std::vector<double> spectrum_at(const ScaledParams& p, const RunConfig& cfg,
                                const std::vector<double>& omegas) {
    const HilbertSpace space = make_space(cfg.dims[0], cfg.dims[1]);
    const Operator h = build_scaled_hamiltonian(p, space);
    const Liouvillian liouv = build_liouvillian(h, cfg.dissipation);
    const DensityMatrix rho = steady_state(liouv);
    return emission_spectrum(liouv, rho, omegas).values;
}

} // namespace

ResultTable run_eigens(const RunConfig& cfg) {
    const SweepSpec& sw = *cfg.sweep;
    const std::vector<double> grid = linspace(sw.from, sw.to, sw.steps);
    const std::vector<double> grid2 =
        cfg.sweep2 ? linspace(cfg.sweep2->from, cfg.sweep2->to, cfg.sweep2->steps)
                   : std::vector<double>{};
    const HilbertSpace space = make_space(cfg.dims[0], cfg.dims[1]);
    const int m = cfg.eigenvalue_count;

    ResultTable table;
    table.columns.push_back(sw.param);
    if (cfg.sweep2)
        table.columns.push_back(cfg.sweep2->param);
    for (int i = 1; i <= m; ++i)
        table.columns.push_back("e" + std::to_string(i));

    const std::size_t inner = cfg.sweep2 ? grid2.size() : 1;
    table.rows.resize(grid.size() * inner);
    parallel_for(cfg.jobs, table.rows.size(), [&](std::size_t idx) {
        const double v = grid[idx / inner];
        ScaledParams p = with_sweep_value(cfg.scaled, sw.param, v);
        std::vector<double>& row = table.rows[idx];
        row.push_back(v);
        if (cfg.sweep2) {
            const double v2 = grid2[idx % inner];
            p = with_sweep_value(p, cfg.sweep2->param, v2);
            row.push_back(v2);
        }
        const std::vector<double> eigs = lowest_eigenvalues(build_scaled_hamiltonian(p, space), m);
        row.insert(row.end(), eigs.begin(), eigs.end());
    });

    table.metadata = make_metadata(resolved_config_json(cfg));
    return table;
}

ResultTable run_spectrum(const RunConfig& cfg) {
    const HilbertSpace space = make_space(cfg.dims[0], cfg.dims[1]);
    const Operator h = build_hamiltonian(cfg, space);
    const Liouvillian liouv = build_liouvillian(h, cfg.dissipation);
    const DensityMatrix rho = steady_state(liouv);
    const std::vector<double> omegas = cfg.omega.grid();
    const Spectrum spec = emission_spectrum(liouv, rho, omegas);

    ResultTable table;
    table.columns = {"omega", "P"};
    table.rows.reserve(omegas.size());
    for (std::size_t i = 0; i < omegas.size(); ++i)
        table.rows.push_back({omegas[i], spec.values[i]});
    table.metadata = make_metadata(resolved_config_json(cfg));
    return table;
}

ResultTable run_sweep(const RunConfig& cfg) {
    const SweepSpec& sw = *cfg.sweep;
    const std::vector<double> grid = linspace(sw.from, sw.to, sw.steps);
    const std::vector<double> omegas = cfg.omega.grid();

    // Long format: one row per (sweep value, omega).
    std::vector<std::vector<double>> blocks(grid.size());
    parallel_for(cfg.jobs, grid.size(), [&](std::size_t i) {
        blocks[i] = spectrum_at(with_sweep_value(cfg.scaled, sw.param, grid[i]), cfg, omegas);
    });

    ResultTable table;
    table.columns = {sw.param, "omega", "P"};
    table.rows.reserve(grid.size() * omegas.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < omegas.size(); ++j)
            table.rows.push_back({grid[i], omegas[j], blocks[i][j]});
    table.metadata = make_metadata(resolved_config_json(cfg));
    return table;
}

ResultTable run_map_params(const RunConfig& cfg) {
    JTParams jt;
    CircuitParams circuit;
    if (cfg.form == ModelForm::scaled) {
        jt = jt_from_scaled(cfg.scaled);
        circuit = jt_to_circuit(jt);
    } else if (cfg.form == ModelForm::jt) {
        jt = cfg.jt;
        circuit = jt_to_circuit(jt);
    } else {
        try {
            jt = circuit_to_jt(cfg.circuit);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config error at model: ") + e.what());
        }
        circuit = cfg.circuit;
    }
    const EffectiveMode em = effective_mode_decomposition(jt);

    ResultTable table;
    table.columns = {"Omega",  "Omega1", "Omega2",    "lambda1",     "lambda2",
                     "J",      "omega1", "omega2",    "k1",          "k2",
                     "k_eff",  "omega_eff", "omega_prime", "c2",     "frequency_ratio",
                     "eq_residual"};
    table.rows.push_back({circuit.Omega, circuit.Omega1, circuit.Omega2, circuit.lambda1,
                          circuit.lambda2, circuit.J, jt.omega1, jt.omega2, jt.k1, jt.k2,
                          em.k_eff, em.omega_eff, em.omega_prime, em.c2,
                          jt.omega1 / jt.omega2, consistency_residual(circuit)});
    table.metadata = make_metadata(resolved_config_json(cfg));
    return table;
}

ResultTable run_hardware(const RunConfig& cfg) {
    const HardwareCouplings hc = coupling_from_hardware(*cfg.hardware);
    const double mean = 0.5 * (hc.omega1 + hc.omega2);

    ResultTable table;
    table.columns = {"omega1_rad_s", "omega2_rad_s", "J_rad_s",
                     "omega1_over_mean", "omega2_over_mean", "J_over_mean"};
    table.rows.push_back(
        {hc.omega1, hc.omega2, hc.J, hc.omega1 / mean, hc.omega2 / mean, hc.J / mean});
    table.metadata = make_metadata(resolved_config_json(cfg));
    return table;
}

ResultTable run(const RunConfig& cfg) {
    switch (cfg.mode) {
    case Mode::eigens: return run_eigens(cfg);
    case Mode::spectrum: return run_spectrum(cfg);
    case Mode::sweep: return run_sweep(cfg);
    case Mode::map_params: return run_map_params(cfg);
    case Mode::hardware: return run_hardware(cfg);
    }
    throw ConfigError("config error at mode: unknown mode");
}

} // namespace jtsim::cli
