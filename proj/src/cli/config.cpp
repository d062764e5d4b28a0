#include "cli/config.hpp"

#include "jtsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace jtsim::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError("config error at " + where + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            fail(where, "unknown key '" + item.key() + "'");
}

double get_number(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key))
        fail(where, "missing required key '" + key + "'");
    if (!obj[key].is_number())
        fail(where + "." + key, "expected a number");
    return obj[key].get<double>();
}

double get_number_or(const json& obj, const std::string& where, const std::string& key,
                     double fallback) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number())
        fail(where + "." + key, "expected a number");
    return obj[key].get<double>();
}

int get_int_or(const json& obj, const std::string& where, const std::string& key, int fallback) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number_integer())
        fail(where + "." + key, "expected an integer");
    return obj[key].get<int>();
}

std::string get_string(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key))
        fail(where, "missing required key '" + key + "'");
    if (!obj[key].is_string())
        fail(where + "." + key, "expected a string");
    return obj[key].get<std::string>();
}

SweepSpec parse_sweep(const json& obj, const std::string& where) {
    if (!obj.is_object())
        fail(where, "expected an object");
    reject_unknown_keys(obj, where, {"param", "from", "to", "steps"});
    SweepSpec s;
    s.param = get_string(obj, where, "param");
    s.from = get_number(obj, where, "from");
    s.to = get_number(obj, where, "to");
    s.steps = get_int_or(obj, where, "steps", 0);
    if (!obj.contains("steps"))
        fail(where, "missing required key 'steps'");
    return s;
}

void check_sweep(const SweepSpec& s, const std::string& where) {
    static const std::set<std::string> params = {"k_eff", "Delta", "J"};
    if (!params.count(s.param))
        fail(where + ".param", "must be one of k_eff, Delta, J");
    if (s.steps < 2)
        fail(where + ".steps", "must be >= 2");
    if (!(s.from < s.to))
        fail(where, "'from' must be < 'to'");
    if (s.param == "Delta" && (s.from <= -2.0 || s.to >= 2.0))
        fail(where, "Delta sweep must stay inside (-2, 2)");
    if (s.param == "J" && (s.from <= -1.0 || s.to >= 1.0))
        fail(where, "J sweep must stay inside (-1, 1)");
    if (s.param == "k_eff" && s.from < 0.0)
        fail(where, "k_eff sweep must be nonnegative");
}

} // namespace

std::string to_string(Mode m) {
    switch (m) {
    case Mode::eigens: return "eigens";
    case Mode::spectrum: return "spectrum";
    case Mode::sweep: return "sweep";
    case Mode::map_params: return "map-params";
    case Mode::hardware: return "hardware";
    }
    return "?";
}

std::string to_string(ModelForm f) {
    switch (f) {
    case ModelForm::scaled: return "scaled";
    case ModelForm::circuit: return "circuit";
    case ModelForm::jt: return "jt";
    }
    return "?";
}

std::string to_string(OutputFormat f) {
    return f == OutputFormat::csv ? "csv" : "json";
}

std::vector<double> linspace(double from, double to, int points) {
    std::vector<double> out(points);
    for (int i = 0; i < points; ++i)
        out[i] = from + (to - from) * double(i) / double(points - 1);
    return out;
}

std::vector<double> OmegaGrid::grid() const { return linspace(from, to, points); }

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config error: malformed document: ") + e.what());
    }
    return config_from_json(doc);
}

RunConfig config_from_json(const json& doc) {
    if (!doc.is_object())
        fail("<root>", "expected a JSON object");
    reject_unknown_keys(doc, "<root>",
                        {"mode", "model", "dissipation", "dims", "sweep", "sweep2", "omega",
                         "eigenvalues", "hardware", "output", "jobs"});

    RunConfig cfg;

    const std::string mode = get_string(doc, "<root>", "mode");
    if (mode == "eigens") cfg.mode = Mode::eigens;
    else if (mode == "spectrum") cfg.mode = Mode::spectrum;
    else if (mode == "sweep") cfg.mode = Mode::sweep;
    else if (mode == "map-params") cfg.mode = Mode::map_params;
    else if (mode == "hardware") cfg.mode = Mode::hardware;
    else fail("mode", "must be one of eigens, spectrum, sweep, map-params, hardware");

    if (doc.contains("model")) {
        const json& m = doc["model"];
        if (!m.is_object())
            fail("model", "expected an object");
        cfg.has_model = true;
        const std::string form = get_string(m, "model", "form");
        if (form == "scaled") {
            cfg.form = ModelForm::scaled;
            reject_unknown_keys(m, "model", {"form", "k_eff", "Delta", "qubit_detuning"});
            cfg.scaled.k_eff = get_number(m, "model", "k_eff");
            cfg.scaled.Delta = get_number(m, "model", "Delta");
            cfg.scaled.qubit_detuning = get_number_or(m, "model", "qubit_detuning", 0.0);
        } else if (form == "circuit") {
            cfg.form = ModelForm::circuit;
            reject_unknown_keys(m, "model",
                                {"form", "Omega", "Omega1", "Omega2", "lambda1", "lambda2", "J"});
            cfg.circuit.Omega = get_number_or(m, "model", "Omega", 1.0);
            cfg.circuit.Omega1 = get_number(m, "model", "Omega1");
            cfg.circuit.Omega2 = get_number(m, "model", "Omega2");
            cfg.circuit.lambda1 = get_number(m, "model", "lambda1");
            cfg.circuit.lambda2 = get_number_or(m, "model", "lambda2", 0.0);
            cfg.circuit.J = get_number_or(m, "model", "J", 0.0);
        } else if (form == "jt") {
            cfg.form = ModelForm::jt;
            reject_unknown_keys(m, "model", {"form", "omega1", "omega2", "k1", "k2"});
            cfg.jt.omega1 = get_number(m, "model", "omega1");
            cfg.jt.omega2 = get_number(m, "model", "omega2");
            cfg.jt.k1 = get_number(m, "model", "k1");
            cfg.jt.k2 = get_number(m, "model", "k2");
        } else {
            fail("model.form", "must be one of scaled, circuit, jt");
        }
    }

    if (doc.contains("dissipation")) {
        const json& d = doc["dissipation"];
        if (!d.is_object())
            fail("dissipation", "expected an object");
        reject_unknown_keys(d, "dissipation", {"kappa", "gamma", "gamma_phi", "n_th"});
        cfg.dissipation.kappa = get_number_or(d, "dissipation", "kappa", cfg.dissipation.kappa);
        cfg.dissipation.gamma = get_number_or(d, "dissipation", "gamma", cfg.dissipation.gamma);
        cfg.dissipation.gamma_phi =
            get_number_or(d, "dissipation", "gamma_phi", cfg.dissipation.gamma_phi);
        cfg.dissipation.n_th = get_number_or(d, "dissipation", "n_th", cfg.dissipation.n_th);
    }

    if (doc.contains("dims")) {
        const json& d = doc["dims"];
        if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() ||
            !d[1].is_number_integer())
            fail("dims", "expected an array of two integers");
        cfg.dims = {d[0].get<int>(), d[1].get<int>()};
    }

    if (doc.contains("sweep"))
        cfg.sweep = parse_sweep(doc["sweep"], "sweep");
    if (doc.contains("sweep2"))
        cfg.sweep2 = parse_sweep(doc["sweep2"], "sweep2");

    if (doc.contains("omega")) {
        const json& o = doc["omega"];
        if (!o.is_object())
            fail("omega", "expected an object");
        reject_unknown_keys(o, "omega", {"from", "to", "points"});
        cfg.omega.from = get_number_or(o, "omega", "from", cfg.omega.from);
        cfg.omega.to = get_number_or(o, "omega", "to", cfg.omega.to);
        cfg.omega.points = get_int_or(o, "omega", "points", cfg.omega.points);
    }

    cfg.eigenvalue_count = get_int_or(doc, "<root>", "eigenvalues", cfg.eigenvalue_count);

    if (doc.contains("hardware")) {
        const json& h = doc["hardware"];
        if (!h.is_object())
            fail("hardware", "expected an object");
        reject_unknown_keys(h, "hardware", {"L1", "L2", "Lc1", "Lc2", "C1", "C2", "Cc"});
        HardwareParams hp{};
        hp.L1 = get_number(h, "hardware", "L1");
        hp.L2 = get_number(h, "hardware", "L2");
        hp.Lc1 = get_number(h, "hardware", "Lc1");
        hp.Lc2 = get_number(h, "hardware", "Lc2");
        hp.C1 = get_number(h, "hardware", "C1");
        hp.C2 = get_number(h, "hardware", "C2");
        hp.Cc = get_number(h, "hardware", "Cc");
        cfg.hardware = hp;
    }

    if (doc.contains("output")) {
        const json& o = doc["output"];
        if (!o.is_object())
            fail("output", "expected an object");
        reject_unknown_keys(o, "output", {"path", "format"});
        if (o.contains("path")) {
            if (!o["path"].is_string())
                fail("output.path", "expected a string");
            cfg.out_path = o["path"].get<std::string>();
        }
        if (o.contains("format")) {
            const std::string f = o["format"].get<std::string>();
            if (f == "csv") cfg.format = OutputFormat::csv;
            else if (f == "json") cfg.format = OutputFormat::json;
            else fail("output.format", "must be csv or json");
        }
    }

    cfg.jobs = get_int_or(doc, "<root>", "jobs", cfg.jobs);

    // Default band sweep: the full mode-coupling range, endpoints chosen
    // inside the admissible |Delta| < 2 window.
    if (cfg.mode == Mode::eigens && !cfg.sweep)
        cfg.sweep = SweepSpec{"Delta", -1.9, 1.9, 97};

    cfg.validate();
    return cfg;
}

void RunConfig::validate() const {
    try {
        dissipation.validate();
    } catch (const std::invalid_argument& e) {
        fail("dissipation", e.what());
    }

    if (dims[0] < 2 || dims[1] < 2)
        fail("dims", "mode dimensions must be >= 2");
    if (dims[0] > 8 || dims[1] > 8)
        fail("dims", "mode dimensions above 8 exceed the dense superoperator budget");

    if (jobs < 1 || jobs > 256)
        fail("jobs", "must be in [1, 256]");

    if (eigenvalue_count < 1 || eigenvalue_count > 2 * dims[0] * dims[1])
        fail("eigenvalues", "must be in [1, 2*d1*d2]");

    if (omega.points < 2)
        fail("omega.points", "must be >= 2");
    if (!(omega.from < omega.to))
        fail("omega", "'from' must be < 'to'");

    const bool needs_model = mode == Mode::eigens || mode == Mode::spectrum ||
                             mode == Mode::sweep || mode == Mode::map_params;
    if (needs_model && !has_model)
        fail("model", "required for mode " + to_string(mode));
    if (mode == Mode::hardware) {
        if (!hardware)
            fail("hardware", "required for mode hardware");
        if (has_model)
            fail("model", "not used in hardware mode");
        try {
            hardware->validate();
        } catch (const std::invalid_argument& e) {
            fail("hardware", e.what());
        }
    } else if (hardware) {
        fail("hardware", "only used in hardware mode");
    }

    if (has_model) {
        try {
            if (form == ModelForm::scaled) scaled.validate();
            else if (form == ModelForm::circuit) circuit.validate();
            else jt.validate();
        } catch (const std::invalid_argument& e) {
            fail("model", e.what());
        }
    }

    if (sweep)
        check_sweep(*sweep, "sweep");
    if (sweep2)
        check_sweep(*sweep2, "sweep2");

    if ((mode == Mode::eigens || mode == Mode::sweep) && form != ModelForm::scaled)
        fail("model.form", "parameter sweeps require the scaled form");
    if (mode == Mode::sweep && !sweep)
        fail("sweep", "required for mode sweep");
    if (sweep2 && mode != Mode::eigens)
        fail("sweep2", "only supported in eigens mode");
    if (sweep && sweep2 && sweep->param == sweep2->param)
        fail("sweep2.param", "must differ from sweep.param");
    if ((mode == Mode::spectrum || mode == Mode::map_params || mode == Mode::hardware) && sweep)
        fail("sweep", "not used in mode " + to_string(mode));
}

nlohmann::json resolved_config_json(const RunConfig& cfg) {
    json doc;
    doc["mode"] = to_string(cfg.mode);
    if (cfg.has_model) {
        json m;
        m["form"] = to_string(cfg.form);
        if (cfg.form == ModelForm::scaled) {
            m["k_eff"] = cfg.scaled.k_eff;
            m["Delta"] = cfg.scaled.Delta;
            m["qubit_detuning"] = cfg.scaled.qubit_detuning;
        } else if (cfg.form == ModelForm::circuit) {
            m["Omega"] = cfg.circuit.Omega;
            m["Omega1"] = cfg.circuit.Omega1;
            m["Omega2"] = cfg.circuit.Omega2;
            m["lambda1"] = cfg.circuit.lambda1;
            m["lambda2"] = cfg.circuit.lambda2;
            m["J"] = cfg.circuit.J;
        } else {
            m["omega1"] = cfg.jt.omega1;
            m["omega2"] = cfg.jt.omega2;
            m["k1"] = cfg.jt.k1;
            m["k2"] = cfg.jt.k2;
        }
        doc["model"] = m;
    }
    doc["dissipation"] = {{"kappa", cfg.dissipation.kappa},
                          {"gamma", cfg.dissipation.gamma},
                          {"gamma_phi", cfg.dissipation.gamma_phi},
                          {"n_th", cfg.dissipation.n_th}};
    doc["dims"] = {cfg.dims[0], cfg.dims[1]};
    if (cfg.sweep)
        doc["sweep"] = {{"param", cfg.sweep->param},
                        {"from", cfg.sweep->from},
                        {"to", cfg.sweep->to},
                        {"steps", cfg.sweep->steps}};
    if (cfg.sweep2)
        doc["sweep2"] = {{"param", cfg.sweep2->param},
                         {"from", cfg.sweep2->from},
                         {"to", cfg.sweep2->to},
                         {"steps", cfg.sweep2->steps}};
    doc["omega"] = {{"from", cfg.omega.from}, {"to", cfg.omega.to}, {"points", cfg.omega.points}};
    doc["eigenvalues"] = cfg.eigenvalue_count;
    if (cfg.hardware)
        doc["hardware"] = {{"L1", cfg.hardware->L1},   {"L2", cfg.hardware->L2},
                           {"Lc1", cfg.hardware->Lc1}, {"Lc2", cfg.hardware->Lc2},
                           {"C1", cfg.hardware->C1},   {"C2", cfg.hardware->C2},
                           {"Cc", cfg.hardware->Cc}};
    doc["output"] = {{"path", cfg.out_path}, {"format", to_string(cfg.format)}};
    doc["jobs"] = cfg.jobs;
    return doc;
}

} // namespace jtsim::cli
