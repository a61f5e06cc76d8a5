#include "phaser/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace phaser {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(trim(item));
    return out;
}

double parse_double(const std::string& key, const std::string& s)
{
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(key, "not a number: '" + s + "'");
    }
}

long parse_int(const std::string& key, const std::string& s)
{
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(key, "not an integer: '" + s + "'");
    }
}

// "0.011 radfs" or "0.3 meV"; lists share one trailing unit.
std::vector<double> parse_frequency_list(const std::string& key, std::string value)
{
    std::size_t sp = value.find_last_of(" \t");
    if (sp == std::string::npos)
        throw ParseError(key, "missing unit (expected 'radfs' or 'meV')");
    std::string unit = trim(value.substr(sp + 1));
    std::string nums = trim(value.substr(0, sp));
    double factor;
    if (unit == "radfs")
        factor = 1.0;
    else if (unit == "meV")
        factor = 1.0 / kHbarMeVfs;
    else
        throw ParseError(key, "unknown unit '" + unit + "'");
    std::vector<double> out;
    for (const auto& tok : split_commas(nums))
        out.push_back(parse_double(key, tok) * factor);
    if (out.empty())
        throw ParseError(key, "empty value");
    return out;
}

double parse_frequency(const std::string& key, const std::string& value)
{
    auto v = parse_frequency_list(key, value);
    if (v.size() != 1)
        throw ParseError(key, "expected a single value");
    return v[0];
}

bool parse_bool(const std::string& key, const std::string& s)
{
    if (s == "true" || s == "1")
        return true;
    if (s == "false" || s == "0")
        return false;
    throw ParseError(key, "expected true/false");
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

} // namespace

SweepSpec RunConfig::sweep_spec() const
{
    SweepSpec spec;
    spec.base = params;
    spec.variable = sweep_variable;
    spec.start = sweep_start;
    spec.stop = sweep_stop;
    spec.count = sweep_count;
    spec.log_spaced = sweep_log;
    spec.n_max = n_max;
    spec.hamiltonian = hamiltonian;
    spec.workers = workers;
    spec.solver.residual_tol = residual_tol;
    spec.solver.max_iters = max_iters;
    spec.g2_floor = g2_floor;
    spec.truncation_limit = truncation_limit;
    return spec;
}

std::string RunConfig::echo() const
{
    std::ostringstream os;
    os << "n_qd = " << n_qd << "\n";
    os << "n_max = " << n_max << "\n";
    os << "omega_cv = ";
    for (std::size_t i = 0; i < params.omega_cv.size(); ++i)
        os << (i ? ", " : "") << fmt(params.omega_cv[i]);
    os << " radfs\n";
    os << "omega_ph = " << fmt(params.omega_ph) << " radfs\n";
    os << "omega_L = " << fmt(params.omega_L) << " radfs\n";
    os << "Omega = " << fmt(params.Omega) << " radfs\n";
    os << "g = ";
    for (std::size_t i = 0; i < params.g.size(); ++i)
        os << (i ? ", " : "") << fmt(params.g[i]);
    os << " radfs\n";
    os << "gamma_R = " << fmt(params.gamma_R) << " radfs\n";
    os << "kappa = " << fmt(params.kappa) << " radfs\n";
    os << "sweep_variable = "
       << (sweep_variable == SweepVariable::delta_over_omega_ph ? "delta_over_omega_ph"
                                                                : "omega_pump")
       << "\n";
    os << "sweep_start = " << fmt(sweep_start) << "\n";
    os << "sweep_stop = " << fmt(sweep_stop) << "\n";
    os << "sweep_count = " << sweep_count << "\n";
    os << "sweep_log = " << (sweep_log ? "true" : "false") << "\n";
    os << "hamiltonian = "
       << (hamiltonian == HamiltonianKind::full
               ? "full"
               : hamiltonian == HamiltonianKind::effective ? "effective"
                                                           : "effective_no_qdqd")
       << "\n";
    os << "detuning_choice = "
       << (detuning_choice == DetuningChoice::collective_resonance
               ? "collective"
               : "single_emitter")
       << "\n";
    if (residual_tol)
        os << "residual_tol = " << fmt(*residual_tol) << "\n";
    os << "max_iters = " << max_iters << "\n";
    os << "workers = " << workers << "\n";
    os << "min_height = " << fmt(min_height) << "\n";
    os << "g2_floor = " << fmt(g2_floor) << "\n";
    os << "truncation_limit = " << fmt(truncation_limit) << "\n";
    return os.str();
}

RunConfig parse_config(const std::string& text)
{
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError(t, "expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (kv.count(key))
            throw ParseError(key, "duplicate key");
        kv[key] = value;
    }

    RunConfig cfg;
    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end())
            return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto require = [&](const char* key) -> std::string {
        auto v = take(key);
        if (!v)
            throw ParseError(key, "missing required key");
        return *v;
    };

    cfg.n_qd = static_cast<int>(parse_int("n_qd", require("n_qd")));
    if (cfg.n_qd < 1)
        throw ParseError("n_qd", "must be >= 1");
    cfg.n_max = static_cast<int>(parse_int("n_max", require("n_max")));
    if (cfg.n_max < 1)
        throw ParseError("n_max", "must be >= 1");

    SystemParams& p = cfg.params;
    p.omega_cv = parse_frequency_list("omega_cv", require("omega_cv"));
    if (static_cast<int>(p.omega_cv.size()) == 1 && cfg.n_qd > 1)
        p.omega_cv.assign(cfg.n_qd, p.omega_cv[0]);
    if (static_cast<int>(p.omega_cv.size()) != cfg.n_qd)
        throw ParseError("omega_cv", "list length must equal n_qd");
    p.omega_ph = parse_frequency("omega_ph", require("omega_ph"));
    p.Omega = parse_frequency("Omega", require("Omega"));
    p.g = parse_frequency_list("g", require("g"));
    if (static_cast<int>(p.g.size()) == 1 && cfg.n_qd > 1)
        p.g.assign(cfg.n_qd, p.g[0]);
    if (static_cast<int>(p.g.size()) != cfg.n_qd)
        throw ParseError("g", "list length must equal n_qd");
    p.gamma_R = parse_frequency("gamma_R", require("gamma_R"));
    p.kappa = parse_frequency("kappa", require("kappa"));

    auto omega_L = take("omega_L");
    auto delta1 = take("delta1");
    if (omega_L.has_value() == delta1.has_value())
        throw ParseError("omega_L", "exactly one of omega_L / delta1 must be given");
    if (omega_L)
        p.omega_L = parse_frequency("omega_L", *omega_L);
    else
        p.omega_L = p.omega_cv[0] + parse_frequency("delta1", *delta1);

    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        std::string key = "params";
        for (const char* k : {"omega_ph", "kappa", "gamma_R", "Omega", "g", "omega_cv"})
            if (msg.find(k) != std::string::npos) {
                key = k;
                break;
            }
        throw ParseError(key, msg);
    }

    if (auto v = take("sweep_variable")) {
        if (*v == "delta_over_omega_ph")
            cfg.sweep_variable = SweepVariable::delta_over_omega_ph;
        else if (*v == "omega_pump")
            cfg.sweep_variable = SweepVariable::omega_pump;
        else
            throw ParseError("sweep_variable", "unknown value '" + *v + "'");
    }
    if (auto v = take("sweep_start"))
        cfg.sweep_start = parse_double("sweep_start", *v);
    if (auto v = take("sweep_stop"))
        cfg.sweep_stop = parse_double("sweep_stop", *v);
    if (auto v = take("sweep_count"))
        cfg.sweep_count = static_cast<int>(parse_int("sweep_count", *v));
    if (auto v = take("sweep_log"))
        cfg.sweep_log = parse_bool("sweep_log", *v);
    if (auto v = take("hamiltonian")) {
        if (*v == "full")
            cfg.hamiltonian = HamiltonianKind::full;
        else if (*v == "effective")
            cfg.hamiltonian = HamiltonianKind::effective;
        else if (*v == "effective_no_qdqd")
            cfg.hamiltonian = HamiltonianKind::effective_no_qdqd;
        else
            throw ParseError("hamiltonian", "unknown value '" + *v + "'");
    }
    if (auto v = take("detuning_choice")) {
        if (*v == "collective")
            cfg.detuning_choice = DetuningChoice::collective_resonance;
        else if (*v == "single_emitter")
            cfg.detuning_choice = DetuningChoice::single_emitter_resonance;
        else
            throw ParseError("detuning_choice", "unknown value '" + *v + "'");
    }
    if (auto v = take("residual_tol"))
        cfg.residual_tol = parse_double("residual_tol", *v);
    if (auto v = take("max_iters"))
        cfg.max_iters = static_cast<int>(parse_int("max_iters", *v));
    if (auto v = take("workers"))
        cfg.workers = static_cast<int>(parse_int("workers", *v));
    if (auto v = take("min_height"))
        cfg.min_height = parse_double("min_height", *v);
    if (auto v = take("g2_floor"))
        cfg.g2_floor = parse_double("g2_floor", *v);
    if (auto v = take("truncation_limit"))
        cfg.truncation_limit = parse_double("truncation_limit", *v);

    if (!kv.empty())
        throw ParseError(kv.begin()->first, "unknown key");
    if (cfg.sweep_count < 2)
        throw ParseError("sweep_count", "must be >= 2");
    if (!(cfg.sweep_start < cfg.sweep_stop))
        throw ParseError("sweep_start", "must be < sweep_stop");
    return cfg;
}

RunConfig parse_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace phaser
