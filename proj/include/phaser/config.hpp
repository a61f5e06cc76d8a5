#ifndef PHASER_CONFIG_HPP
#define PHASER_CONFIG_HPP

#include "phaser/sweep.hpp"

#include <string>

namespace phaser {

inline constexpr const char* kVersion = "phaser 1.0.0";

struct ParseError : std::runtime_error {
    std::string key;
    ParseError(const std::string& key_, const std::string& what_)
        : std::runtime_error("config key '" + key_ + "': " + what_), key(key_)
    {
    }
};

// Flat key = value configuration.  Frequencies carry an explicit unit
// ("radfs" or "meV") after the number; lists are comma-separated with one
// trailing unit.  Exactly one of omega_L / delta1 is given.
struct RunConfig {
    SystemParams params;
    int n_qd = 1;
    int n_max = 40;

    SweepVariable sweep_variable = SweepVariable::delta_over_omega_ph;
    double sweep_start = 0.85;
    double sweep_stop = 1.05;
    int sweep_count = 201;
    bool sweep_log = false;
    HamiltonianKind hamiltonian = HamiltonianKind::full;
    DetuningChoice detuning_choice = DetuningChoice::collective_resonance;

    std::optional<double> residual_tol;
    int max_iters = 60;
    int workers = 0;
    double min_height = 0.5;
    double g2_floor = 1e-6;
    double truncation_limit = 1e-6;

    SweepSpec sweep_spec() const;
    // Canonical key = value rendering of the fully resolved config, all
    // frequencies in rad/fs.
    std::string echo() const;
};

RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

} // namespace phaser

#endif
