#ifndef PHASER_SWEEP_HPP
#define PHASER_SWEEP_HPP

#include "phaser/observables.hpp"

#include <string>
#include <vector>

namespace phaser {

enum class SweepVariable { delta_over_omega_ph, omega_pump };
enum class HamiltonianKind { full, effective, effective_no_qdqd };
enum class DetuningChoice { single_emitter_resonance, collective_resonance };

struct SweepSpec {
    SystemParams base;
    SweepVariable variable = SweepVariable::delta_over_omega_ph;
    double start = 0.0; // dimensionless Delta/omega_ph, or meV for pump sweeps
    double stop = 0.0;
    int count = 201;
    bool log_spaced = false; // pump sweeps on a logarithmic axis
    int n_max = 40;
    HamiltonianKind hamiltonian = HamiltonianKind::full;
    int workers = 0; // 0 = all hardware threads
    SolverOptions solver;
    double g2_floor = 1e-6;
    double truncation_limit = 1e-6;

    void validate() const;
    std::vector<double> grid() const;
};

struct SweepPoint {
    double x = 0.0;
    ObservableRecord record;
    bool failed = false;
    std::string flag; // empty when the point passed all thresholds
};

struct SweepSeries {
    SweepSpec spec;
    std::vector<SweepPoint> points;
};

struct WitnessPoint {
    double x = 0.0; // pump in meV
    double n_one = 0.0;
    double n_two = 0.0;
    std::optional<double> witness;
    ObservableRecord record; // two-emitter observables
    bool failed = false;
    std::string flag;
};

struct WitnessSeries {
    SweepSpec spec;
    DetuningChoice detuning;
    std::vector<WitnessPoint> points;
};

struct ResonancePeak {
    double position = 0.0;
    double height = 0.0;
    double fwhm = 0.0;
    bool fwhm_is_lower_bound = false;
    std::optional<double> g2_at_peak;
};

struct PredictionMatch {
    std::string label;
    double predicted = 0.0;
    double detected = 0.0;
    double deviation = 0.0;
};

struct ComparisonReport {
    std::vector<PredictionMatch> matches;
    std::vector<double> unmatched_peaks;
    std::vector<std::string> unmatched_predictions;
    double tolerance = 0.0;
    bool pass = false;
};

// Per-emitter detuning offsets are preserved when the reference detuning is
// scanned; pump sweeps convert the meV axis internally.
SystemParams params_at(const SweepSpec& spec, double x);

SweepSeries run_sweep(const SweepSpec& spec);

// Serial reference path; output bitwise identical to run_sweep.
SweepSeries run_sweep_serial(const SweepSpec& spec);

std::vector<ResonancePeak> find_peaks(const SweepSeries& series, double min_height = 0.5);

ComparisonReport compare_predictions(const std::vector<ResonancePeak>& peaks,
                                     const std::vector<ResonancePrediction>& predicted,
                                     double tol);

// Paired two-emitter/one-emitter pump sweep; the one-emitter reference is
// always driven at its own single-emitter resonance.
WitnessSeries run_witness_sweep(const SweepSpec& spec, DetuningChoice detuning);

} // namespace phaser

#endif
