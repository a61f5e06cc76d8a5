#ifndef PHASER_MODEL_HPP
#define PHASER_MODEL_HPP

#include "phaser/operator.hpp"

#include <string>
#include <vector>

namespace phaser {

// hbar in meV*fs, pinned for bit-stable unit conversion.
inline constexpr double kHbarMeVfs = 658.2119569;

inline double mev_to_radfs(double mev) { return mev / kHbarMeVfs; }
inline double radfs_to_mev(double radfs) { return radfs * kHbarMeVfs; }

// All physical rates and frequencies in rad/fs.  The drive is a constant
// real CW pump; the per-emitter detuning Delta_i = omega_L - omega_cv[i] is
// derived, with Delta_1 the reporting reference.
struct SystemParams {
    std::vector<double> omega_cv; // per-emitter transition frequency
    double omega_ph = 0.0;        // cavity phonon frequency
    double omega_L = 0.0;         // drive frequency
    double Omega = 0.0;           // Rabi frequency
    std::vector<double> g;        // per-emitter electron-phonon coupling
    double gamma_R = 0.0;         // radiative decay
    double kappa = 0.0;           // cavity loss

    int n_qd() const { return static_cast<int>(omega_cv.size()); }
    double delta(int i) const { return omega_L - omega_cv.at(i); }
    double delta1() const { return delta(0); }
    bool identical_emitters() const;

    void validate() const;

    // omega_L derived from a reference detuning Delta_1 = omega_L - omega_cv[0].
    static SystemParams from_delta1(std::vector<double> omega_cv, double omega_ph,
                                    double delta1, double Omega,
                                    std::vector<double> g, double gamma_R,
                                    double kappa);
};

// Fig.-caption parameter set: omega_cv = 2.28, omega_ph = 0.011,
// Omega = 4.56e-4, g = 2e-3, Gamma_R = 1e-5, kappa = 5e-7 (all 1/fs).
SystemParams default_params(int n_qd, double delta1);

struct EffectiveParams {
    double omega_eff;      // -Delta - 2 Omega^2/Delta - g^2/omega_ph
    double g_eff;          // (Omega g/2)(1/Delta + 1/omega_ph)
    double qdqd_strength;  // g^2/omega_ph
};

struct ResonancePrediction {
    std::string label;
    double delta; // relative to omega_cv[0]
};

// H_0 = sum_i (Delta_i/2) sigma_z^i + omega_ph b^dag b  (hbar = 1).
Operator build_h0(const SystemParams& params, const HilbertConfig& config);

// H_I = sum_i [ g_i sigma_+^i sigma_-^i (b^dag + b) + Omega sigma_x^i ].
Operator build_hi(const SystemParams& params, const HilbertConfig& config);

struct Dissipator {
    double rate;
    Operator jump;
};

// [(2 kappa, b)] ++ [(2 Gamma_R, sigma_-^i)] with the explicit factor 2, so
// figure-caption rates are entered verbatim.
std::vector<Dissipator> build_dissipators(const SystemParams& params,
                                          const HilbertConfig& config);

// Hermitian generator S of the transformation that removes first-order
// electronic processes.  Identical emitters only.
Operator build_sw_generator(const SystemParams& params, const HilbertConfig& config);

// Tavis-Cummings-like effective Hamiltonian built term by term, optionally
// including the emitter-emitter density-density interaction
// -sum_{i!=j} (g^2/omega_ph) sigma_+^i sigma_-^i sigma_+^j sigma_-^j.
Operator build_h_eff(const SystemParams& params, const HilbertConfig& config,
                     bool include_qdqd);

EffectiveParams effective_params(const SystemParams& params);

// Max-norm of H_eff - (H_0 + (1/2)[iS, H_I]).  The closed-form H_eff drops
// two-phonon and counter-rotating second-order terms, so this is nonzero by
// construction; it is reported as a diagnostic, not asserted to vanish.
double h_eff_dropped_term_norm(const SystemParams& params,
                               const HilbertConfig& config);

// Analytic resonance detunings relative to omega_cv[0]; n_emitters in {1,2}.
std::vector<ResonancePrediction> predict_resonances(const SystemParams& params,
                                                    int n_emitters);

} // namespace phaser

#endif
