#include "phaser/model.hpp"

#include <cmath>
#include <stdexcept>

namespace phaser {

bool SystemParams::identical_emitters() const
{
    for (int i = 1; i < n_qd(); ++i)
        if (omega_cv[i] != omega_cv[0] || g[i] != g[0])
            return false;
    return true;
}

void SystemParams::validate() const
{
    if (omega_cv.empty())
        throw std::invalid_argument("SystemParams: omega_cv must not be empty");
    if (g.size() != omega_cv.size())
        throw std::invalid_argument("SystemParams: g and omega_cv length mismatch");
    if (!(omega_ph > 0.0))
        throw std::invalid_argument("SystemParams: omega_ph must be > 0");
    if (!(kappa > 0.0))
        throw std::invalid_argument("SystemParams: kappa must be > 0");
    if (gamma_R < 0.0)
        throw std::invalid_argument("SystemParams: gamma_R must be >= 0");
    if (Omega < 0.0)
        throw std::invalid_argument("SystemParams: Omega must be >= 0");
    for (double gi : g)
        if (gi < 0.0)
            throw std::invalid_argument("SystemParams: g must be >= 0");
}

SystemParams SystemParams::from_delta1(std::vector<double> omega_cv,
                                       double omega_ph, double delta1,
                                       double Omega, std::vector<double> g,
                                       double gamma_R, double kappa)
{
    SystemParams p;
    p.omega_L = omega_cv.at(0) + delta1;
    p.omega_cv = std::move(omega_cv);
    p.omega_ph = omega_ph;
    p.Omega = Omega;
    p.g = std::move(g);
    p.gamma_R = gamma_R;
    p.kappa = kappa;
    p.validate();
    return p;
}

SystemParams default_params(int n_qd, double delta1)
{
    return SystemParams::from_delta1(std::vector<double>(n_qd, 2.28), 0.011,
                                     delta1, 4.56e-4,
                                     std::vector<double>(n_qd, 2e-3), 1e-5,
                                     5e-7);
}

namespace {

// Builders only need structural consistency; full range validation happens
// at the configuration boundary.
void require_consistent(const SystemParams& params, const HilbertConfig& config)
{
    if (params.n_qd() != config.n_qd)
        throw std::invalid_argument("model: params/config emitter count mismatch");
    if (params.g.size() != params.omega_cv.size())
        throw std::invalid_argument("model: g and omega_cv length mismatch");
}

void require_identical(const SystemParams& params)
{
    if (!params.identical_emitters())
        throw std::invalid_argument(
            "model: effective-Hamiltonian expressions require identical emitters");
}

} // namespace

Operator build_h0(const SystemParams& params, const HilbertConfig& config)
{
    require_consistent(params, config);
    Operator h = params.omega_ph * boson_number(config);
    for (int i = 1; i <= config.n_qd; ++i)
        h = h + (params.delta(i - 1) / 2.0) *
                    emitter_operator(config, i, EmitterOp::sigma_z);
    return h;
}

Operator build_hi(const SystemParams& params, const HilbertConfig& config)
{
    require_consistent(params, config);
    Operator bpbd = boson_annihilation(config) + boson_creation(config);
    Operator h = Operator::zero(config);
    for (int i = 1; i <= config.n_qd; ++i) {
        Operator ne = emitter_operator(config, i, EmitterOp::excited_projector);
        Operator sx = emitter_operator(config, i, EmitterOp::sigma_x);
        h = h + params.g[i - 1] * (ne * bpbd) + params.Omega * sx;
    }
    return h;
}

std::vector<Dissipator> build_dissipators(const SystemParams& params,
                                          const HilbertConfig& config)
{
    require_consistent(params, config);
    std::vector<Dissipator> d;
    d.push_back({2.0 * params.kappa, boson_annihilation(config)});
    for (int i = 1; i <= config.n_qd; ++i)
        d.push_back({2.0 * params.gamma_R,
                     emitter_operator(config, i, EmitterOp::sigma_minus)});
    return d;
}

Operator build_sw_generator(const SystemParams& params, const HilbertConfig& config)
{
    require_consistent(params, config);
    require_identical(params);
    double delta = params.delta1();
    if (delta == 0.0 || params.omega_ph == 0.0)
        throw std::invalid_argument("build_sw_generator: Delta and omega_ph must be nonzero");

    const cplx i_unit(0.0, 1.0);
    Operator b = boson_annihilation(config);
    Operator bd = boson_creation(config);
    Operator s = Operator::zero(config);
    for (int i = 1; i <= config.n_qd; ++i) {
        Operator sm = emitter_operator(config, i, EmitterOp::sigma_minus);
        Operator sp = emitter_operator(config, i, EmitterOp::sigma_plus);
        Operator ne = emitter_operator(config, i, EmitterOp::excited_projector);
        s = s + (-i_unit * params.Omega / delta) * sm +
            (i_unit * params.Omega / delta) * sp +
            (-i_unit * params.g[0] / params.omega_ph) * (ne * bd) +
            (i_unit * params.g[0] / params.omega_ph) * (ne * b);
    }
    return s;
}

Operator build_h_eff(const SystemParams& params, const HilbertConfig& config,
                     bool include_qdqd)
{
    require_consistent(params, config);
    require_identical(params);
    EffectiveParams eff = effective_params(params);

    Operator b = boson_annihilation(config);
    Operator bd = boson_creation(config);
    Operator h = params.omega_ph * boson_number(config);
    for (int i = 1; i <= config.n_qd; ++i) {
        Operator sm = emitter_operator(config, i, EmitterOp::sigma_minus);
        Operator sp = emitter_operator(config, i, EmitterOp::sigma_plus);
        Operator ne = emitter_operator(config, i, EmitterOp::excited_projector);
        h = h + eff.omega_eff * ne + eff.g_eff * (sm * b + sp * bd);
    }
    if (include_qdqd) {
        for (int i = 1; i <= config.n_qd; ++i)
            for (int j = 1; j <= config.n_qd; ++j) {
                if (i == j)
                    continue;
                Operator ni = emitter_operator(config, i, EmitterOp::excited_projector);
                Operator nj = emitter_operator(config, j, EmitterOp::excited_projector);
                h = h - eff.qdqd_strength * (ni * nj);
            }
    }
    return h;
}

EffectiveParams effective_params(const SystemParams& params)
{
    params.validate();
    require_identical(params);
    double delta = params.delta1();
    if (delta == 0.0 || params.omega_ph == 0.0)
        throw std::invalid_argument("effective_params: Delta and omega_ph must be nonzero");
    double g = params.g[0];
    EffectiveParams eff;
    eff.omega_eff = -delta - 2.0 * params.Omega * params.Omega / delta -
                    g * g / params.omega_ph;
    eff.g_eff = 0.5 * params.Omega * g * (1.0 / delta + 1.0 / params.omega_ph);
    eff.qdqd_strength = g * g / params.omega_ph;
    return eff;
}

double h_eff_dropped_term_norm(const SystemParams& params,
                               const HilbertConfig& config)
{
    Operator h0 = build_h0(params, config);
    Operator hi = build_hi(params, config);
    Operator is = cplx(0.0, 1.0) * build_sw_generator(params, config);
    Operator h2 = h0 + 0.5 * commutator(is, hi);
    Operator diff = build_h_eff(params, config, true) - h2;
    // The closed form drops a constant energy shift; remove the identity
    // component before measuring what remains.
    cplx mean = diff.matrix().diagonal().sum() / cplx(diff.dim(), 0.0);
    return (diff - mean * Operator::identity(config)).max_norm();
}

std::vector<ResonancePrediction> predict_resonances(const SystemParams& params,
                                                    int n_emitters)
{
    params.validate();
    if (n_emitters < 1 || n_emitters > 2)
        throw std::invalid_argument(
            "predict_resonances: no closed form beyond two emitters");
    if (params.n_qd() < n_emitters)
        throw std::invalid_argument("predict_resonances: not enough emitters in params");

    double wph = params.omega_ph;
    std::vector<ResonancePrediction> out;
    if (n_emitters == 1) {
        out.push_back({"single_1", wph - params.g[0] * params.g[0] / wph});
        return out;
    }

    // Single-emitter resonances, reported as Delta_1: emitter i lases when
    // its own detuning hits omega_ph - g_i^2/omega_ph.
    for (int i = 0; i < 2; ++i) {
        double delta_i = wph - params.g[i] * params.g[i] / wph;
        double delta_1 = delta_i - (params.omega_cv[0] - params.omega_cv[i]);
        out.push_back({"single_" + std::to_string(i + 1), delta_1});
    }
    // Collective resonance; reduces to omega_ph - 2g^2/omega_ph for
    // identical emitters.
    double gsum = params.g[0] + params.g[1];
    double coll = wph - (params.omega_cv[0] - params.omega_cv[1]) / 2.0 -
                  gsum * gsum / (2.0 * wph);
    out.push_back({"collective", coll});
    return out;
}

} // namespace phaser
