#include "phaser/observables.hpp"

namespace phaser {

cplx expectation(const DensityMatrix& rho, const Operator& op)
{
    if (rho.config != op.config())
        throw std::invalid_argument("expectation: config mismatch");
    return (op.matrix() * rho.matrix).trace();
}

double phonon_number(const DensityMatrix& rho)
{
    return expectation(rho, boson_number(rho.config)).real();
}

std::optional<double> g2_zero(const DensityMatrix& rho, double floor)
{
    double n = phonon_number(rho);
    if (n < floor)
        return std::nullopt;
    Operator b = boson_annihilation(rho.config);
    Operator bd = boson_creation(rho.config);
    double num = expectation(rho, bd * bd * b * b).real();
    return num / (n * n);
}

std::vector<double> excited_populations(const DensityMatrix& rho)
{
    std::vector<double> pops;
    for (int i = 1; i <= rho.config.n_qd; ++i) {
        Operator proj = emitter_operator(rho.config, i, EmitterOp::excited_projector);
        pops.push_back(expectation(rho, proj).real());
    }
    return pops;
}

double phonance_witness(double n_two, double n_one)
{
    if (!(n_one > 0.0))
        throw std::invalid_argument("phonance_witness: n_one must be > 0");
    return (n_two - 2.0 * n_one) / (2.0 * n_one);
}

ObservableRecord make_record(const DensityMatrix& rho, double residual,
                             double g2_floor)
{
    ObservableRecord rec;
    rec.phonon_number = phonon_number(rho);
    rec.g2_zero = g2_zero(rho, g2_floor);
    rec.excited_populations = excited_populations(rho);
    rec.residual = residual;
    rec.truncation = truncation_metric(rho);
    return rec;
}

} // namespace phaser
