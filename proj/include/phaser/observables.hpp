#ifndef PHASER_OBSERVABLES_HPP
#define PHASER_OBSERVABLES_HPP

#include "phaser/liouville.hpp"

#include <optional>
#include <vector>

namespace phaser {

struct ObservableRecord {
    double phonon_number = 0.0;
    std::optional<double> g2_zero; // empty below the phonon-number floor
    std::vector<double> excited_populations;
    double residual = 0.0;
    double truncation = 0.0;
};

cplx expectation(const DensityMatrix& rho, const Operator& op);

double phonon_number(const DensityMatrix& rho);

// <b^dag b^dag b b> / <b^dag b>^2 via the explicit normal-ordered operator;
// empty when <b^dag b> < floor.
std::optional<double> g2_zero(const DensityMatrix& rho, double floor = 1e-6);

std::vector<double> excited_populations(const DensityMatrix& rho);

// R = (n_two - 2 n_one) / (2 n_one).
double phonance_witness(double n_two, double n_one);

ObservableRecord make_record(const DensityMatrix& rho, double residual,
                             double g2_floor = 1e-6);

} // namespace phaser

#endif
