#ifndef PHASER_LIOUVILLE_HPP
#define PHASER_LIOUVILLE_HPP

#include "phaser/model.hpp"
#include "phaser/operator.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace phaser {

// Hermitian trace-one state on the composite space.
struct DensityMatrix {
    HilbertConfig config;
    Eigen::MatrixXcd matrix;

    static DensityMatrix maximally_mixed(const HilbertConfig& config);
    static DensityMatrix vacuum(const HilbertConfig& config);

    double trace_real() const { return matrix.trace().real(); }
    double hermiticity_error() const;
    double min_eigenvalue() const;

    // Throws if trace, Hermiticity, or positivity bounds are violated.
    void validate(double trace_tol = 1e-10, double herm_tol = 1e-10,
                  double positivity_floor = -1e-8) const;
};

// Total population in the top two Fock levels, summed over emitter sectors.
double truncation_metric(const DensityMatrix& rho);

// Column-stacked superoperator: vec(rho) has entry rho(r, c) at r + dim*c,
// so H rho -> (I (x) H) vec and rho H -> (H^T (x) I) vec.
struct Liouvillian {
    HilbertConfig config;
    SparseCd matrix; // dim^2 x dim^2

    Eigen::VectorXcd apply(const Eigen::VectorXcd& vec_rho) const;
    double max_norm() const;
    // Max absolute row sum; upper bound on the spectral radius.
    double inf_norm() const;
};

Liouvillian build_liouvillian(const Operator& h,
                              const std::vector<Dissipator>& dissipators);

Eigen::VectorXcd stack(const Eigen::MatrixXcd& rho);
Eigen::MatrixXcd unstack(const Eigen::VectorXcd& v, int dim);

// Orbit basis of vec space under simultaneous emitter permutations of row
// and column sectors.  Columns of `projector` are normalized orbit
// indicators; for a permutation-invariant Liouvillian the reduced matrix
// P^T L P acts exactly on the invariant subspace, which contains the unique
// steady state of an identical-emitter model.
struct SymmetricBasis {
    HilbertConfig config;
    SparseCd projector; // dim^2 x reduced_dim
    int reduced_dim() const { return static_cast<int>(projector.cols()); }
};

SymmetricBasis build_symmetric_basis(const HilbertConfig& config);

struct SolverOptions {
    std::optional<double> residual_tol; // default 1e-11 * ||L||_max
    int max_iters = 60;
    // Solve in the permutation-symmetric sector (identical emitters only);
    // the residual is still verified against the full Liouvillian.
    bool permutation_symmetric = false;
    bool check_degeneracy = false;
    bool force_dense = false;
};

struct SteadyStateResult {
    DensityMatrix rho;
    double residual;   // ||L vec(rho)||_max
    int iterations;
};

// Shifted sparse factorization of (L - sigma I), sigma = 1e-14, plus inverse
// power iteration from the maximally mixed state.  Dense null-space fallback
// for dim^2 <= 4096.
SteadyStateResult steady_state(const Liouvillian& l, const SolverOptions& opts = {});

struct PropagationResult {
    DensityMatrix rho;
    double trace_drift;
};

// Classic RK4 on dvec(rho)/dt = L vec(rho).  Enforces dt * ||L||_inf <= 2.5
// (||L||_inf bounds the spectral radius; Lindblad spectra sit in the closed
// left half plane, where the RK4 stability region covers |z| <= 2.5).
PropagationResult propagate(const DensityMatrix& rho0, const Liouvillian& l,
                            double t_final, double dt, bool parallel = true);

struct NoConvergenceError : std::runtime_error {
    double last_residual;
    explicit NoConvergenceError(double res);
};

struct DegenerateSteadyStateError : std::runtime_error {
    DegenerateSteadyStateError();
};

} // namespace phaser

#endif
