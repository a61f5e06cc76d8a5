#ifndef PHASER_OPERATOR_HPP
#define PHASER_OPERATOR_HPP

#include "phaser/hilbert.hpp"

#include <Eigen/SparseCore>

#include <complex>
#include <vector>

namespace phaser {

using cplx = std::complex<double>;
using SparseCd = Eigen::SparseMatrix<cplx>;
using Triplet = Eigen::Triplet<cplx>;

// Sparse complex square matrix on the composite space.  Exact zeros are
// dropped at construction; no magnitude-based pruning, so algebraic
// identities hold at machine precision.  Immutable after construction.
class Operator {
public:
    Operator(HilbertConfig config, SparseCd matrix);
    Operator(HilbertConfig config, const std::vector<Triplet>& entries);

    static Operator zero(const HilbertConfig& config);
    static Operator identity(const HilbertConfig& config);

    const HilbertConfig& config() const { return config_; }
    const SparseCd& matrix() const { return mat_; }
    int dim() const { return config_.dim(); }

    Operator adjoint() const;
    Operator scaled(cplx factor) const;
    double max_norm() const;
    bool is_hermitian(double tol = 0.0) const;

    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator*(cplx s, const Operator& a) { return a.scaled(s); }
    friend Operator operator*(double s, const Operator& a) { return a.scaled(s); }

private:
    HilbertConfig config_;
    SparseCd mat_;
};

Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

enum class EmitterOp { sigma_minus, sigma_plus, sigma_z, sigma_x, excited_projector };

// b|q,n> = sqrt(n)|q,n-1> on every emitter sector; b|q,0> = 0.
Operator boson_annihilation(const HilbertConfig& config);
Operator boson_creation(const HilbertConfig& config);
Operator boson_number(const HilbertConfig& config);

// Single-emitter operator embedded at slot `site` (1-based), identity
// elsewhere.  Sign convention: sigma_z = |v><v| - |c><c|, sigma_- = |v><c|.
Operator emitter_operator(const HilbertConfig& config, int site, EmitterOp kind);

} // namespace phaser

#endif
