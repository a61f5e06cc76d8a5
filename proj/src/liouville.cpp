#include "phaser/liouville.hpp"

#include "phaser/kernels.hpp"

#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>
#ifdef PHASER_USE_UMFPACK
#include <Eigen/UmfPackSupport>
#endif

#include <algorithm>
#include <cmath>
#include <numeric>

namespace phaser {

NoConvergenceError::NoConvergenceError(double res)
    : std::runtime_error("steady_state: inverse iteration did not converge, last residual " +
                         std::to_string(res)),
      last_residual(res)
{
}

DegenerateSteadyStateError::DegenerateSteadyStateError()
    : std::runtime_error("steady_state: Liouvillian kernel dimension > 1")
{
}

DensityMatrix DensityMatrix::maximally_mixed(const HilbertConfig& config)
{
    int d = config.dim();
    return {config, Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d)};
}

DensityMatrix DensityMatrix::vacuum(const HilbertConfig& config)
{
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(config.dim(), config.dim());
    m(0, 0) = 1.0;
    return {config, std::move(m)};
}

double DensityMatrix::hermiticity_error() const
{
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const
{
    Eigen::MatrixXcd h = 0.5 * (matrix + matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

void DensityMatrix::validate(double trace_tol, double herm_tol,
                             double positivity_floor) const
{
    if (std::abs(trace_real() - 1.0) > trace_tol ||
        std::abs(matrix.trace().imag()) > trace_tol)
        throw std::runtime_error("DensityMatrix: trace deviates from 1");
    if (hermiticity_error() > herm_tol)
        throw std::runtime_error("DensityMatrix: not Hermitian");
    if (min_eigenvalue() < positivity_floor)
        throw std::runtime_error("DensityMatrix: negative eigenvalue beyond floor");
}

double truncation_metric(const DensityMatrix& rho)
{
    const HilbertConfig& c = rho.config;
    double pop = 0.0;
    for (int q = 0; q < c.qd_dim(); ++q) {
        pop += rho.matrix(c.index(q, c.n_max), c.index(q, c.n_max)).real();
        if (c.n_max >= 1)
            pop += rho.matrix(c.index(q, c.n_max - 1), c.index(q, c.n_max - 1)).real();
    }
    return pop;
}

Eigen::VectorXcd stack(const Eigen::MatrixXcd& rho)
{
    return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

Eigen::MatrixXcd unstack(const Eigen::VectorXcd& v, int dim)
{
    return Eigen::Map<const Eigen::MatrixXcd>(v.data(), dim, dim);
}

Eigen::VectorXcd Liouvillian::apply(const Eigen::VectorXcd& vec_rho) const
{
    return matrix * vec_rho;
}

double Liouvillian::max_norm() const
{
    double m = 0.0;
    for (int k = 0; k < matrix.outerSize(); ++k)
        for (SparseCd::InnerIterator it(matrix, k); it; ++it)
            m = std::max(m, std::abs(it.value()));
    return m;
}

double Liouvillian::inf_norm() const
{
    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(matrix.rows());
    for (int k = 0; k < matrix.outerSize(); ++k)
        for (SparseCd::InnerIterator it(matrix, k); it; ++it)
            row_sums[it.row()] += std::abs(it.value());
    return row_sums.size() == 0 ? 0.0 : row_sums.maxCoeff();
}

Liouvillian build_liouvillian(const Operator& h,
                              const std::vector<Dissipator>& dissipators)
{
    const HilbertConfig& config = h.config();
    for (const auto& d : dissipators)
        if (d.jump.config() != config)
            throw std::invalid_argument("build_liouvillian: config mismatch");

    const int dim = config.dim();
    SparseCd eye(dim, dim);
    eye.setIdentity();

    const cplx minus_i(0.0, -1.0);
    SparseCd l = minus_i * (kroneckerProduct(eye, h.matrix()).eval() -
                            kroneckerProduct(SparseCd(h.matrix().transpose()), eye).eval());
    for (const auto& d : dissipators) {
        const SparseCd& x = d.jump.matrix();
        SparseCd xdx = (SparseCd(x.adjoint()) * x).pruned();
        l += d.rate * (kroneckerProduct(SparseCd(x.conjugate()), x).eval() -
                       0.5 * kroneckerProduct(eye, xdx).eval() -
                       0.5 * kroneckerProduct(SparseCd(xdx.transpose()), eye).eval());
    }
    l.prune([](int, int, const cplx& v) { return v != cplx(0.0, 0.0); });
    l.makeCompressed();
    return {config, std::move(l)};
}

namespace {

// Apply a site permutation to a sector bitstring: bit j (MSB-first) of the
// result is bit perm[j] of q.
int permute_bits(int q, const std::vector<int>& perm, int n_qd)
{
    int out = 0;
    for (int j = 0; j < n_qd; ++j) {
        int bit = (q >> (n_qd - 1 - perm[j])) & 1;
        out |= bit << (n_qd - 1 - j);
    }
    return out;
}

} // namespace

SymmetricBasis build_symmetric_basis(const HilbertConfig& config)
{
    const int n_qd = config.n_qd;
    const int qd = config.qd_dim();
    const int df = config.fock_dim();
    const int dim = config.dim();

    std::vector<std::vector<int>> perms;
    std::vector<int> p(n_qd);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<int> orbit_of(qd * qd, -1);
    std::vector<std::vector<std::pair<int, int>>> orbits;
    for (int q = 0; q < qd; ++q)
        for (int qp = 0; qp < qd; ++qp) {
            if (orbit_of[q * qd + qp] >= 0)
                continue;
            std::vector<std::pair<int, int>> orb;
            for (const auto& pm : perms) {
                int a = permute_bits(q, pm, n_qd);
                int b = permute_bits(qp, pm, n_qd);
                if (orbit_of[a * qd + b] < 0) {
                    orbit_of[a * qd + b] = static_cast<int>(orbits.size());
                    orb.emplace_back(a, b);
                }
            }
            orbits.push_back(std::move(orb));
        }

    const int nred = static_cast<int>(orbits.size()) * df * df;
    std::vector<Triplet> trip;
    trip.reserve(static_cast<std::size_t>(dim) * dim);
    for (int oi = 0; oi < static_cast<int>(orbits.size()); ++oi) {
        const double w = 1.0 / std::sqrt(static_cast<double>(orbits[oi].size()));
        for (const auto& [q, qp] : orbits[oi])
            for (int n = 0; n < df; ++n)
                for (int np = 0; np < df; ++np) {
                    int full = config.index(q, n) + dim * config.index(qp, np);
                    int red = oi * df * df + n + df * np;
                    trip.emplace_back(full, red, w);
                }
    }
    SparseCd proj(static_cast<long>(dim) * dim, nred);
    proj.setFromTriplets(trip.begin(), trip.end());
    proj.makeCompressed();
    return {config, std::move(proj)};
}

namespace {

// Factorization backend; UMFPACK when enabled, Eigen SparseLU otherwise.
class SparseFactorization {
public:
    void compute(const SparseCd& a)
    {
#ifdef PHASER_USE_UMFPACK
        // Nested-dissection ordering: the Liouvillian couples Fock indices
        // like a 2-D grid, where fill-reducing separators beat COLAMD by a
        // wide margin in both time and memory.
        solver_.umfpackControl()[UMFPACK_ORDERING] = UMFPACK_ORDERING_METIS;
        solver_.compute(a);
        if (solver_.info() != Eigen::Success)
            throw std::runtime_error("steady_state: sparse factorization failed");
#else
        solver_.isSymmetric(false);
        solver_.compute(a);
        if (solver_.info() != Eigen::Success)
            throw std::runtime_error("steady_state: sparse factorization failed");
#endif
    }
    // UMFPACK cannot solve in place; always materialize into a fresh vector.
    Eigen::VectorXcd solve(const Eigen::VectorXcd& b)
    {
        Eigen::VectorXcd x = solver_.solve(b);
        return x;
    }

private:
#ifdef PHASER_USE_UMFPACK
    Eigen::UmfPackLU<SparseCd> solver_;
#else
    Eigen::SparseLU<SparseCd, Eigen::COLAMDOrdering<int>> solver_;
#endif
};

DensityMatrix normalized_state(const Eigen::VectorXcd& vec_full,
                               const HilbertConfig& config)
{
    Eigen::MatrixXcd rho = unstack(vec_full, config.dim());
    rho = 0.5 * (rho + rho.adjoint()).eval();
    cplx tr = rho.trace();
    if (std::abs(tr) < 1e-300)
        throw std::runtime_error("steady_state: traceless iteration vector");
    rho /= tr;
    return {config, std::move(rho)};
}

SteadyStateResult dense_null_space(const Liouvillian& l)
{
    Eigen::MatrixXcd dense(l.matrix);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const int n = static_cast<int>(sv.size());
    // Kernel degeneracy: a second singular value at the numerical noise
    // floor of the spectrum.
    double floor = sv(0) * 1e-10;
    if (n >= 2 && sv(n - 2) < floor)
        throw DegenerateSteadyStateError();
    Eigen::VectorXcd v = svd.matrixV().col(n - 1);
    DensityMatrix rho = normalized_state(v, l.config);
    double residual = l.apply(stack(rho.matrix)).cwiseAbs().maxCoeff();
    return {std::move(rho), residual, 0};
}

} // namespace

SteadyStateResult steady_state(const Liouvillian& l, const SolverOptions& opts)
{
    const HilbertConfig& config = l.config;
    const int dim = config.dim();
    const long vdim = static_cast<long>(dim) * dim;
    const double tol = opts.residual_tol.value_or(1e-11 * l.max_norm());

    if (opts.force_dense) {
        if (vdim > 4096)
            throw std::invalid_argument("steady_state: dense path limited to dim^2 <= 4096");
        return dense_null_space(l);
    }

    SparseCd reduced_or_full;
    SparseCd proj; // empty when solving in the full space
    if (opts.permutation_symmetric && config.n_qd > 1) {
        SymmetricBasis basis = build_symmetric_basis(config);
        proj = std::move(basis.projector);
        reduced_or_full = (SparseCd(proj.transpose()) * l.matrix * proj).pruned();
    } else {
        reduced_or_full = l.matrix;
    }
    const long n = reduced_or_full.rows();

    SparseCd shift(n, n);
    shift.setIdentity();
    SparseCd a = reduced_or_full - 1e-14 * shift;
    a.makeCompressed();

    SparseFactorization lu;
    try {
        lu.compute(a);
    } catch (const std::runtime_error&) {
        if (vdim <= 4096)
            return dense_null_space(l);
        throw;
    }

    Eigen::VectorXcd v0 = stack(DensityMatrix::maximally_mixed(config).matrix);
    Eigen::VectorXcd v = proj.size() ? Eigen::VectorXcd(proj.adjoint() * v0) : v0;

    double residual = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= opts.max_iters; ++it) {
        v = lu.solve(v);
        v /= v.norm();
        Eigen::VectorXcd full = proj.size() ? Eigen::VectorXcd(proj * v) : v;
        DensityMatrix rho = normalized_state(full, config);
        residual = l.apply(stack(rho.matrix)).cwiseAbs().maxCoeff();
        if (residual < tol) {
            if (opts.check_degeneracy) {
                // Second inverse-iteration run, kept orthogonal to the
                // converged kernel vector.
                Eigen::VectorXcd vk = full / full.norm();
                Eigen::VectorXcd w(vdim);
                for (long i = 0; i < vdim; ++i)
                    w(i) = cplx(std::cos(0.7 * static_cast<double>(i) + 0.3),
                                std::sin(1.3 * static_cast<double>(i)));
                Eigen::VectorXcd wr = proj.size() ? Eigen::VectorXcd(proj.adjoint() * w) : w;
                Eigen::VectorXcd vkr = proj.size() ? Eigen::VectorXcd(proj.adjoint() * vk) : vk;
                for (int k = 0; k < opts.max_iters; ++k) {
                    wr = lu.solve(wr);
                    wr -= vkr * vkr.dot(wr);
                    double nw = wr.norm();
                    if (nw == 0.0)
                        break;
                    wr /= nw;
                    Eigen::VectorXcd wfull = proj.size() ? Eigen::VectorXcd(proj * wr) : wr;
                    double res2 = (l.apply(wfull)).cwiseAbs().maxCoeff();
                    if (res2 < tol)
                        throw DegenerateSteadyStateError();
                    if (res2 > 1e3 * tol && k >= 4)
                        break;
                }
            }
            return {std::move(rho), residual, it};
        }
    }
    throw NoConvergenceError(residual);
}

PropagationResult propagate(const DensityMatrix& rho0, const Liouvillian& l,
                            double t_final, double dt, bool parallel)
{
    if (rho0.config != l.config)
        throw std::invalid_argument("propagate: config mismatch");
    if (!(dt > 0.0))
        throw std::invalid_argument("propagate: dt must be > 0");
    // ||L||_inf bounds the spectral radius; the RK4 stability region
    // contains the left-half-plane disk of radius 2.5 (imaginary-axis
    // limit 2*sqrt(2)), and Lindblad spectra have Re(lambda) <= 0.
    if (dt * l.inf_norm() > 2.5)
        throw std::invalid_argument(
            "propagate: dt violates stability bound dt*||L||_inf <= 2.5");

    kernels::RowSparseCd lrow(l.matrix);
    const long n = lrow.rows();
    auto spmv = parallel ? kernels::spmv_parallel : kernels::spmv_serial;
    auto xpay = parallel ? kernels::xpay_parallel : kernels::xpay_serial;
    auto rk4 = parallel ? kernels::rk4_update_parallel : kernels::rk4_update_serial;

    Eigen::VectorXcd y = stack(rho0.matrix);
    Eigen::VectorXcd k1(n), k2(n), k3(n), k4(n), tmp(n);
    double t = 0.0;
    const double trace0 = rho0.matrix.trace().real();
    while (t < t_final - 1e-12 * t_final) {
        double h = std::min(dt, t_final - t);
        spmv(lrow, y.data(), k1.data());
        xpay(n, y.data(), 0.5 * h, k1.data(), tmp.data());
        spmv(lrow, tmp.data(), k2.data());
        xpay(n, y.data(), 0.5 * h, k2.data(), tmp.data());
        spmv(lrow, tmp.data(), k3.data());
        xpay(n, y.data(), h, k3.data(), tmp.data());
        spmv(lrow, tmp.data(), k4.data());
        rk4(n, h, k1.data(), k2.data(), k3.data(), k4.data(), y.data());
        t += h;
    }
    DensityMatrix out{l.config, unstack(y, l.config.dim())};
    double drift = std::abs(out.matrix.trace().real() - trace0);
    return {std::move(out), drift};
}

} // namespace phaser
