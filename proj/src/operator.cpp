#include "phaser/operator.hpp"

#include <cmath>

namespace phaser {

namespace {

void require_same_config(const Operator& a, const Operator& b)
{
    if (a.config() != b.config())
        throw std::invalid_argument("Operator: dimension/config mismatch");
}

SparseCd pruned(SparseCd m)
{
    m.prune([](int, int, const cplx& v) { return v != cplx(0.0, 0.0); });
    m.makeCompressed();
    return m;
}

} // namespace

Operator::Operator(HilbertConfig config, SparseCd matrix)
    : config_(config), mat_(pruned(std::move(matrix)))
{
    if (mat_.rows() != config_.dim() || mat_.cols() != config_.dim())
        throw std::invalid_argument("Operator: matrix size does not match config");
}

Operator::Operator(HilbertConfig config, const std::vector<Triplet>& entries)
    : config_(config), mat_(config.dim(), config.dim())
{
    for (const auto& t : entries) {
        if (t.row() < 0 || t.row() >= config_.dim() || t.col() < 0 ||
            t.col() >= config_.dim())
            throw std::invalid_argument("Operator: entry index out of range");
    }
    mat_.setFromTriplets(entries.begin(), entries.end());
    mat_ = pruned(std::move(mat_));
}

Operator Operator::zero(const HilbertConfig& config)
{
    return Operator(config, SparseCd(config.dim(), config.dim()));
}

Operator Operator::identity(const HilbertConfig& config)
{
    SparseCd m(config.dim(), config.dim());
    m.setIdentity();
    return Operator(config, std::move(m));
}

Operator Operator::adjoint() const
{
    return Operator(config_, SparseCd(mat_.adjoint()));
}

Operator Operator::scaled(cplx factor) const
{
    return Operator(config_, SparseCd(factor * mat_));
}

double Operator::max_norm() const
{
    double m = 0.0;
    for (int k = 0; k < mat_.outerSize(); ++k)
        for (SparseCd::InnerIterator it(mat_, k); it; ++it)
            m = std::max(m, std::abs(it.value()));
    return m;
}

bool Operator::is_hermitian(double tol) const
{
    return (*this - adjoint()).max_norm() <= tol;
}

Operator operator+(const Operator& a, const Operator& b)
{
    require_same_config(a, b);
    return Operator(a.config(), SparseCd(a.mat_ + b.mat_));
}

Operator operator-(const Operator& a, const Operator& b)
{
    require_same_config(a, b);
    return Operator(a.config(), SparseCd(a.mat_ - b.mat_));
}

Operator operator*(const Operator& a, const Operator& b)
{
    require_same_config(a, b);
    return Operator(a.config(), SparseCd(a.mat_ * b.mat_));
}

Operator commutator(const Operator& a, const Operator& b)
{
    return a * b - b * a;
}

Operator anticommutator(const Operator& a, const Operator& b)
{
    return a * b + b * a;
}

Operator boson_annihilation(const HilbertConfig& config)
{
    std::vector<Triplet> t;
    for (int q = 0; q < config.qd_dim(); ++q)
        for (int n = 1; n <= config.n_max; ++n)
            t.emplace_back(config.index(q, n - 1), config.index(q, n),
                           std::sqrt(static_cast<double>(n)));
    return Operator(config, t);
}

Operator boson_creation(const HilbertConfig& config)
{
    return boson_annihilation(config).adjoint();
}

Operator boson_number(const HilbertConfig& config)
{
    std::vector<Triplet> t;
    for (int q = 0; q < config.qd_dim(); ++q)
        for (int n = 1; n <= config.n_max; ++n)
            t.emplace_back(config.index(q, n), config.index(q, n),
                           static_cast<double>(n));
    return Operator(config, t);
}

Operator emitter_operator(const HilbertConfig& config, int site, EmitterOp kind)
{
    if (site < 1 || site > config.n_qd)
        throw std::invalid_argument("emitter_operator: site out of range");

    // 2x2 blocks in the (v, c) basis: element (rb, cb) couples bit cb -> rb.
    // sigma_- = |v><c|, sigma_z = |v><v| - |c><c|.
    std::vector<Triplet> t;
    auto add_block = [&](int row_bit, int col_bit, cplx value) {
        for (int q = 0; q < config.qd_dim(); ++q) {
            if (config.emitter_bit(q, site) != col_bit)
                continue;
            int qr = q ^ ((col_bit ^ row_bit) << (config.n_qd - site));
            for (int n = 0; n <= config.n_max; ++n)
                t.emplace_back(config.index(qr, n), config.index(q, n), value);
        }
    };

    switch (kind) {
    case EmitterOp::sigma_minus:
        add_block(0, 1, 1.0);
        break;
    case EmitterOp::sigma_plus:
        add_block(1, 0, 1.0);
        break;
    case EmitterOp::sigma_z:
        add_block(0, 0, 1.0);
        add_block(1, 1, -1.0);
        break;
    case EmitterOp::sigma_x:
        add_block(0, 1, 1.0);
        add_block(1, 0, 1.0);
        break;
    case EmitterOp::excited_projector:
        add_block(1, 1, 1.0);
        break;
    }
    return Operator(config, t);
}

} // namespace phaser
