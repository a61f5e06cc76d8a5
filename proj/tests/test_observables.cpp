#include <doctest.h>

#include "phaser/observables.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

using namespace phaser;

namespace {

// Diagonal phonon state from an explicit Fock distribution, emitter in |v>.
DensityMatrix diagonal_state(const HilbertConfig& c,
                             const std::vector<double>& weights)
{
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(c.dim(), c.dim());
    double norm = 0.0;
    for (double w : weights)
        norm += w;
    for (int n = 0; n < static_cast<int>(weights.size()); ++n)
        m(c.index(0, n), c.index(0, n)) = weights[n] / norm;
    return {c, std::move(m)};
}

DensityMatrix coherent_state(const HilbertConfig& c, double nbar)
{
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(c.dim());
    double log_amp = -0.5 * nbar;
    for (int n = 0; n <= c.n_max; ++n) {
        psi(c.index(0, n)) = std::exp(log_amp);
        log_amp += 0.5 * std::log(nbar) - 0.5 * std::log(double(n + 1));
    }
    psi /= psi.norm();
    return {c, psi * psi.adjoint()};
}

} // namespace

TEST_CASE("expectation values of identity and Hermitian operators")
{
    HilbertConfig c{1, 4};
    DensityMatrix rho = DensityMatrix::maximally_mixed(c);
    CHECK(expectation(rho, Operator::identity(c)).real() ==
          doctest::Approx(1.0).epsilon(1e-14));
    // Hermitian observable on a Hermitian state: imaginary part at noise level
    Operator sx = emitter_operator(c, 1, EmitterOp::sigma_x);
    CHECK(std::abs(expectation(rho, sx).imag()) < 1e-14);
    CHECK_THROWS_AS(expectation(rho, Operator::identity(HilbertConfig{1, 5})),
                    std::invalid_argument);
}

TEST_CASE("phonon number on constructed states")
{
    HilbertConfig c{1, 5};
    CHECK(phonon_number(DensityMatrix::vacuum(c)) == 0.0);
    DensityMatrix two = diagonal_state(c, {0.0, 0.0, 1.0});
    CHECK(phonon_number(two) == doctest::Approx(2.0).epsilon(1e-14));
    DensityMatrix mix = diagonal_state(c, {0.5, 0.0, 0.0, 0.5});
    CHECK(phonon_number(mix) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("g2 distinguishes Fock, thermal, and coherent statistics")
{
    HilbertConfig c{1, 80};
    // single Fock phonon: g2 = 0
    DensityMatrix fock = diagonal_state(c, {0.0, 1.0});
    CHECK(*g2_zero(fock) == doctest::Approx(0.0).epsilon(1e-12));

    // thermal (geometric) distribution, nbar = 1: g2 = 2
    std::vector<double> geo(81);
    for (int n = 0; n <= 80; ++n)
        geo[n] = std::pow(0.5, n + 1);
    CHECK(*g2_zero(diagonal_state(c, geo)) == doctest::Approx(2.0).epsilon(1e-8));

    // coherent state, nbar = 6: g2 = 1
    CHECK(*g2_zero(coherent_state(c, 6.0)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("g2 oracle: explicit moment ratio on an arbitrary distribution")
{
    HilbertConfig c{1, 6};
    std::vector<double> w{0.15, 0.3, 0.25, 0.2, 0.1};
    DensityMatrix rho = diagonal_state(c, w);
    double n1 = 0.0, n2 = 0.0;
    for (int n = 0; n < static_cast<int>(w.size()); ++n) {
        n1 += n * w[n];
        n2 += double(n) * (n - 1) * w[n];
    }
    CHECK(*g2_zero(rho) == doctest::Approx(n2 / (n1 * n1)).epsilon(1e-13));
}

TEST_CASE("g2 is undefined below the phonon-number floor")
{
    HilbertConfig c{1, 4};
    CHECK(!g2_zero(DensityMatrix::vacuum(c)).has_value());
    DensityMatrix tiny = diagonal_state(c, {1.0 - 1e-8, 1e-8});
    CHECK(!g2_zero(tiny, 1e-6).has_value());
    CHECK(g2_zero(tiny, 1e-9).has_value());
}

TEST_CASE("g2 is invariant under a global phonon phase rotation")
{
    HilbertConfig c{1, 30};
    DensityMatrix rho = coherent_state(c, 4.0);
    double base = *g2_zero(rho);
    Eigen::VectorXcd phase(c.dim());
    for (int i = 0; i < c.dim(); ++i)
        phase(i) = std::polar(1.0, 0.37 * c.decode(i).second);
    DensityMatrix rot{c, phase.asDiagonal() * rho.matrix *
                             phase.conjugate().asDiagonal()};
    CHECK(*g2_zero(rot) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("excited populations per emitter")
{
    HilbertConfig c{2, 1};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(c.dim(), c.dim());
    // 30% |cv>, 70% |vv>: emitter 1 excited with probability 0.3
    m(c.index(2, 0), c.index(2, 0)) = 0.3;
    m(c.index(0, 0), c.index(0, 0)) = 0.7;
    DensityMatrix rho{c, std::move(m)};
    auto pops = excited_populations(rho);
    REQUIRE(pops.size() == 2);
    CHECK(pops[0] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(pops[1] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("phonance witness closed form")
{
    CHECK(phonance_witness(4.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(phonance_witness(2.0, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(phonance_witness(0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
    // scale invariance: R depends only on the ratio n_two/n_one
    for (double s : {0.1, 3.0, 250.0})
        CHECK(phonance_witness(2.6 * s, s) ==
              doctest::Approx(0.3).epsilon(1e-12));
    CHECK_THROWS_AS(phonance_witness(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(phonance_witness(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("record assembly")
{
    HilbertConfig c{1, 40};
    DensityMatrix rho = coherent_state(c, 6.0);
    ObservableRecord rec = make_record(rho, 3.2e-13);
    CHECK(rec.phonon_number == doctest::Approx(6.0).epsilon(1e-8));
    CHECK(rec.g2_zero.has_value());
    CHECK(rec.excited_populations.size() == 1);
    CHECK(rec.residual == 3.2e-13);
    CHECK(rec.truncation == truncation_metric(rho));
}
