#include "phaser/kernels.hpp"
#include "phaser/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

using namespace phaser;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_spmv_axpy()
{
    HilbertConfig config(2, 40);
    SystemParams p = default_params(2, 0.93388 * 0.011);
    Liouvillian l = build_liouvillian(build_h0(p, config) + build_hi(p, config),
                                      build_dissipators(p, config));
    kernels::RowSparseCd a(l.matrix);
    const long n = a.rows();
    std::printf("spmv: dim^2 = %ld, nnz = %ld\n", n, (long)a.nonZeros());

    Eigen::VectorXcd x(n), ys(n), yp(n);
    for (long i = 0; i < n; ++i)
        x(i) = cplx(std::sin(0.01 * i), std::cos(0.017 * i));

    const int reps = 50;
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r)
        kernels::spmv_serial(a, x.data(), ys.data());
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r)
        kernels::spmv_parallel(a, x.data(), yp.data());
    double tp = seconds_since(t0);
    bool same = std::memcmp(ys.data(), yp.data(), sizeof(cplx) * n) == 0;
    std::printf("spmv serial   %8.3f ms/iter\n", 1e3 * ts / reps);
    std::printf("spmv parallel %8.3f ms/iter  speedup %.2fx  bitwise %s\n",
                1e3 * tp / reps, ts / tp, same ? "identical" : "DIFFERENT");

    ys = x;
    yp = x;
    t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r)
        kernels::axpy_serial(n, cplx(1e-3, 2e-3), x.data(), ys.data());
    ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r)
        kernels::axpy_parallel(n, cplx(1e-3, 2e-3), x.data(), yp.data());
    tp = seconds_since(t0);
    same = std::memcmp(ys.data(), yp.data(), sizeof(cplx) * n) == 0;
    std::printf("axpy serial   %8.3f ms/iter\n", 1e3 * ts / reps);
    std::printf("axpy parallel %8.3f ms/iter  speedup %.2fx  bitwise %s\n",
                1e3 * tp / reps, ts / tp, same ? "identical" : "DIFFERENT");
}

void bench_sweep()
{
    SweepSpec spec;
    spec.base = default_params(1, 0.011);
    spec.start = 0.94;
    spec.stop = 0.99;
    spec.count = 12;
    spec.n_max = 40;

    auto t0 = std::chrono::steady_clock::now();
    SweepSeries ser = run_sweep_serial(spec);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    SweepSeries par = run_sweep(spec);
    double tp = seconds_since(t0);

    bool same = ser.points.size() == par.points.size();
    for (std::size_t i = 0; same && i < ser.points.size(); ++i)
        same = std::memcmp(&ser.points[i].record.phonon_number,
                           &par.points[i].record.phonon_number,
                           sizeof(double)) == 0 &&
               ser.points[i].record.g2_zero == par.points[i].record.g2_zero;
    std::printf("sweep (12 pts, N=1, n_max=40) serial %6.2f s, parallel %6.2f s, "
                "speedup %.2fx, results %s\n",
                ts, tp, ts / tp, same ? "bitwise identical" : "DIFFERENT");
}

} // namespace

int main()
{
    bench_spmv_axpy();
    bench_sweep();
    return 0;
}
