#ifndef PHASER_KERNELS_HPP
#define PHASER_KERNELS_HPP

#include <Eigen/SparseCore>

#include <complex>

namespace phaser::kernels {

using cplx = std::complex<double>;
using RowSparseCd = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

// y = A*x, one row at a time.  Serial reference implementation.
void spmv_serial(const RowSparseCd& a, const cplx* x, cplx* y);

// Same contract, rows distributed over OpenMP threads.  Row results are
// written independently, so the output is bitwise identical to the serial
// kernel for any thread count.
void spmv_parallel(const RowSparseCd& a, const cplx* x, cplx* y);

// axpy over raw spans: y += alpha * x.
void axpy_serial(std::size_t n, cplx alpha, const cplx* x, cplx* y);
void axpy_parallel(std::size_t n, cplx alpha, const cplx* x, cplx* y);

// Fused RK4 stage helpers.  Elementwise independent, so serial and parallel
// variants are bitwise identical for any thread count.
// out = x + alpha * k:
void xpay_serial(std::size_t n, const cplx* x, cplx alpha, const cplx* k, cplx* out);
void xpay_parallel(std::size_t n, const cplx* x, cplx alpha, const cplx* k, cplx* out);
// y += (h/6) k1 + (h/3) k2 + (h/3) k3 + (h/6) k4:
void rk4_update_serial(std::size_t n, double h, const cplx* k1, const cplx* k2,
                       const cplx* k3, const cplx* k4, cplx* y);
void rk4_update_parallel(std::size_t n, double h, const cplx* k1, const cplx* k2,
                         const cplx* k3, const cplx* k4, cplx* y);

} // namespace phaser::kernels

#endif
