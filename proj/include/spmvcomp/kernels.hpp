#pragma once

#include <cstdint>
#include <span>

#include "spmvcomp/compress.hpp"
#include "spmvcomp/ell.hpp"
#include "spmvcomp/stencil.hpp"

namespace spmvcomp {

// Flop conventions: two flops (multiply + add) per matrix element for SpMV,
// 2n for dot and waxpby, 4*nnz per symmetric sweep (2*nnz per direction).
inline std::int64_t spmv_flops(std::int64_t nnz) { return 2 * nnz; }
inline std::int64_t dot_flops(std::int64_t n) { return 2 * n; }
inline std::int64_t waxpby_flops(std::int64_t n) { return 2 * n; }
inline std::int64_t symgs_flops(std::int64_t nnz) { return 4 * nnz; }

// y = Ax, overwrite semantics. Inputs are validated; summation order per
// kernel: ELL accumulates in slot (ascending-column) order; vt sums x within
// each value group in stored order, then adds one product per group in table
// order; pattern accumulates value*x per element in group order.
Vector spmv(const EllMatrix& a, const Vector& x);
Vector spmv(const VtCompressedMatrix& a, const Vector& x);
Vector spmv(const PatternCompressedMatrix& a, const Vector& x);

// Row-range kernels over pre-validated inputs, rows [begin, end). Output rows
// are disjoint, so ranges may run concurrently; results are bit-identical to
// the single-call form for any partition.
namespace unchecked {
void spmv_rows(const EllMatrix& a, std::span<const double> x, std::span<double> y,
               std::int32_t begin, std::int32_t end);
void spmv_rows(const VtCompressedMatrix& a, std::span<const double> x, std::span<double> y,
               std::int32_t begin, std::int32_t end);
void spmv_rows(const PatternCompressedMatrix& a, std::span<const double> x, std::span<double> y,
               std::int32_t begin, std::int32_t end);
}  // namespace unchecked

double dot(const Vector& u, const Vector& v);

Vector waxpby(double alpha, const Vector& x, double beta, const Vector& y);
void waxpby_into(double alpha, const Vector& x, double beta, const Vector& y, Vector& w);

/// One forward sweep (rows ascending) then one backward sweep (rows
/// descending) of Gauss-Seidel in natural order, in place:
/// x[i] <- (b[i] - sum_{j != i} a_ij x[j]) / a_ii using latest values.
/// Sequential by definition (loop-carried dependences).
void symgs_sweep(const StencilMatrix& m, Vector& x, const Vector& b);

}  // namespace spmvcomp
