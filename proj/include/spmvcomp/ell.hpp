#pragma once

#include <cstdint>
#include <vector>

#include "spmvcomp/stencil.hpp"

namespace spmvcomp {

/// Padded ELL storage: width slots per row, row-major. Real entries keep the
/// source's ascending-column order; trailing padding slots hold value 0.0
/// with column = own row index, so the kernel needs no branch and never reads
/// x out of range.
struct EllMatrix {
    std::int32_t n = 0;
    std::int32_t width = 0;
    std::int64_t nnz = 0;  // real entries, padding excluded
    std::vector<double> values;        // n * width
    std::vector<std::int32_t> columns;  // n * width

    std::int64_t slot(std::int32_t row, std::int32_t k) const {
        return static_cast<std::int64_t>(row) * width + k;
    }
};

bool operator==(const EllMatrix& a, const EllMatrix& b);

/// width = max nonzeros per row of the source.
EllMatrix to_ell(const StencilMatrix& m);

/// Densify back to row form, dropping padding slots (value 0.0, column = row).
StencilMatrix to_stencil(const EllMatrix& a);

}  // namespace spmvcomp
