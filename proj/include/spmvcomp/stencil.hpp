#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spmvcomp/grid.hpp"

namespace spmvcomp {

using Vector = std::vector<double>;

/// Sparse matrix in compressed-row form, columns strictly ascending within
/// each row. Generated matrices are symmetric and carry their diagonal;
/// matrices built from explicit rows need not be.
struct StencilMatrix {
    std::int32_t n = 0;
    std::vector<std::int64_t> row_start;  // n+1 offsets into cols/vals
    std::vector<std::int32_t> cols;
    std::vector<double> vals;
    GridSpec grid{0, 0, 0};  // provenance only; excluded from equality

    std::int64_t nnz() const { return row_start.empty() ? 0 : row_start[n]; }
    std::int32_t row_nnz(std::int32_t i) const {
        return static_cast<std::int32_t>(row_start[i + 1] - row_start[i]);
    }
    std::span<const std::int32_t> row_cols(std::int32_t i) const {
        return {cols.data() + row_start[i], static_cast<std::size_t>(row_nnz(i))};
    }
    std::span<const double> row_vals(std::int32_t i) const {
        return {vals.data() + row_start[i], static_cast<std::size_t>(row_nnz(i))};
    }
};

bool operator==(const StencilMatrix& a, const StencilMatrix& b);

/// 27-point stencil matrix on a regular grid: the row of node (ix,iy,iz)
/// couples to every in-grid node (ix+dx, iy+dy, iz+dz), dx,dy,dz in {-1,0,1};
/// out-of-grid couplings are omitted. Diagonal/off-diagonal default to the
/// HPCG pair {26, -1}.
StencilMatrix generate_matrix(const GridSpec& spec, double diagonal = 26.0,
                              double off_diagonal = -1.0);

/// Builds a matrix from explicit per-row (column, value) pairs. Columns must
/// be strictly ascending and in [0, n). Symmetry is not required.
StencilMatrix stencil_from_rows(std::int32_t n,
                                const std::vector<std::vector<std::pair<std::int32_t, double>>>& rows);

bool is_symmetric(const StencilMatrix& m);

enum class VectorKind { ones, linear, random };

/// ones -> all 1.0; linear -> entry i = i; random -> deterministic in [0,1)
/// for a given seed (seed is required for this kind).
Vector make_test_vector(std::int64_t n, VectorKind kind,
                        std::optional<std::uint64_t> seed = std::nullopt);

/// Coordinate-format export, 1-based indices, lower triangle only
/// ("%%MatrixMarket matrix coordinate real symmetric"). The matrix must be
/// symmetric.
void write_matrix_market(const StencilMatrix& m, const std::filesystem::path& path);

}  // namespace spmvcomp
