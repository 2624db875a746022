#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spmvcomp {

/// Row indices must fit a 4-byte signed integer: each stored column index is
/// one such integer, so the row count is capped at 2^31 - 1.
inline constexpr std::int64_t kMaxRows = (std::int64_t{1} << 31) - 1;

/// Regular 3D grid; one matrix row per node, numbered x-fastest:
/// row(ix,iy,iz) = ix + nx*(iy + ny*iz).
struct GridSpec {
    int nx = 1;
    int ny = 1;
    int nz = 1;

    std::int64_t rows() const {
        return static_cast<std::int64_t>(nx) * ny * nz;
    }

    /// All-zero dims mark a matrix whose generating grid is unknown
    /// (e.g. built from explicit rows or decompressed).
    bool known() const { return nx > 0 && ny > 0 && nz > 0; }

    std::int64_t node(int ix, int iy, int iz) const {
        return ix + static_cast<std::int64_t>(nx) * (iy + static_cast<std::int64_t>(ny) * iz);
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline void validate(const GridSpec& g) {
    if (g.nx < 1 || g.ny < 1 || g.nz < 1) {
        throw std::invalid_argument("grid dimensions must be >= 1, got " +
                                    std::to_string(g.nx) + "x" + std::to_string(g.ny) + "x" +
                                    std::to_string(g.nz));
    }
    if (g.rows() > kMaxRows) {
        throw std::invalid_argument("grid " + std::to_string(g.nx) + "x" + std::to_string(g.ny) +
                                    "x" + std::to_string(g.nz) + " has " +
                                    std::to_string(g.rows()) +
                                    " rows; column indices must fit a 4-byte signed integer");
    }
}

}  // namespace spmvcomp
