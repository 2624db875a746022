#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spmvcomp/stencil.hpp"

namespace spmvcomp {

/// Strictly ascending list of the distinct values appearing in a matrix.
/// Equality is exact bit-pattern equality of the 8-byte representation.
struct ValueTable {
    std::vector<double> entries;

    std::int32_t size() const { return static_cast<std::int32_t>(entries.size()); }
    double operator[](std::int32_t k) const { return entries[k]; }

    friend bool operator==(const ValueTable&, const ValueTable&) = default;
};

struct CompressOptions {
    /// The table-based schemes presume a small value table; exceeding this
    /// raises TableOverflowError instead of silently blowing up.
    std::size_t value_table_limit = 256;
};

/// Value-table compression of a matrix. Per row, the column indices are
/// reordered by (value ascending, column ascending) into sorted_columns, and
/// ends[i*m + k] is the exclusive end position (row-local) of the entries
/// whose value is table[k]; ends[i*m + m-1] equals the row's nonzero count.
///
/// sorted_columns is stored at fixed width (max row nonzeros) like ELL;
/// slots past a row's last end are padding (own row index) and never read.
struct VtCompressedMatrix {
    std::int32_t n = 0;
    std::int32_t width = 0;
    ValueTable table;
    std::vector<std::int32_t> sorted_columns;  // n * width
    std::vector<std::int32_t> ends;            // n * table.size()

    std::int64_t nnz() const;
    std::int32_t row_nnz(std::int32_t i) const { return ends[(i + 1) * static_cast<std::int64_t>(table.size()) - 1]; }
};

bool operator==(const VtCompressedMatrix& a, const VtCompressedMatrix& b);

/// One deduplicated row shape: column displacements relative to the row index,
/// in the same (value ascending, displacement ascending) order, plus the
/// exclusive group ends for each table value. Rows share a pattern id iff
/// both lists match exactly.
struct DisplacementPattern {
    std::vector<std::int32_t> displacements;
    std::vector<std::int32_t> ends;  // table.size() entries

    friend bool operator==(const DisplacementPattern&, const DisplacementPattern&) = default;
    friend auto operator<=>(const DisplacementPattern&, const DisplacementPattern&) = default;
};

/// Pattern-table compression: per row only a 4-byte pattern id; the
/// displacement lists live in a shared table. values_in_pattern selects the
/// byte model / file layout: when false the group ends are accounted (and
/// serialized) per row as the streaming kernel reads them; when true they are
/// folded into the pattern table and a row costs the id alone.
struct PatternCompressedMatrix {
    std::int32_t n = 0;
    ValueTable table;
    std::vector<DisplacementPattern> patterns;
    std::vector<std::int32_t> row_pattern;  // n pattern ids
    bool values_in_pattern = false;

    std::int64_t nnz() const;
    std::int32_t row_nnz(std::int32_t i) const {
        return patterns[row_pattern[i]].ends.back();
    }
};

bool operator==(const PatternCompressedMatrix& a, const PatternCompressedMatrix& b);

ValueTable scan_value_table(const StencilMatrix& m, std::size_t limit);

VtCompressedMatrix compress_values(const StencilMatrix& m, const CompressOptions& opts = {});

PatternCompressedMatrix compress_patterns(const StencilMatrix& m, bool values_in_pattern,
                                          const CompressOptions& opts = {});

/// Exact reconstruction: identical (row, column, value) triples as the
/// source, columns re-sorted ascending.
StencilMatrix decompress(const VtCompressedMatrix& c);
StencilMatrix decompress(const PatternCompressedMatrix& c);

/// Throw IntegrityError if the structure violates its invariants
/// (non-monotone ends, out-of-range columns or pattern ids, ...).
void validate(const VtCompressedMatrix& c);
void validate(const PatternCompressedMatrix& c);

}  // namespace spmvcomp
