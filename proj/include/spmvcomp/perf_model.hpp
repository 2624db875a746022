#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spmvcomp/compress.hpp"
#include "spmvcomp/ell.hpp"

namespace spmvcomp {

enum class MatrixFormat { ell, vt, pattern, pattern_with_values };

const char* format_name(MatrixFormat f);  // "ell", "vt", "pattern", "pattern-values"
std::optional<MatrixFormat> parse_format(std::string_view name);

struct MachineSpec {
    double read_bandwidth = 75e9;  // bytes/second, sustained sequential read
    std::optional<double> peak_flops;
};

struct ByteBreakdown {
    double values = 0;        // matrix value payload (ELL only; tables are register-resident)
    double indices = 0;       // column indices / sorted column lists / displacement tables
    double ends = 0;          // per-value group end offsets
    double pattern_id = 0;    // per-row pattern ids
    double input_vector = 0;  // optional x-traffic term

    double total() const { return values + indices + ends + pattern_id + input_vector; }
    friend bool operator==(const ByteBreakdown&, const ByteBreakdown&) = default;
};

struct FormatCost {
    double bytes_per_row = 0;
    double flops_per_row = 0;
    double bytes_per_flop = 0;
    ByteBreakdown breakdown;
};

struct ModelOptions {
    /// The base model charges nothing for reading x, as a streaming bound on
    /// matrix traffic alone. This toggle adds 8 bytes per row (each distinct
    /// x element fetched once, everything else cache-resident).
    bool include_input_vector = false;
};

/// Analytic per-row cost of one SpMV for a row with row_nnz entries and a
/// value table of table_size entries:
///   ell                 -> row_nnz * (8 + 4)
///   vt                  -> (row_nnz + table_size) * 4
///   pattern             -> 4 + table_size * 4
///   pattern_with_values -> 4
/// flops_per_row = 2 * row_nnz for every format.
FormatCost format_cost(MatrixFormat f, int row_nnz, int table_size,
                       const ModelOptions& opts = {});

/// Read bandwidth (bytes/s) needed to sustain flops_per_second at this cost.
double required_bandwidth(double flops_per_second, const FormatCost& cost);

enum class LimitingResource { bandwidth, compute };

const char* limiting_resource_name(LimitingResource r);

struct RooflineEstimate {
    double predicted_flops = 0;
    LimitingResource limiting_resource = LimitingResource::bandwidth;
};

/// min(read_bandwidth / bytes_per_flop, peak_flops when given).
RooflineEstimate roofline(const FormatCost& cost, const MachineSpec& machine);

/// Exact byte audit of a concrete structure: bytes the SpMV kernel streams
/// per row (per-row arrays plus pattern tables amortized over rows). The
/// value table and file metadata are excluded; flops_per_row averages the
/// real nonzero count, so boundary rows are included.
FormatCost measured_cost(const EllMatrix& a);
FormatCost measured_cost(const VtCompressedMatrix& a);
FormatCost measured_cost(const PatternCompressedMatrix& a);

struct ModelRow {
    MatrixFormat format;
    FormatCost cost;
    RooflineEstimate estimate;
};

std::vector<ModelRow> model_table(const std::vector<MatrixFormat>& formats, int row_nnz,
                                  int table_size, const MachineSpec& machine,
                                  const ModelOptions& opts = {});

/// CSV columns, in order: format, bytes_per_row, bytes_per_flop,
/// predicted_gflops, limiting_resource.
std::string model_table_csv(const std::vector<ModelRow>& rows);
std::string model_table_json(const std::vector<ModelRow>& rows);

}  // namespace spmvcomp
