#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spmvcomp/stencil.hpp"

namespace spmvcomp {

enum class SpmvBackend { ell, vt, pattern };

const char* backend_name(SpmvBackend b);

struct CgConfig {
    int max_iterations = 500;
    double tolerance = 1e-8;  // relative residual ||r||2 / ||b||2
    int symgs_sweeps = 0;     // 0 = unpreconditioned, >= 1 = SymGS sweeps per application
    SpmvBackend backend = SpmvBackend::ell;
};

struct OpStats {
    std::int64_t calls = 0;
    std::int64_t flops = 0;
    double seconds = 0.0;
};

struct CgReport {
    int iterations = 0;
    bool converged = false;
    std::vector<double> residual_history;  // iterations+1 entries, [0] = 1.0
    std::int64_t flops_total = 0;
    std::map<std::string, OpStats> per_op;  // "spmv", "dot", "waxpby", "precond"

    double final_residual() const { return residual_history.back(); }
};

/// Preconditioned conjugate gradient with x0 = 0. The preconditioner applies
/// symgs_sweeps symmetric Gauss-Seidel sweeps from a zero initial guess on
/// the uncompressed matrix; SpMV runs on the configured compressed backend.
/// Each iteration performs exactly 1 SpMV, 3 dots and 3 waxpbys.
/// Throws DivergenceError if a non-finite value appears.
std::pair<Vector, CgReport> cg_solve(const StencilMatrix& m, const Vector& b,
                                     const CgConfig& cfg = {});

}  // namespace spmvcomp
