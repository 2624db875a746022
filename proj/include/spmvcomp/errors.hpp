#pragma once

#include <stdexcept>
#include <string>

namespace spmvcomp {

/// Distinct matrix values exceeded the configured value-table limit.
class TableOverflowError : public std::runtime_error {
public:
    explicit TableOverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A compressed structure failed an internal consistency check
/// (non-monotone ends, pattern id out of range, column out of range, ...).
class IntegrityError : public std::runtime_error {
public:
    explicit IntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// CG produced a non-finite quantity; carries the iteration it happened in.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(int iteration, const std::string& msg)
        : std::runtime_error(msg), iteration_(iteration) {}
    int iteration() const noexcept { return iteration_; }

private:
    int iteration_;
};

/// A benchmark kernel's output did not match the ELL baseline.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File could not be read, written, or parsed.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spmvcomp
