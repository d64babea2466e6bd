#pragma once

#include <stdexcept>
#include <string>

namespace facelatt {

/// Malformed or inconsistent caller input (bad indices, capacity mismatch,
/// validation failure, unparsable file). CLI maps this to exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation was refused because it would exceed a configured size guard
/// (exponential closure, too many faces, ...). CLI maps this to exit code 2.
struct SizeGuardError : std::runtime_error {
    explicit SizeGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant failed (e.g. a symmetry image of a ray is missing
/// from the ray list). Indicates a bug or corrupt data. CLI exit code 3.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace facelatt
