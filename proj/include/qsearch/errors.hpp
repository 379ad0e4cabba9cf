#pragma once

#include <stdexcept>
#include <string>

namespace qsearch {

// Parameter outside its documented range (qubit counts, indices, M).
struct RangeError : std::invalid_argument {
    explicit RangeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Operands with incompatible dimensions.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A state or matrix failed a structural invariant (norm, unitarity,
// Hermiticity, trace). Raised, never silently repaired.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qsearch
