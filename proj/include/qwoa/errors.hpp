#pragma once

#include <stdexcept>
#include <string>

namespace qwoa {

// Invalid parameter combination (k > n, empty alphabet, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed combinatorial object (unsorted combination, non-bijective map, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rank outside [0, M) or index outside a vector.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Vector lengths do not agree.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Domain too large to materialise (M over the configured cap, 2^n < M, ...).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical self-check failed (norm drift, embedding mismatch, non-PSD input).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qwoa
