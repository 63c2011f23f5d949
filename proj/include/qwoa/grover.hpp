#pragma once

#include "qwoa/combinadics.hpp"
#include "qwoa/state.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace qwoa {

using SearchPredicate = std::function<bool(const DomainObject&)>;

// Marked-index mask over [0, M): predicate evaluated on every un-ranked object.
std::vector<bool> marked_mask(const DomainCodec& codec, const SearchPredicate& predicate,
                              std::size_t capacity_cap = std::size_t{1} << 26);

// One modified Grover iteration in index space:
// negate marked amplitudes, inverse DFT, negate index 0, DFT, global negation.
void grover_iteration(StateVector& s, const std::vector<bool>& marked);

// round(pi / (4 theta) - 1/2) with theta = arcsin(sqrt(k / M)), clamped >= 0.
std::uint64_t optimal_iterations(std::uint64_t m, std::uint64_t k);

// sin^2((2j + 1) theta): marked-subspace probability after j iterations from
// the uniform state.
double predicted_success(std::uint64_t m, std::uint64_t k, std::uint64_t iterations);

struct SearchResult {
    std::size_t m = 0;
    std::size_t marked_count = 0;              // k
    std::uint64_t iterations = 0;              // r
    double predicted = 0.0;                    // sin^2((2r+1) theta)
    std::vector<double> marked_probability;    // after 0..r iterations
    std::size_t sampled_index = 0;
    DomainObject sampled_object;
    bool sample_marked = false;
};

// Uniform start, r = optimal_iterations(M, k) iterations, seeded measurement.
SearchResult grover_search(const DomainCodec& codec, const SearchPredicate& predicate,
                           std::uint64_t seed);

} // namespace qwoa
