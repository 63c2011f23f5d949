#pragma once

#include "qwoa/circulant.hpp"
#include "qwoa/combinadics.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qwoa {

// Slot assignment realising the indexing unitary on 2^qubits basis states:
// valid object bitstrings map to their rank in [0, M), invalid bitstrings
// fill the remaining slots in ascending basis order.
// Throws CapacityError when 2^qubits < M, ValidationError when ranking is
// not a bijection onto [0, M).
std::vector<std::size_t> embedding_permutation(const DomainCodec& codec, int qubits);

struct EmbeddingReport {
    std::size_t dim = 0;          // 2^qubits
    std::size_t m = 0;            // object count
    bool block_exact = false;     // conjugated adjacency == [C 0; 0 0]
    double max_walk_error = 0.0;  // full-space CTQW vs embedded index-space CTQW
};

// Materialises the object-space adjacency (objects adjacent iff their indices
// are circulant-adjacent), conjugates it by the indexing permutation, and
// checks the result is exactly the M x M circulant block with zero coupling
// to invalid rows.  Also cross-checks amplitudes: a full 2^qubits-space walk
// on the object adjacency (independent series evaluation of the matrix
// exponential) against the index-space walk lifted through the permutation.
// Only small registers are materialised (qubits <= 12).
EmbeddingReport validate_embedding(const DomainCodec& codec, const CirculantGraph& g,
                                   int qubits, double walk_time = 0.7);

} // namespace qwoa
