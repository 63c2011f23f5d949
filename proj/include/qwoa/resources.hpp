#pragma once

#include <cstdint>
#include <string>

namespace qwoa {

// Dominant-term gate counts for the indexing circuits, unit leading constant.
// An order-of-magnitude tool: the formulas are asserted, not hardware truth.
enum class CircuitKind {
    CombinationBitstring, // n * k * ceil(log2 n)
    CombinationList,      // k^2 * ceil(log2 n)
    PermutationLehmer,    // n^2 * ceil(log2 n)
    BinomialFixedK,       // k * ceil(log2 n)
    BinomialFixedN,       // n * ceil(log2 n)
    Adder,                // ceil(log2 n)
    Comparator,           // ceil(log2 n)
};

struct CircuitCostModel {
    CircuitKind kind = CircuitKind::CombinationBitstring;
    std::uint64_t n = 1;
    std::uint64_t k = 0;
};

CircuitKind circuit_kind_from_string(const std::string& name);
std::string circuit_kind_name(CircuitKind kind);

std::uint64_t gate_count(const CircuitCostModel& model);

// Qubit counts for the two combination representations.
std::uint64_t bitstring_qubits(std::uint64_t n);                  // n
std::uint64_t list_qubits(std::uint64_t n, std::uint64_t k);      // k * ceil(log2 n)

enum class Representation { Bitstring, List };

struct RepresentationAdvice {
    Representation recommended = Representation::List;
    std::uint64_t bitstring_gates = 0;
    std::uint64_t list_gates = 0;
    std::uint64_t bitstring_space = 0;
    std::uint64_t list_space = 0;
};

// List representation wins while k is a small fraction of n; at
// k >= crossover * n the bitstring form is more space and time efficient.
RepresentationAdvice compare_representations(std::uint64_t n, std::uint64_t k,
                                             double crossover = 1.0);

} // namespace qwoa
