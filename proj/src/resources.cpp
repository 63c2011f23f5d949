#include "qwoa/resources.hpp"

#include "qwoa/errors.hpp"

namespace qwoa {

namespace {

std::uint64_t ceil_log2(std::uint64_t n) {
    std::uint64_t bits = 0;
    while ((std::uint64_t{1} << bits) < n) ++bits;
    return bits;
}

void check_model(const CircuitCostModel& model) {
    if (model.n < 1) throw ParameterError("gate_count: n must be >= 1");
    if (model.k > model.n) throw ParameterError("gate_count: need k <= n");
}

} // namespace

CircuitKind circuit_kind_from_string(const std::string& name) {
    if (name == "combination-bitstring") return CircuitKind::CombinationBitstring;
    if (name == "combination-list") return CircuitKind::CombinationList;
    if (name == "permutation-lehmer") return CircuitKind::PermutationLehmer;
    if (name == "binom-fixed-k") return CircuitKind::BinomialFixedK;
    if (name == "binom-fixed-n") return CircuitKind::BinomialFixedN;
    if (name == "adder") return CircuitKind::Adder;
    if (name == "comparator") return CircuitKind::Comparator;
    throw ParameterError("gate_count: unknown circuit '" + name + "'");
}

std::string circuit_kind_name(CircuitKind kind) {
    switch (kind) {
    case CircuitKind::CombinationBitstring: return "combination-bitstring";
    case CircuitKind::CombinationList: return "combination-list";
    case CircuitKind::PermutationLehmer: return "permutation-lehmer";
    case CircuitKind::BinomialFixedK: return "binom-fixed-k";
    case CircuitKind::BinomialFixedN: return "binom-fixed-n";
    case CircuitKind::Adder: return "adder";
    case CircuitKind::Comparator: return "comparator";
    }
    throw ParameterError("gate_count: unknown circuit kind");
}

std::uint64_t gate_count(const CircuitCostModel& model) {
    check_model(model);
    const std::uint64_t logn = ceil_log2(model.n);
    switch (model.kind) {
    case CircuitKind::CombinationBitstring: return model.n * model.k * logn;
    case CircuitKind::CombinationList: return model.k * model.k * logn;
    case CircuitKind::PermutationLehmer: return model.n * model.n * logn;
    case CircuitKind::BinomialFixedK: return model.k * logn;
    case CircuitKind::BinomialFixedN: return model.n * logn;
    case CircuitKind::Adder: return logn;
    case CircuitKind::Comparator: return logn;
    }
    throw ParameterError("gate_count: unknown circuit kind");
}

std::uint64_t bitstring_qubits(std::uint64_t n) { return n; }

std::uint64_t list_qubits(std::uint64_t n, std::uint64_t k) { return k * ceil_log2(n); }

RepresentationAdvice compare_representations(std::uint64_t n, std::uint64_t k,
                                             double crossover) {
    if (n < 1) throw ParameterError("compare_representations: n must be >= 1");
    if (k > n) throw ParameterError("compare_representations: need k <= n");
    RepresentationAdvice advice;
    advice.bitstring_gates = gate_count({CircuitKind::CombinationBitstring, n, k});
    advice.list_gates = gate_count({CircuitKind::CombinationList, n, k});
    advice.bitstring_space = bitstring_qubits(n);
    advice.list_space = list_qubits(n, k);
    advice.recommended = (static_cast<double>(k) < crossover * static_cast<double>(n))
                             ? Representation::List
                             : Representation::Bitstring;
    return advice;
}

} // namespace qwoa
