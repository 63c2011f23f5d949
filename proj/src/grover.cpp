#include "qwoa/grover.hpp"

#include "qwoa/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qwoa {

std::vector<bool> marked_mask(const DomainCodec& codec, const SearchPredicate& predicate,
                              std::size_t capacity_cap) {
    if (!fits_size_t(codec.size()) || to_size_t(codec.size()) > capacity_cap)
        throw CapacityError("grover: domain size exceeds materialisation cap");
    const std::size_t m = to_size_t(codec.size());
    std::vector<bool> marked(m);
    for (std::size_t r = 0; r < m; ++r)
        marked[r] = predicate(codec.unrank(BigInt(r)));
    return marked;
}

void grover_iteration(StateVector& s, const std::vector<bool>& marked) {
    if (marked.size() != s.dim())
        throw DimensionError("grover: marked mask does not match state dimension");
    // U_# S_f U_#^dag realised directly on indices
    for (std::size_t x = 0; x < s.dim(); ++x)
        if (marked[x]) s[x] = -s[x];
    apply_dft(s, FourierDirection::Inverse);
    s[0] = -s[0];
    apply_dft(s, FourierDirection::Forward);
    for (std::size_t x = 0; x < s.dim(); ++x) s[x] = -s[x];
}

std::uint64_t optimal_iterations(std::uint64_t m, std::uint64_t k) {
    if (m == 0) throw ParameterError("grover: M must be >= 1");
    if (k == 0) throw ParameterError("grover: no marked objects, nothing to search for");
    if (k > m) throw ParameterError("grover: more marked objects than domain size");
    const double theta = std::asin(std::sqrt(static_cast<double>(k) / static_cast<double>(m)));
    const double raw = std::numbers::pi / (4.0 * theta) - 0.5;
    if (raw <= 0.0) return 0;
    return static_cast<std::uint64_t>(std::llround(raw));
}

double predicted_success(std::uint64_t m, std::uint64_t k, std::uint64_t iterations) {
    const double theta = std::asin(std::sqrt(static_cast<double>(k) / static_cast<double>(m)));
    const double s = std::sin(static_cast<double>(2 * iterations + 1) * theta);
    return s * s;
}

namespace {

double marked_probability(const StateVector& s, const std::vector<bool>& marked) {
    double p = 0.0;
    for (std::size_t x = 0; x < s.dim(); ++x)
        if (marked[x]) p += std::norm(s[x]);
    return p;
}

std::size_t sample_index(const StateVector& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    double cumulative = 0.0;
    for (std::size_t x = 0; x < s.dim(); ++x) {
        cumulative += std::norm(s[x]);
        if (u < cumulative) return x;
    }
    return s.dim() - 1;
}

} // namespace

SearchResult grover_search(const DomainCodec& codec, const SearchPredicate& predicate,
                           std::uint64_t seed) {
    const std::vector<bool> marked = marked_mask(codec, predicate);
    const std::size_t m = marked.size();
    std::size_t k = 0;
    for (bool b : marked) k += b ? 1 : 0;
    if (k == 0) throw ParameterError("grover: no marked objects, nothing to search for");

    SearchResult result;
    result.m = m;
    result.marked_count = k;
    result.iterations = optimal_iterations(m, k);
    result.predicted = predicted_success(m, k, result.iterations);

    StateVector state = StateVector::uniform(m);
    result.marked_probability.push_back(marked_probability(state, marked));
    for (std::uint64_t j = 0; j < result.iterations; ++j) {
        grover_iteration(state, marked);
        result.marked_probability.push_back(marked_probability(state, marked));
    }

    result.sampled_index = sample_index(state, seed);
    result.sampled_object = codec.unrank(BigInt(result.sampled_index));
    result.sample_marked = marked[result.sampled_index];
    return result;
}

} // namespace qwoa
