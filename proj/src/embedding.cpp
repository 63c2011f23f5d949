#include "qwoa/embedding.hpp"

#include "qwoa/errors.hpp"
#include "qwoa/state.hpp"

#include <cmath>
#include <complex>
#include <random>

namespace qwoa {

namespace {

constexpr int kMaxEmbeddingQubits = 12;

// exp(-i t A) psi for a sparse symmetric 0/1 adjacency given as neighbour
// lists, by scaling and squaring with a truncated series per round.
std::vector<cdouble> expm_apply(const std::vector<std::vector<std::uint32_t>>& neighbours,
                                double t, std::vector<cdouble> psi) {
    std::size_t dim = psi.size();
    std::size_t max_degree = 0;
    for (const auto& row : neighbours) max_degree = std::max(max_degree, row.size());
    if (max_degree == 0 || t == 0.0) return psi;

    int rounds_log2 = 0;
    while (std::abs(t) * static_cast<double>(max_degree) / std::ldexp(1.0, rounds_log2) > 0.25)
        ++rounds_log2;
    const std::size_t rounds = std::size_t{1} << rounds_log2;
    const cdouble step(0.0, -t / std::ldexp(1.0, rounds_log2));

    std::vector<cdouble> term(dim), next(dim);
    for (std::size_t round = 0; round < rounds; ++round) {
        term = psi;
        for (int k = 1; k <= 40; ++k) {
            for (std::size_t x = 0; x < dim; ++x) {
                cdouble acc = 0.0;
                for (std::uint32_t y : neighbours[x]) acc += term[y];
                next[x] = acc * step / static_cast<double>(k);
            }
            term.swap(next);
            double term_norm = 0.0;
            for (const cdouble& v : term) term_norm += std::norm(v);
            for (std::size_t x = 0; x < dim; ++x) psi[x] += term[x];
            if (term_norm < 1e-40) break;
        }
    }
    return psi;
}

} // namespace

std::vector<std::size_t> embedding_permutation(const DomainCodec& codec, int qubits) {
    if (qubits < 0 || qubits > kMaxEmbeddingQubits)
        throw CapacityError("embedding: qubit count outside materialisable range [0, 12]");
    if (!fits_size_t(codec.size()))
        throw CapacityError("embedding: domain too large");
    const std::size_t m = to_size_t(codec.size());
    const std::size_t dim = std::size_t{1} << qubits;
    if (dim < m)
        throw CapacityError("embedding: 2^qubits smaller than domain size M");

    std::vector<std::size_t> perm(dim);
    std::vector<bool> taken(m, false);
    std::size_t next_invalid = m;
    for (std::size_t b = 0; b < dim; ++b) {
        if (codec.valid_bits(b)) {
            BigInt r = codec.rank(codec.object_from_bits(b));
            if (r < 0 || r >= BigInt(m))
                throw ValidationError("embedding: rank outside [0, M)");
            std::size_t slot = to_size_t(r);
            if (taken[slot])
                throw ValidationError("embedding: two objects share one rank");
            taken[slot] = true;
            perm[b] = slot;
        } else {
            perm[b] = next_invalid++;
        }
    }
    if (next_invalid != dim)
        throw ValidationError("embedding: ranking does not cover [0, M)");
    return perm;
}

EmbeddingReport validate_embedding(const DomainCodec& codec, const CirculantGraph& g,
                                   int qubits, double walk_time) {
    const std::vector<std::size_t> perm = embedding_permutation(codec, qubits);
    const std::size_t dim = perm.size();
    const std::size_t m = to_size_t(codec.size());
    if (g.m() != m)
        throw DimensionError("embedding: graph order does not match domain size");

    EmbeddingReport report;
    report.dim = dim;
    report.m = m;

    const std::vector<double> row = g.adjacency_row();
    std::vector<bool> valid(dim);
    for (std::size_t b = 0; b < dim; ++b) valid[b] = perm[b] < m;

    // Object-space adjacency: x ~ y iff both valid and their indices are
    // circulant-adjacent.  Conjugate by the permutation and compare with
    // the expected [C 0; 0 0] block structure entrywise.
    std::vector<std::uint8_t> conjugated(dim * dim, 0);
    std::vector<std::vector<std::uint32_t>> neighbours(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        if (!valid[x]) continue;
        for (std::size_t y = 0; y < dim; ++y) {
            if (!valid[y]) continue;
            std::size_t offset = (perm[x] + m - perm[y]) % m;
            if (row[offset] != 0.0) {
                conjugated[perm[x] * dim + perm[y]] = 1;
                neighbours[x].push_back(static_cast<std::uint32_t>(y));
            }
        }
    }
    report.block_exact = true;
    for (std::size_t i = 0; i < dim && report.block_exact; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            std::uint8_t expected =
                (i < m && j < m && row[(i + m - j) % m] != 0.0) ? 1 : 0;
            if (conjugated[i * dim + j] != expected) {
                report.block_exact = false;
                break;
            }
        }
    }

    // Amplitude-level check: evolve a fixed pseudo-random full-space state
    // under the object-space adjacency and compare against the index-space
    // walk lifted back through the permutation.  Invalid slots are decoupled
    // and must stay untouched.
    std::mt19937_64 rng(0x51a3c0deULL);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<cdouble> full(dim);
    double norm2 = 0.0;
    for (cdouble& a : full) {
        a = cdouble(unit(rng), unit(rng));
        norm2 += std::norm(a);
    }
    for (cdouble& a : full) a /= std::sqrt(norm2);

    StateVector indexed(m);
    for (std::size_t b = 0; b < dim; ++b)
        if (valid[b]) indexed[perm[b]] = full[b];
    ctqw(indexed, eigenvalues(g), walk_time);

    std::vector<cdouble> evolved = expm_apply(neighbours, walk_time, full);
    double max_err = 0.0;
    for (std::size_t b = 0; b < dim; ++b) {
        cdouble expected = valid[b] ? indexed[perm[b]] : full[b];
        max_err = std::max(max_err, std::abs(evolved[b] - expected));
    }
    report.max_walk_error = max_err;
    return report;
}

} // namespace qwoa
