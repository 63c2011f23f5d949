#include "qwoa/circulant.hpp"

#include "qwoa/errors.hpp"
#include "qwoa/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qwoa {

CirculantGraph::CirculantGraph(std::size_t m, std::vector<std::size_t> generators,
                               GraphFamily family)
    : m_(m), generators_(std::move(generators)), family_(family) {}

CirculantGraph CirculantGraph::complete(std::size_t m) {
    if (m < 2) throw ParameterError("complete graph: need M >= 2");
    std::vector<std::size_t> gen;
    for (std::size_t g = 1; g <= m / 2; ++g) gen.push_back(g);
    return CirculantGraph(m, std::move(gen), GraphFamily::Complete);
}

CirculantGraph CirculantGraph::cycle(std::size_t m) {
    if (m < 2) throw ParameterError("cycle graph: need M >= 2");
    return CirculantGraph(m, {1}, GraphFamily::Cycle);
}

CirculantGraph CirculantGraph::mobius_ladder(std::size_t m) {
    if (m < 4 || m % 2 != 0)
        throw ParameterError("mobius ladder: need even M >= 4");
    return CirculantGraph(m, {1, m / 2}, GraphFamily::MobiusLadder);
}

CirculantGraph CirculantGraph::from_generators(std::size_t m, std::vector<std::size_t> generators) {
    if (m < 2) throw ParameterError("circulant graph: need M >= 2");
    std::vector<std::size_t> folded;
    for (std::size_t g : generators) {
        g %= m;
        if (g == 0) throw ParameterError("circulant graph: offset 0 (self-loop) not allowed");
        if (g > m / 2) g = m - g;
        folded.push_back(g);
    }
    std::sort(folded.begin(), folded.end());
    folded.erase(std::unique(folded.begin(), folded.end()), folded.end());
    if (folded.empty()) throw ParameterError("circulant graph: empty generating set");
    return CirculantGraph(m, std::move(folded), GraphFamily::General);
}

std::size_t CirculantGraph::degree() const {
    std::size_t d = 0;
    for (std::size_t g : generators_)
        d += (2 * g == m_) ? 1 : 2; // the antipodal offset pairs with itself
    return d;
}

std::vector<double> CirculantGraph::adjacency_row() const {
    std::vector<double> row(m_, 0.0);
    for (std::size_t g : generators_) {
        row[g] = 1.0;
        row[m_ - g] = 1.0;
    }
    return row;
}

std::string CirculantGraph::describe() const {
    std::ostringstream out;
    switch (family_) {
    case GraphFamily::Complete: out << "complete(M=" << m_ << ")"; return out.str();
    case GraphFamily::Cycle: out << "cycle(M=" << m_ << ")"; return out.str();
    case GraphFamily::MobiusLadder: out << "mobius-ladder(M=" << m_ << ")"; return out.str();
    case GraphFamily::General: break;
    }
    out << "circulant(M=" << m_ << ", generators={";
    for (std::size_t i = 0; i < generators_.size(); ++i)
        out << (i ? "," : "") << generators_[i];
    out << "})";
    return out.str();
}

Spectrum eigenvalues(const CirculantGraph& g) {
    const std::size_t m = g.m();
    const double w = 2.0 * std::numbers::pi / static_cast<double>(m);
    Spectrum s;
    s.eigenvalues.resize(m);

    switch (g.family()) {
    case GraphFamily::Complete:
        s.eigenvalues[0] = static_cast<double>(m - 1);
        for (std::size_t j = 1; j < m; ++j) s.eigenvalues[j] = -1.0;
        return s;
    case GraphFamily::Cycle:
        if (m == 2) { // degenerate two-vertex cycle: a single edge
            s.eigenvalues = {1.0, -1.0};
            return s;
        }
        for (std::size_t j = 0; j < m; ++j)
            s.eigenvalues[j] = 2.0 * std::cos(w * static_cast<double>(j));
        return s;
    case GraphFamily::MobiusLadder:
        for (std::size_t j = 0; j < m; ++j)
            s.eigenvalues[j] = 2.0 * std::cos(w * static_cast<double>(j)) +
                               (j % 2 == 0 ? 1.0 : -1.0);
        return s;
    case GraphFamily::General:
        break;
    }

    // No closed form: O(M log M) DFT of the adjacency first row.
    return eigenvalues_dft(g);
}

Spectrum eigenvalues_dft(const CirculantGraph& g) {
    std::vector<cdouble> row_fourier;
    row_fourier.reserve(g.m());
    for (double v : g.adjacency_row()) row_fourier.emplace_back(v, 0.0);
    dft_unnormalized(row_fourier, +1);

    // Symmetric real row, so the transform is real up to rounding.
    const double tol = 1e-9 * static_cast<double>(std::max<std::size_t>(g.degree(), 1));
    Spectrum s;
    s.eigenvalues.resize(g.m());
    for (std::size_t j = 0; j < g.m(); ++j) {
        if (std::abs(row_fourier[j].imag()) > tol)
            throw NumericalError("circulant spectrum: non-real eigenvalue from DFT route");
        s.eigenvalues[j] = row_fourier[j].real();
    }
    return s;
}

} // namespace qwoa
