#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qwoa {

enum class GraphFamily { Complete, Cycle, MobiusLadder, General };

// Symmetric circulant connectivity on M vertices.  Offsets g and M-g are both
// connected, so a generating set of offsets in [1, M/2] fixes the graph.
class CirculantGraph {
public:
    static CirculantGraph complete(std::size_t m);
    static CirculantGraph cycle(std::size_t m);
    static CirculantGraph mobius_ladder(std::size_t m); // even m >= 4
    // Arbitrary offsets; values are reduced mod m and folded into [1, m/2].
    static CirculantGraph from_generators(std::size_t m, std::vector<std::size_t> generators);

    std::size_t m() const { return m_; }
    GraphFamily family() const { return family_; }
    const std::vector<std::size_t>& generators() const { return generators_; }

    std::size_t degree() const;
    // First row of the adjacency matrix: entry k = 1 iff offset k is connected.
    std::vector<double> adjacency_row() const;
    std::string describe() const;

private:
    CirculantGraph(std::size_t m, std::vector<std::size_t> generators, GraphFamily family);

    std::size_t m_ = 0;
    std::vector<std::size_t> generators_;
    GraphFamily family_ = GraphFamily::General;
};

// Real eigenvalues of the circulant adjacency in Fourier order:
// lambda_j pairs with the Fourier vector (omega^{jk})/sqrt(M).
struct Spectrum {
    std::vector<double> eigenvalues;

    std::size_t m() const { return eigenvalues.size(); }
};

// Closed forms for the named families, cosine sums otherwise.
Spectrum eigenvalues(const CirculantGraph& g);

// Independent route: DFT of the adjacency first row (imaginary part checked
// to vanish).  Used to cross-check the closed forms.
Spectrum eigenvalues_dft(const CirculantGraph& g);

} // namespace qwoa
