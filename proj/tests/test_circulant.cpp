#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qwoa/circulant.hpp"
#include "qwoa/errors.hpp"

#include <algorithm>
#include <cmath>

using namespace qwoa;

namespace {

// Cosine-sum definition of the spectrum, independent of closed forms and DFT.
std::vector<double> cosine_sum_spectrum(const CirculantGraph& g) {
    const std::size_t m = g.m();
    const std::vector<double> row = g.adjacency_row();
    const double w = 2.0 * std::acos(-1.0) / static_cast<double>(m);
    std::vector<double> lambda(m, 0.0);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            if (row[k] != 0.0) lambda[j] += std::cos(w * static_cast<double>((j * k) % m));
    return lambda;
}

} // namespace

TEST_CASE("named families have the expected generating sets") {
    CHECK(CirculantGraph::complete(2).generators() == std::vector<std::size_t>{1});
    CHECK(CirculantGraph::cycle(5).generators() == std::vector<std::size_t>{1});
    CHECK(CirculantGraph::mobius_ladder(6).generators() == std::vector<std::size_t>{1, 3});
    CHECK(CirculantGraph::complete(7).generators() == std::vector<std::size_t>{1, 2, 3});

    CHECK_THROWS_AS(CirculantGraph::mobius_ladder(7), ParameterError);
    CHECK_THROWS_AS(CirculantGraph::mobius_ladder(2), ParameterError);
    CHECK_THROWS_AS(CirculantGraph::complete(1), ParameterError);
    CHECK_THROWS_AS(CirculantGraph::from_generators(6, {0}), ParameterError);
}

TEST_CASE("generators fold into [1, M/2]") {
    CirculantGraph g = CirculantGraph::from_generators(10, {7, 3, 13});
    CHECK(g.generators() == std::vector<std::size_t>{3});
    CHECK(g.degree() == 2);
    CirculantGraph antipodal = CirculantGraph::from_generators(8, {4});
    CHECK(antipodal.degree() == 1);
}

TEST_CASE("adjacency rows") {
    CHECK(CirculantGraph::cycle(4).adjacency_row() == std::vector<double>{0, 1, 0, 1});
    CHECK(CirculantGraph::complete(3).adjacency_row() == std::vector<double>{0, 1, 1});
    CHECK(CirculantGraph::mobius_ladder(6).adjacency_row() ==
          std::vector<double>{0, 1, 0, 1, 0, 1});
}

TEST_CASE("spectrum fixtures") {
    Spectrum complete4 = eigenvalues(CirculantGraph::complete(4));
    CHECK(complete4.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-14));
    for (int j = 1; j < 4; ++j)
        CHECK(complete4.eigenvalues[j] == doctest::Approx(-1.0).epsilon(1e-14));

    Spectrum cycle4 = eigenvalues(CirculantGraph::cycle(4));
    const double expected_cycle[] = {2.0, 0.0, -2.0, 0.0};
    for (int j = 0; j < 4; ++j)
        CHECK(std::abs(cycle4.eigenvalues[j] - expected_cycle[j]) < 1e-12);

    Spectrum mobius6 = eigenvalues(CirculantGraph::mobius_ladder(6));
    const double expected_mobius[] = {3.0, 0.0, 0.0, -3.0, 0.0, 0.0};
    for (int j = 0; j < 6; ++j)
        CHECK(std::abs(mobius6.eigenvalues[j] - expected_mobius[j]) < 1e-12);
}

TEST_CASE("closed forms agree with DFT of the first row") {
    std::vector<std::size_t> sizes{2, 3, 4, 5, 6, 8, 12, 16, 36, 97, 120,
                                   256, 360, 1000, 2048, 4095, 4096};
    for (std::size_t m : sizes) {
        std::vector<CirculantGraph> graphs;
        graphs.push_back(CirculantGraph::complete(m));
        graphs.push_back(CirculantGraph::cycle(m));
        if (m % 2 == 0 && m >= 4) graphs.push_back(CirculantGraph::mobius_ladder(m));
        for (const CirculantGraph& g : graphs) {
            Spectrum closed = eigenvalues(g);
            Spectrum via_dft = eigenvalues_dft(g);
            double max_dev = 0.0;
            for (std::size_t j = 0; j < m; ++j)
                max_dev = std::max(max_dev,
                                   std::abs(closed.eigenvalues[j] - via_dft.eigenvalues[j]));
            INFO(g.describe());
            CHECK(max_dev <= 1e-12);
        }
    }
}

TEST_CASE("general-generator spectra match the cosine-sum definition") {
    std::vector<CirculantGraph> graphs{
        CirculantGraph::from_generators(30, {2, 7, 15}),
        CirculantGraph::from_generators(97, {5, 13}),
        CirculantGraph::from_generators(128, {1, 9, 64}),
    };
    for (const CirculantGraph& g : graphs) {
        Spectrum s = eigenvalues(g);
        std::vector<double> expected = cosine_sum_spectrum(g);
        for (std::size_t j = 0; j < g.m(); ++j)
            CHECK(std::abs(s.eigenvalues[j] - expected[j]) < 1e-10);
    }
}

TEST_CASE("spectrum matches dense eigendecomposition") {
    std::vector<CirculantGraph> graphs{
        CirculantGraph::complete(64),
        CirculantGraph::cycle(97),
        CirculantGraph::mobius_ladder(128),
        CirculantGraph::from_generators(256, {3, 50, 128}),
        CirculantGraph::complete(256),
    };
    for (const CirculantGraph& g : graphs) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(oracle::dense_adjacency(g));
        std::vector<double> ours = eigenvalues(g).eigenvalues;
        std::sort(ours.begin(), ours.end());
        for (std::size_t j = 0; j < g.m(); ++j)
            CHECK(std::abs(ours[j] - solver.eigenvalues()(j)) < 1e-10);
    }
}

TEST_CASE("spectrum invariants") {
    std::vector<CirculantGraph> graphs{
        CirculantGraph::complete(37),
        CirculantGraph::cycle(40),
        CirculantGraph::mobius_ladder(10),
        CirculantGraph::from_generators(60, {6, 11, 30}),
    };
    for (const CirculantGraph& g : graphs) {
        Spectrum s = eigenvalues(g);
        double sum = 0.0;
        for (double v : s.eigenvalues) sum += v;
        CHECK(std::abs(sum) < 1e-9); // traceless adjacency
        CHECK(s.eigenvalues[0] == doctest::Approx(double(g.degree())).epsilon(1e-12));
        for (std::size_t j = 1; j < g.m(); ++j) // lambda_j = lambda_{M-j}
            CHECK(std::abs(s.eigenvalues[j] - s.eigenvalues[g.m() - j]) < 1e-9);
    }
}
