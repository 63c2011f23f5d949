#pragma once

#include "qwoa/combinadics.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace qwoa {

// All cost-type problems return negated cost so that the argmax of q is the
// problem optimum, uniformly across problems.

// Closed-tour length minimisation over k cities.
struct TspInstance {
    std::vector<std::vector<double>> dist; // k x k, symmetric, zero diagonal

    int cities() const { return static_cast<int>(dist.size()); }
};
void validate(const TspInstance& inst);
double tsp_quality(const TspInstance& inst, const Permutation& tour);

// Minimum-weight bisection of an even-order weighted graph.
struct PartitionInstance {
    std::vector<std::vector<double>> weights; // n x n, symmetric, zero diagonal

    int vertices() const { return static_cast<int>(weights.size()); }
};
void validate(const PartitionInstance& inst);
double partition_quality(const PartitionInstance& inst, const Combination& side);

// Mean-variance portfolio with risk aversion theta and at most K assets.
struct PortfolioInstance {
    std::vector<double> returns;                 // mu, length n
    std::vector<std::vector<double>> covariance; // n x n, symmetric PSD
    double risk_aversion = 0.0;                  // theta >= 0
    int max_assets = 0;                          // K

    int assets() const { return static_cast<int>(returns.size()); }
};
void validate(const PortfolioInstance& inst); // PSD checked by pivoted factorisation
double portfolio_quality(const PortfolioInstance& inst, const Combination& picks);

// Weighted lattice paths: collect (negated) weight of every cell below the path.
struct LatticeCostInstance {
    std::vector<std::vector<double>> cell_weights; // n x n; [column][row]

    int grid() const { return static_cast<int>(cell_weights.size()); }
};
void validate(const LatticeCostInstance& inst);
double dyck_quality(const LatticeCostInstance& inst, const DyckPath& path);

using QualityOracle = std::function<double(const DomainObject&)>;

// Materialise q(unrank(r)) for all r in [0, M).  M must fit under the cap.
std::vector<double> quality_vector(const DomainCodec& codec, const QualityOracle& oracle,
                                   std::size_t capacity_cap = std::size_t{1} << 26);

} // namespace qwoa
