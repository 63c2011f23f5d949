#include "qwoa/problems.hpp"

#include "qwoa/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qwoa {

namespace {

void check_square_symmetric(const std::vector<std::vector<double>>& m, const char* what,
                            bool zero_diagonal) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw ValidationError(std::string(what) + ": matrix must be square");
    for (std::size_t i = 0; i < n; ++i) {
        if (zero_diagonal && m[i][i] != 0.0)
            throw ValidationError(std::string(what) + ": diagonal must be zero");
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i])
                throw ValidationError(std::string(what) + ": matrix must be symmetric");
    }
    for (const auto& row : m)
        for (double v : row)
            if (!std::isfinite(v))
                throw ValidationError(std::string(what) + ": entries must be finite");
}

} // namespace

// ---------------------------------------------------------------------------
// Travelling salesman
// ---------------------------------------------------------------------------

void validate(const TspInstance& inst) {
    check_square_symmetric(inst.dist, "tsp", true);
    for (const auto& row : inst.dist)
        for (double v : row)
            if (v < 0.0) throw ValidationError("tsp: distances must be nonnegative");
    if (inst.cities() < 1) throw ValidationError("tsp: need at least one city");
}

double tsp_quality(const TspInstance& inst, const Permutation& tour) {
    const int k = inst.cities();
    if (tour.n() != k)
        throw DimensionError("tsp: tour length does not match city count");
    double length = 0.0;
    for (int i = 0; i < k; ++i)
        length += inst.dist[tour.mapping[i]][tour.mapping[(i + 1) % k]];
    return -length;
}

// ---------------------------------------------------------------------------
// Graph partitioning
// ---------------------------------------------------------------------------

void validate(const PartitionInstance& inst) {
    check_square_symmetric(inst.weights, "partition", true);
    if (inst.vertices() < 2 || inst.vertices() % 2 != 0)
        throw ValidationError("partition: vertex count must be even and >= 2");
}

double partition_quality(const PartitionInstance& inst, const Combination& side) {
    const int n = inst.vertices();
    if (side.n != n || side.k() != n / 2)
        throw DimensionError("partition: side must pick exactly n/2 of n vertices");
    std::vector<bool> in_side(n, false);
    for (int v : side.elements) in_side[v] = true;
    double cut = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!in_side[i]) continue;
        for (int j = 0; j < n; ++j)
            if (!in_side[j]) cut += inst.weights[i][j];
    }
    return -cut;
}

// ---------------------------------------------------------------------------
// Portfolio
// ---------------------------------------------------------------------------

namespace {

// Pivoted Cholesky probe: fails iff some pivot goes below -tol * scale.
bool positive_semidefinite(std::vector<std::vector<double>> a, double tol) {
    const std::size_t n = a.size();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[i][i]));
    if (scale == 0.0) scale = 1.0;
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = step;
        for (std::size_t i = step + 1; i < n; ++i)
            if (a[order[i]][order[i]] > a[order[pivot]][order[pivot]]) pivot = i;
        std::swap(order[step], order[pivot]);
        double d = a[order[step]][order[step]];
        if (d < -tol * scale) return false;
        if (d <= tol * scale) {
            // Remaining block must be numerically zero on the diagonal.
            for (std::size_t i = step; i < n; ++i)
                if (a[order[i]][order[i]] < -tol * scale) return false;
            return true;
        }
        for (std::size_t i = step + 1; i < n; ++i) {
            for (std::size_t j = step + 1; j <= i; ++j) {
                double upd = a[order[i]][order[step]] * a[order[j]][order[step]] / d;
                a[order[i]][order[j]] -= upd;
                a[order[j]][order[i]] = a[order[i]][order[j]];
            }
        }
    }
    return true;
}

} // namespace

void validate(const PortfolioInstance& inst) {
    const int n = inst.assets();
    if (n < 1) throw ValidationError("portfolio: need at least one asset");
    if (static_cast<int>(inst.covariance.size()) != n)
        throw ValidationError("portfolio: covariance must be n x n");
    check_square_symmetric(inst.covariance, "portfolio covariance", false);
    for (double v : inst.returns)
        if (!std::isfinite(v)) throw ValidationError("portfolio: returns must be finite");
    if (inst.risk_aversion < 0.0)
        throw ValidationError("portfolio: risk aversion must be >= 0");
    if (inst.max_assets < 0 || inst.max_assets > n)
        throw ValidationError("portfolio: need 0 <= K <= n");
    if (!positive_semidefinite(inst.covariance, 1e-9))
        throw ValidationError("portfolio: covariance is not positive semidefinite");
}

double portfolio_quality(const PortfolioInstance& inst, const Combination& picks) {
    const int n = inst.assets();
    if (picks.n != n)
        throw DimensionError("portfolio: selection universe does not match asset count");
    if (picks.k() > inst.max_assets)
        throw ValidationError("portfolio: more than K assets selected");
    double value = 0.0;
    for (int i : picks.elements) value += inst.returns[i];
    double risk = 0.0;
    for (int i : picks.elements)
        for (int j : picks.elements) risk += inst.covariance[i][j];
    return value - inst.risk_aversion * risk;
}

// ---------------------------------------------------------------------------
// Lattice paths
// ---------------------------------------------------------------------------

void validate(const LatticeCostInstance& inst) {
    const int n = inst.grid();
    if (n < 1) throw ValidationError("lattice: grid must be >= 1");
    for (const auto& col : inst.cell_weights) {
        if (static_cast<int>(col.size()) != n)
            throw ValidationError("lattice: cell weights must be n x n");
        for (double v : col)
            if (!std::isfinite(v)) throw ValidationError("lattice: weights must be finite");
    }
}

// Collects cell (i, j) iff the path runs along or above the cell's top edge,
// i.e. the path's height over column i is at least j+1.
double dyck_quality(const LatticeCostInstance& inst, const DyckPath& path) {
    validate(path);
    const int n = inst.grid();
    if (path.n() != n)
        throw DimensionError("lattice: path size does not match grid");
    double collected = 0.0;
    int x = 0, y = 0;
    for (Step s : path.steps) {
        if (s == Step::East) {
            for (int j = 0; j < y; ++j) collected += inst.cell_weights[x][j];
            ++x;
        } else {
            ++y;
        }
    }
    return -collected;
}

// ---------------------------------------------------------------------------
// Quality vectors
// ---------------------------------------------------------------------------

std::vector<double> quality_vector(const DomainCodec& codec, const QualityOracle& oracle,
                                   std::size_t capacity_cap) {
    if (!fits_size_t(codec.size()) || to_size_t(codec.size()) > capacity_cap)
        throw CapacityError("quality_vector: domain size exceeds materialisation cap");
    const std::size_t m = to_size_t(codec.size());
    std::vector<double> q(m);
    for (std::size_t r = 0; r < m; ++r)
        q[r] = oracle(codec.unrank(BigInt(r)));
    return q;
}

} // namespace qwoa
