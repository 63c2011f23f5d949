#pragma once

#include <functional>
#include <vector>

namespace qwoa {

struct NelderMeadOptions {
    int max_evaluations = 200;
    double initial_step = 0.25; // simplex edge along each axis
    double spread_tolerance = 1e-12;
    double alpha = 1.0; // reflection
    double gamma = 2.0; // expansion
    double rho = 0.5;   // contraction
    double sigma = 0.5; // shrink
};

struct NelderMeadResult {
    std::vector<double> best_point;
    double best_value = 0.0;
    int evaluations = 0;
};

// Derivative-free simplex minimisation.  Every objective call is counted
// against max_evaluations; the best point ever evaluated is returned (the
// start point itself is always evaluated first).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& options);

} // namespace qwoa
