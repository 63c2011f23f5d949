#pragma once

#include "qwoa/circulant.hpp"
#include "qwoa/combinadics.hpp"
#include "qwoa/state.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qwoa {

// One phase angle and one walk time per layer.
struct QwoaParams {
    std::vector<double> gammas;
    std::vector<double> times;

    int layers() const { return static_cast<int>(gammas.size()); }
};

// U_W(t_p) U_Q(gamma_p) ... U_W(t_1) U_Q(gamma_1) |uniform>.
// layer_spectra holds one spectrum per layer, or a single spectrum reused
// for every layer.
StateVector evolve(const QwoaParams& params, std::span<const double> qualities,
                   const std::vector<Spectrum>& layer_spectra);

// <Q> of the evolved state.
double objective(const QwoaParams& params, std::span<const double> qualities,
                 const std::vector<Spectrum>& layer_spectra);

struct EvalRecord {
    int eval_id = 0;
    int start_id = 0;
    QwoaParams params;
    double expectation = 0.0;
};

struct QwoaRun {
    QwoaParams best_params;
    double best_expectation = 0.0;
    double uniform_mean = 0.0;
    int evaluations = 0;
    std::vector<EvalRecord> trace;
    std::vector<double> final_distribution; // probabilities at best_params
};

struct OptimizeOptions {
    int layers = 1;
    int budget = 1000;          // total objective evaluations across starts
    int starts = 4;
    std::uint64_t seed = 1;
    std::string method = "nelder-mead";
    bool parallel = true;
    // Nested initialisation: previous optimum padded with a (0, 0) layer
    // replaces the first random start.
    std::optional<QwoaParams> warm_start;
};

// Multi-start Nelder-Mead over the 2p parameters, gamma sampled in [0, 2pi),
// t in [0, pi].  Deterministic for a fixed (seed, budget, starts); starts run
// independently and the trace is merged by start index.
QwoaRun optimize(std::span<const double> qualities,
                 const std::vector<CirculantGraph>& graph_schedule,
                 const OptimizeOptions& options);

// Runs p = 1..max_layers, warm-starting each depth from the previous optimum.
std::vector<QwoaRun> optimize_nested(std::span<const double> qualities,
                                     const std::vector<CirculantGraph>& graph_schedule,
                                     const OptimizeOptions& options, int max_layers);

struct SolutionEntry {
    std::size_t index = 0;
    std::string object;
    double probability = 0.0;
    double quality = 0.0;
};

struct RunReport {
    std::vector<SolutionEntry> top; // by descending probability, index breaking ties
    double cumulative_probability = 0.0;
    double optimal_quality = 0.0;
    double optimal_probability = 0.0; // total probability of argmax-quality indices
};

RunReport report(const QwoaRun& run, const DomainCodec& codec,
                 std::span<const double> qualities, std::size_t top_n);

} // namespace qwoa
