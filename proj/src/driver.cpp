#include "qwoa/driver.hpp"

#include "qwoa/errors.hpp"
#include "qwoa/nelder_mead.hpp"
#include "qwoa/seeding.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>

namespace qwoa {

namespace {

const Spectrum& layer_spectrum(const std::vector<Spectrum>& spectra, int layer) {
    return spectra.size() == 1 ? spectra.front() : spectra[layer];
}

QwoaParams params_from_point(const std::vector<double>& point) {
    QwoaParams p;
    const std::size_t layers = point.size() / 2;
    p.gammas.assign(point.begin(), point.begin() + layers);
    p.times.assign(point.begin() + layers, point.end());
    return p;
}

std::vector<double> point_from_params(const QwoaParams& p) {
    std::vector<double> point(p.gammas);
    point.insert(point.end(), p.times.begin(), p.times.end());
    return point;
}

struct StartOutcome {
    std::vector<EvalRecord> trace;
};

} // namespace

StateVector evolve(const QwoaParams& params, std::span<const double> qualities,
                   const std::vector<Spectrum>& layer_spectra) {
    if (params.gammas.size() != params.times.size())
        throw DimensionError("evolve: gamma and time vectors must have equal length");
    const int p = params.layers();
    if (p > 0 && layer_spectra.size() != 1 &&
        static_cast<int>(layer_spectra.size()) != p)
        throw DimensionError("evolve: need one spectrum per layer (or a single shared one)");
    for (const Spectrum& s : layer_spectra)
        if (s.m() != qualities.size())
            throw DimensionError("evolve: spectrum dimension does not match quality vector");

    StateVector state = StateVector::uniform(qualities.size());
    for (int j = 0; j < p; ++j) {
        apply_phase(state, qualities, params.gammas[j], +1);
        ctqw(state, layer_spectrum(layer_spectra, j), params.times[j]);
    }
    return state;
}

double objective(const QwoaParams& params, std::span<const double> qualities,
                 const std::vector<Spectrum>& layer_spectra) {
    return expectation(evolve(params, qualities, layer_spectra), qualities);
}

QwoaRun optimize(std::span<const double> qualities,
                 const std::vector<CirculantGraph>& graph_schedule,
                 const OptimizeOptions& options) {
    if (options.budget < 1) throw ParameterError("optimize: budget must be >= 1");
    if (options.starts < 1) throw ParameterError("optimize: need at least one start");
    if (options.layers < 0) throw ParameterError("optimize: layer count must be >= 0");
    if (options.method != "nelder-mead")
        throw ParameterError("optimize: unknown method '" + options.method + "'");
    if (graph_schedule.empty())
        throw ParameterError("optimize: need at least one graph");

    std::vector<Spectrum> spectra;
    spectra.reserve(graph_schedule.size());
    for (const CirculantGraph& g : graph_schedule) spectra.push_back(eigenvalues(g));

    const int p = options.layers;
    const int starts = std::min(options.starts, options.budget);

    auto run_start = [&](int start_id) {
        StartOutcome outcome;
        int budget = options.budget / starts + (start_id < options.budget % starts ? 1 : 0);
        if (budget == 0) return outcome;

        std::mt19937_64 rng(split_seed(options.seed, static_cast<std::uint64_t>(start_id)));
        std::uniform_real_distribution<double> gamma_dist(0.0, 2.0 * std::numbers::pi);
        std::uniform_real_distribution<double> time_dist(0.0, std::numbers::pi);
        std::vector<double> start_point(2 * p);
        for (int j = 0; j < p; ++j) start_point[j] = gamma_dist(rng);
        for (int j = 0; j < p; ++j) start_point[p + j] = time_dist(rng);
        if (start_id == 0 && options.warm_start) {
            QwoaParams warm = *options.warm_start;
            if (warm.layers() > p)
                throw ParameterError("optimize: warm start has more layers than requested");
            warm.gammas.resize(p, 0.0);
            warm.times.resize(p, 0.0);
            start_point = point_from_params(warm);
        }

        auto objective_fn = [&](const std::vector<double>& point) {
            QwoaParams params = params_from_point(point);
            double value = objective(params, qualities, spectra);
            EvalRecord rec;
            rec.start_id = start_id;
            rec.params = std::move(params);
            rec.expectation = value;
            outcome.trace.push_back(std::move(rec));
            return -value; // maximise <Q> with a minimiser
        };

        NelderMeadOptions nm;
        nm.max_evaluations = budget;
        nelder_mead(objective_fn, start_point, nm);
        return outcome;
    };

    std::vector<StartOutcome> outcomes(starts);
    if (options.parallel && starts > 1) {
        std::vector<std::future<StartOutcome>> futures;
        futures.reserve(starts);
        for (int i = 0; i < starts; ++i)
            futures.push_back(std::async(std::launch::async, run_start, i));
        for (int i = 0; i < starts; ++i) outcomes[i] = futures[i].get();
    } else {
        for (int i = 0; i < starts; ++i) outcomes[i] = run_start(i);
    }

    QwoaRun run;
    double mean = 0.0;
    for (double q : qualities) mean += q;
    run.uniform_mean = mean / static_cast<double>(qualities.size());

    bool have_best = false;
    for (StartOutcome& outcome : outcomes) {
        for (EvalRecord& rec : outcome.trace) {
            rec.eval_id = run.evaluations++;
            if (!have_best || rec.expectation > run.best_expectation) {
                have_best = true;
                run.best_expectation = rec.expectation;
                run.best_params = rec.params;
            }
            run.trace.push_back(std::move(rec));
        }
    }
    run.final_distribution = probabilities(evolve(run.best_params, qualities, spectra));
    return run;
}

std::vector<QwoaRun> optimize_nested(std::span<const double> qualities,
                                     const std::vector<CirculantGraph>& graph_schedule,
                                     const OptimizeOptions& options, int max_layers) {
    if (max_layers < 1) throw ParameterError("optimize_nested: need at least one layer");
    std::vector<QwoaRun> runs;
    OptimizeOptions opts = options;
    for (int p = 1; p <= max_layers; ++p) {
        opts.layers = p;
        opts.seed = split_seed(options.seed, 0xd00d0000ULL + static_cast<std::uint64_t>(p));
        opts.warm_start = runs.empty() ? std::optional<QwoaParams>{}
                                       : std::optional<QwoaParams>{runs.back().best_params};
        runs.push_back(optimize(qualities, graph_schedule, opts));
    }
    return runs;
}

RunReport report(const QwoaRun& run, const DomainCodec& codec,
                 std::span<const double> qualities, std::size_t top_n) {
    const std::size_t m = run.final_distribution.size();
    if (qualities.size() != m)
        throw DimensionError("report: quality vector does not match distribution");

    RunReport rep;
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (run.final_distribution[a] != run.final_distribution[b])
            return run.final_distribution[a] > run.final_distribution[b];
        return a < b;
    });

    const std::size_t count = std::min(top_n, m);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t idx = order[i];
        SolutionEntry entry;
        entry.index = idx;
        entry.object = codec.object_string(codec.unrank(BigInt(idx)));
        entry.probability = run.final_distribution[idx];
        entry.quality = qualities[idx];
        rep.cumulative_probability += entry.probability;
        rep.top.push_back(std::move(entry));
    }

    double best_q = *std::max_element(qualities.begin(), qualities.end());
    rep.optimal_quality = best_q;
    const double tie_tol = 1e-9 * std::max(1.0, std::abs(best_q));
    for (std::size_t i = 0; i < m; ++i)
        if (qualities[i] >= best_q - tie_tol)
            rep.optimal_probability += run.final_distribution[i];
    return rep;
}

} // namespace qwoa
