#pragma once

#include "qwoa/circulant.hpp"
#include "qwoa/combinadics.hpp"
#include "qwoa/driver.hpp"
#include "qwoa/grover.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qwoa {

// ---------------------------------------------------------------------------
// Formatting and file output
// ---------------------------------------------------------------------------

// Decimal formatting with 17 significant digits (round-trips any double).
std::string format_g17(double v);

// Write-then-rename; never leaves a partial file at `path`.
void write_file_atomic(const std::string& path, const std::string& content);

// ---------------------------------------------------------------------------
// Config blocks
// ---------------------------------------------------------------------------

nlohmann::json load_json_file(const std::string& path);

DomainCodec codec_from_json(const nlohmann::json& domain);
CirculantGraph graph_from_json(const nlohmann::json& graph, std::size_t m);
// "graph" block, or a per-layer "schedule" array inside it.
std::vector<CirculantGraph> graph_schedule_from_json(const nlohmann::json& graph,
                                                     std::size_t m, int layers);

struct ProblemBundle {
    std::string type;                 // tsp | partition | portfolio | lattice
    DomainCodec codec;
    std::vector<double> qualities;    // materialised q(unrank(r))
};

// Builds the instance (given data or a seeded generator), infers or checks
// the domain block, and materialises the quality vector.
ProblemBundle problem_from_json(const nlohmann::json& config, std::uint64_t master_seed,
                                std::size_t capacity_cap = std::size_t{1} << 22);

SearchPredicate predicate_from_json(const nlohmann::json& predicate, const DomainCodec& codec,
                                    const std::vector<double>* qualities);

// ---------------------------------------------------------------------------
// Rendered experiment outputs (file name -> content); the CLI decides where
// they land and writes them atomically.
// ---------------------------------------------------------------------------

using RenderedFile = std::pair<std::string, std::string>;

struct ExperimentOutcome {
    std::vector<RenderedFile> files;
    std::string stdout_text;
    bool ok = true; // validate: every check passed
};

// qwoa: trace CSV, summary JSON, distribution CSV.
ExperimentOutcome run_qwoa_experiment(const nlohmann::json& config);

// grover: statistics JSON.
ExperimentOutcome run_grover_experiment(const nlohmann::json& config);

// walk: a single CTQW, distribution CSV.
ExperimentOutcome run_walk_experiment(const nlohmann::json& config);

// validate: bijectivity, spectrum cross-check, embedding check.
// Throws NumericalError when a check fails.
ExperimentOutcome run_validate_experiment(const nlohmann::json& config);

// CSV renderers shared with the CLI.
std::string distribution_csv(const DomainCodec& codec, std::span<const double> probs,
                             std::span<const double> qualities);
std::string trace_csv(const QwoaRun& run, int layers);
std::string spectrum_csv(const Spectrum& spectrum);

} // namespace qwoa
