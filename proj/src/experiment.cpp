#include "qwoa/experiment.hpp"

#include "qwoa/embedding.hpp"
#include "qwoa/errors.hpp"
#include "qwoa/problems.hpp"
#include "qwoa/seeding.hpp"
#include "qwoa/state.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace qwoa {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Formatting and file output
// ---------------------------------------------------------------------------

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out) throw std::runtime_error("failed while writing '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open config file '" + path + "'");
    return json::parse(in); // parse_error carries line/byte diagnostics
}

// ---------------------------------------------------------------------------
// Config blocks
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<double>> matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParameterError(what + ": expected an array of rows");
    std::vector<std::vector<double>> m;
    for (const json& row : j) {
        if (!row.is_array()) throw ParameterError(what + ": expected an array of rows");
        m.push_back(row.get<std::vector<double>>());
    }
    return m;
}

std::uint64_t generator_seed(const json& generate, std::uint64_t master_seed,
                             std::uint64_t salt) {
    if (generate.contains("seed")) return generate.at("seed").get<std::uint64_t>();
    return split_seed(master_seed, salt);
}

} // namespace

DomainCodec codec_from_json(const json& domain) {
    const std::string family = domain.at("family").get<std::string>();
    if (family == "combinations" || family == "comb")
        return DomainCodec::combinations(domain.at("n").get<int>(), domain.at("k").get<int>());
    if (family == "bounded-combinations" || family == "bcomb") {
        int n = domain.at("n").get<int>();
        if (domain.contains("orders"))
            return DomainCodec::bounded_combinations(n, domain.at("orders").get<std::vector<int>>());
        return DomainCodec::bounded_combinations(n, domain.at("k_max").get<int>());
    }
    if (family == "permutations" || family == "perm") {
        const std::string order = domain.value("order", "lehmer");
        if (order == "lehmer") return DomainCodec::permutations_lehmer(domain.at("n").get<int>());
        if (order == "mr") return DomainCodec::permutations_mr(domain.at("n").get<int>());
        throw ParameterError("domain: permutation order must be 'lehmer' or 'mr'");
    }
    if (family == "permutations-mr" || family == "perm-mr")
        return DomainCodec::permutations_mr(domain.at("n").get<int>());
    if (family == "dyck")
        return DomainCodec::dyck(domain.at("n").get<int>());
    if (family == "words" || family == "word")
        return DomainCodec::words(domain.at("alphabet").get<int>(), domain.at("length").get<int>());
    throw ParameterError("domain: unknown family '" + family + "'");
}

CirculantGraph graph_from_json(const json& graph, std::size_t m) {
    if (graph.contains("m")) {
        std::size_t wanted = graph.at("m").get<std::size_t>();
        if (wanted != m)
            throw ParameterError("graph: declared m does not match domain size M");
    }
    const std::string family = graph.value("family", "complete");
    if (family == "complete") return CirculantGraph::complete(m);
    if (family == "cycle") return CirculantGraph::cycle(m);
    if (family == "mobius" || family == "mobius-ladder") return CirculantGraph::mobius_ladder(m);
    if (family == "circulant")
        return CirculantGraph::from_generators(
            m, graph.at("generators").get<std::vector<std::size_t>>());
    throw ParameterError("graph: unknown family '" + family + "'");
}

std::vector<CirculantGraph> graph_schedule_from_json(const json& graph, std::size_t m,
                                                     int layers) {
    if (graph.contains("schedule")) {
        const json& schedule = graph.at("schedule");
        if (!schedule.is_array() || schedule.empty())
            throw ParameterError("graph: schedule must be a non-empty array");
        if (layers > 0 && static_cast<int>(schedule.size()) != layers &&
            schedule.size() != 1)
            throw ParameterError("graph: schedule length must equal the layer count");
        std::vector<CirculantGraph> graphs;
        for (const json& g : schedule) graphs.push_back(graph_from_json(g, m));
        return graphs;
    }
    return {graph_from_json(graph, m)};
}

// ---------------------------------------------------------------------------
// Problems
// ---------------------------------------------------------------------------

namespace {

TspInstance tsp_from_json(const json& problem, std::uint64_t master_seed) {
    TspInstance inst;
    if (problem.contains("distances")) {
        inst.dist = matrix_from_json(problem.at("distances"), "tsp distances");
    } else {
        const json& gen = problem.at("generate");
        int k = gen.at("cities").get<int>();
        if (k < 1) throw ParameterError("tsp: need at least one city");
        std::mt19937_64 rng(generator_seed(gen, master_seed, 0x7501));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<std::pair<double, double>> pts(k);
        for (auto& p : pts) { p.first = unit(rng); p.second = unit(rng); }
        inst.dist.assign(k, std::vector<double>(k, 0.0));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                double d = std::hypot(pts[i].first - pts[j].first,
                                      pts[i].second - pts[j].second);
                inst.dist[i][j] = inst.dist[j][i] = d;
            }
    }
    validate(inst);
    return inst;
}

PartitionInstance partition_from_json(const json& problem, std::uint64_t master_seed) {
    PartitionInstance inst;
    if (problem.contains("weights")) {
        inst.weights = matrix_from_json(problem.at("weights"), "partition weights");
    } else {
        const json& gen = problem.at("generate");
        int n = gen.at("vertices").get<int>();
        std::mt19937_64 rng(generator_seed(gen, master_seed, 0x9a27));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        inst.weights.assign(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inst.weights[i][j] = inst.weights[j][i] = unit(rng);
    }
    validate(inst);
    return inst;
}

PortfolioInstance portfolio_from_json(const json& problem, std::uint64_t master_seed) {
    PortfolioInstance inst;
    if (problem.contains("returns")) {
        inst.returns = problem.at("returns").get<std::vector<double>>();
        inst.covariance = matrix_from_json(problem.at("covariance"), "portfolio covariance");
        inst.risk_aversion = problem.at("risk_aversion").get<double>();
        inst.max_assets = problem.at("max_assets").get<int>();
    } else {
        const json& gen = problem.at("generate");
        int n = gen.at("assets").get<int>();
        if (n < 1) throw ParameterError("portfolio: need at least one asset");
        inst.max_assets = gen.value("max_assets", (n + 1) / 2);
        inst.risk_aversion = gen.value("risk_aversion", 0.5);
        std::mt19937_64 rng(generator_seed(gen, master_seed, 0xb3f1));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_real_distribution<double> sym(-1.0, 1.0);
        inst.returns.resize(n);
        for (double& r : inst.returns) r = unit(rng);
        std::vector<std::vector<double>> b(n, std::vector<double>(n));
        for (auto& row : b)
            for (double& v : row) v = sym(rng);
        inst.covariance.assign(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                double acc = 0.0;
                for (int l = 0; l < n; ++l) acc += b[l][i] * b[l][j];
                inst.covariance[i][j] = inst.covariance[j][i] = acc / n;
            }
    }
    validate(inst);
    return inst;
}

LatticeCostInstance lattice_from_json(const json& problem, std::uint64_t master_seed) {
    LatticeCostInstance inst;
    if (problem.contains("cell_weights")) {
        inst.cell_weights = matrix_from_json(problem.at("cell_weights"), "lattice weights");
    } else {
        const json& gen = problem.at("generate");
        int n = gen.at("grid").get<int>();
        std::mt19937_64 rng(generator_seed(gen, master_seed, 0xc4d9));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        inst.cell_weights.assign(n, std::vector<double>(n, 0.0));
        for (auto& col : inst.cell_weights)
            for (double& v : col) v = unit(rng);
    }
    validate(inst);
    return inst;
}

void check_domain_consistency(const json& config, const DomainCodec& expected) {
    if (!config.contains("domain")) return;
    DomainCodec declared = codec_from_json(config.at("domain"));
    if (declared.size() != expected.size() || declared.bit_width() != expected.bit_width())
        throw ParameterError("domain block is inconsistent with the problem instance");
}

} // namespace

ProblemBundle problem_from_json(const json& config, std::uint64_t master_seed,
                                std::size_t capacity_cap) {
    const json& problem = config.at("problem");
    const std::string type = problem.at("type").get<std::string>();

    auto finish = [&](DomainCodec codec, const QualityOracle& oracle) {
        check_domain_consistency(config, codec);
        std::vector<double> qualities = quality_vector(codec, oracle, capacity_cap);
        return ProblemBundle{type, std::move(codec), std::move(qualities)};
    };

    if (type == "tsp") {
        TspInstance inst = tsp_from_json(problem, master_seed);
        const std::string order =
            config.contains("domain") ? config.at("domain").value("order", "lehmer") : "lehmer";
        DomainCodec codec = order == "mr" ? DomainCodec::permutations_mr(inst.cities())
                                          : DomainCodec::permutations_lehmer(inst.cities());
        return finish(std::move(codec), [&](const DomainObject& x) {
            return tsp_quality(inst, std::get<Permutation>(x));
        });
    }
    if (type == "partition") {
        PartitionInstance inst = partition_from_json(problem, master_seed);
        return finish(DomainCodec::combinations(inst.vertices(), inst.vertices() / 2),
                      [&](const DomainObject& x) {
                          return partition_quality(inst, std::get<Combination>(x));
                      });
    }
    if (type == "portfolio") {
        PortfolioInstance inst = portfolio_from_json(problem, master_seed);
        return finish(DomainCodec::bounded_combinations(inst.assets(), inst.max_assets),
                      [&](const DomainObject& x) {
                          return portfolio_quality(inst, std::get<Combination>(x));
                      });
    }
    if (type == "lattice") {
        LatticeCostInstance inst = lattice_from_json(problem, master_seed);
        return finish(DomainCodec::dyck(inst.grid()), [&](const DomainObject& x) {
            return dyck_quality(inst, std::get<DyckPath>(x));
        });
    }
    throw ParameterError("problem: unknown type '" + type + "'");
}

SearchPredicate predicate_from_json(const json& predicate, const DomainCodec& codec,
                                    const std::vector<double>* qualities) {
    const std::string type = predicate.at("type").get<std::string>();
    if (type == "equals") {
        DomainObject target = codec.parse_object(predicate.at("object").get<std::string>());
        BigInt target_rank = codec.rank(target); // validates the object
        return [codec, target_rank](const DomainObject& x) {
            return codec.rank(x) == target_rank;
        };
    }
    if (type == "contains") {
        int element = predicate.at("element").get<int>();
        return [element](const DomainObject& x) {
            const auto* c = std::get_if<Combination>(&x);
            if (!c) throw ValidationError("predicate 'contains' needs a combination domain");
            return std::find(c->elements.begin(), c->elements.end(), element) !=
                   c->elements.end();
        };
    }
    if (type == "identity") {
        return [](const DomainObject& x) {
            const auto* p = std::get_if<Permutation>(&x);
            if (!p) throw ValidationError("predicate 'identity' needs a permutation domain");
            for (int i = 0; i < p->n(); ++i)
                if (p->mapping[i] != i) return false;
            return true;
        };
    }
    if (type == "quality_at_least") {
        if (!qualities)
            throw ParameterError("predicate 'quality_at_least' needs a problem block");
        double threshold = predicate.at("threshold").get<double>();
        // Captures the materialised vector; the predicate stays a pure
        // function of the object through its rank.
        std::vector<double> q = *qualities;
        return [codec, q, threshold](const DomainObject& x) {
            return q[to_size_t(codec.rank(x))] >= threshold;
        };
    }
    throw ParameterError("predicate: unknown type '" + type + "'");
}

// ---------------------------------------------------------------------------
// CSV renderers
// ---------------------------------------------------------------------------

std::string distribution_csv(const DomainCodec& codec, std::span<const double> probs,
                             std::span<const double> qualities) {
    if (!qualities.empty() && qualities.size() != probs.size())
        throw DimensionError("distribution_csv: quality vector length mismatch");
    std::ostringstream out;
    out << "index,object,probability,quality\n";
    for (std::size_t r = 0; r < probs.size(); ++r) {
        out << r << ',' << codec.object_string(codec.unrank(BigInt(r))) << ','
            << format_g17(probs[r]) << ','
            << format_g17(qualities.empty() ? 0.0 : qualities[r]) << '\n';
    }
    return out.str();
}

std::string trace_csv(const QwoaRun& run, int layers) {
    std::ostringstream out;
    out << "eval_id,start_id";
    for (int j = 1; j <= layers; ++j) out << ",gamma_" << j;
    for (int j = 1; j <= layers; ++j) out << ",t_" << j;
    out << ",expectation\n";
    for (const EvalRecord& rec : run.trace) {
        out << rec.eval_id << ',' << rec.start_id;
        for (double g : rec.params.gammas) out << ',' << format_g17(g);
        for (double t : rec.params.times) out << ',' << format_g17(t);
        out << ',' << format_g17(rec.expectation) << '\n';
    }
    return out.str();
}

std::string spectrum_csv(const Spectrum& spectrum) {
    std::ostringstream out;
    out << "index,eigenvalue\n";
    for (std::size_t j = 0; j < spectrum.m(); ++j)
        out << j << ',' << format_g17(spectrum.eigenvalues[j]) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Experiment runners
// ---------------------------------------------------------------------------

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json solutions_to_json(const RunReport& rep) {
    json arr = json::array();
    for (const SolutionEntry& e : rep.top) {
        arr.push_back({{"index", e.index},
                       {"object", e.object},
                       {"probability", e.probability},
                       {"quality", e.quality}});
    }
    return arr;
}

std::string output_name(const json& config, const char* key, const char* fallback) {
    if (config.contains("output") && config.at("output").contains(key))
        return config.at("output").at(key).get<std::string>();
    return fallback;
}

} // namespace

ExperimentOutcome run_qwoa_experiment(const json& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t seed = config.at("seed").get<std::uint64_t>();
    ProblemBundle bundle = problem_from_json(config, seed);
    const std::size_t m = bundle.qualities.size();

    const json qwoa_block = config.value("qwoa", json::object());
    OptimizeOptions opts;
    opts.layers = qwoa_block.value("layers", 1);
    opts.budget = qwoa_block.value("budget", 1000);
    opts.starts = qwoa_block.value("starts", 4);
    opts.method = qwoa_block.value("optimizer", "nelder-mead");
    opts.parallel = qwoa_block.value("parallel", true);
    opts.seed = split_seed(seed, 0x0917);
    const bool nested = qwoa_block.value("nested", false);
    const std::size_t top_n = qwoa_block.value("top_n", 10);

    std::vector<CirculantGraph> graphs = graph_schedule_from_json(
        config.value("graph", json{{"family", "complete"}}), m, opts.layers);

    json depth_history = json::array();
    QwoaRun run;
    if (nested) {
        std::vector<QwoaRun> runs = optimize_nested(bundle.qualities, graphs, opts, opts.layers);
        for (std::size_t i = 0; i < runs.size(); ++i)
            depth_history.push_back({{"layers", i + 1},
                                     {"best_expectation", runs[i].best_expectation},
                                     {"evaluations", runs[i].evaluations}});
        run = std::move(runs.back());
    } else {
        run = optimize(bundle.qualities, graphs, opts);
    }
    RunReport rep = report(run, bundle.codec, bundle.qualities, top_n);

    json summary;
    summary["best_expectation"] = run.best_expectation;
    summary["best_gammas"] = run.best_params.gammas;
    summary["best_times"] = run.best_params.times;
    summary["budget"] = opts.budget;
    summary["evaluations"] = run.evaluations;
    summary["layers"] = opts.layers;
    summary["m"] = m;
    summary["nested"] = nested;
    if (nested) summary["depth_history"] = depth_history;
    summary["optimal_probability"] = rep.optimal_probability;
    summary["optimal_quality"] = rep.optimal_quality;
    summary["problem"] = bundle.type;
    summary["seed"] = seed;
    summary["starts"] = opts.starts;
    summary["top_solutions"] = solutions_to_json(rep);
    summary["uniform_mean"] = run.uniform_mean;
    summary["wall_time_seconds"] = seconds_since(t0);

    ExperimentOutcome outcome;
    outcome.files.emplace_back(output_name(config, "trace", "trace.csv"),
                               trace_csv(run, opts.layers));
    outcome.files.emplace_back(output_name(config, "summary", "summary.json"),
                               summary.dump(2) + "\n");
    outcome.files.emplace_back(
        output_name(config, "distribution", "distribution.csv"),
        distribution_csv(bundle.codec, run.final_distribution, bundle.qualities));

    std::ostringstream note;
    note << "qwoa " << bundle.codec.describe() << " M=" << m << " p=" << opts.layers
         << " best <Q>=" << format_g17(run.best_expectation)
         << " (uniform mean " << format_g17(run.uniform_mean) << ")\n";
    outcome.stdout_text = note.str();
    return outcome;
}

ExperimentOutcome run_grover_experiment(const json& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t seed = config.at("seed").get<std::uint64_t>();

    std::optional<ProblemBundle> bundle;
    std::optional<DomainCodec> codec;
    if (config.contains("problem")) {
        bundle = problem_from_json(config, seed);
        codec = bundle->codec;
    } else {
        codec = codec_from_json(config.at("domain"));
    }

    const json& grover_block = config.at("grover");
    SearchPredicate predicate = predicate_from_json(
        grover_block.at("predicate"), *codec, bundle ? &bundle->qualities : nullptr);

    SearchResult result = grover_search(*codec, predicate, split_seed(seed, 0x6e0e));

    json stats;
    stats["m"] = result.m;
    stats["marked_count"] = result.marked_count;
    stats["iterations"] = result.iterations;
    stats["predicted_success"] = result.predicted;
    stats["marked_probability"] = result.marked_probability;
    stats["sampled_index"] = result.sampled_index;
    stats["sampled_object"] = codec->object_string(result.sampled_object);
    stats["sample_marked"] = result.sample_marked;
    stats["seed"] = seed;
    stats["wall_time_seconds"] = seconds_since(t0);

    ExperimentOutcome outcome;
    outcome.files.emplace_back(output_name(config, "summary", "grover.json"),
                               stats.dump(2) + "\n");
    std::ostringstream note;
    note << "grover " << codec->describe() << " M=" << result.m << " k=" << result.marked_count
         << " r=" << result.iterations << " predicted success "
         << format_g17(result.predicted) << " sampled "
         << codec->object_string(result.sampled_object)
         << (result.sample_marked ? " (marked)" : " (unmarked)") << "\n";
    outcome.stdout_text = note.str();
    return outcome;
}

ExperimentOutcome run_walk_experiment(const json& config) {
    std::optional<ProblemBundle> bundle;
    std::optional<DomainCodec> codec;
    std::vector<double> qualities;
    if (config.contains("problem")) {
        bundle = problem_from_json(config, config.value("seed", 0ULL));
        codec = bundle->codec;
        qualities = bundle->qualities;
    } else {
        codec = codec_from_json(config.at("domain"));
    }
    if (!fits_size_t(codec->size()) || to_size_t(codec->size()) > (std::size_t{1} << 26))
        throw CapacityError("walk: domain size exceeds the statevector cap");
    const std::size_t m = to_size_t(codec->size());

    const json& walk_block = config.at("walk");
    const double t = walk_block.at("time").get<double>();
    CirculantGraph graph = graph_from_json(config.value("graph", json{{"family", "complete"}}), m);

    StateVector state = StateVector::uniform(m);
    if (walk_block.contains("initial") && walk_block.at("initial").is_object())
        state = StateVector::basis(m, walk_block.at("initial").at("basis").get<std::size_t>());
    ctqw(state, eigenvalues(graph), t);

    ExperimentOutcome outcome;
    outcome.files.emplace_back(output_name(config, "distribution", "distribution.csv"),
                               distribution_csv(*codec, probabilities(state), qualities));
    std::ostringstream note;
    note << "walk " << graph.describe() << " t=" << format_g17(t) << " over "
         << codec->describe() << "\n";
    outcome.stdout_text = note.str();
    return outcome;
}

ExperimentOutcome run_validate_experiment(const json& config) {
    ExperimentOutcome outcome;
    std::ostringstream out;
    bool ok = true;
    auto record = [&](bool pass, const std::string& line) {
        out << (pass ? "PASS " : "FAIL ") << line << "\n";
        ok = ok && pass;
    };

    std::optional<DomainCodec> codec;
    if (config.contains("domain")) {
        codec = codec_from_json(config.at("domain"));
        if (fits_size_t(codec->size()) && to_size_t(codec->size()) <= (std::size_t{1} << 20)) {
            const std::size_t m = to_size_t(codec->size());
            bool bijective = true;
            for (std::size_t r = 0; r < m && bijective; ++r)
                bijective = codec->rank(codec->unrank(BigInt(r))) == BigInt(r);
            record(bijective, "codec round-trip over all " + std::to_string(m) + " objects");
        } else {
            out << "SKIP codec round-trip (M too large to enumerate)\n";
        }
    }

    if (config.contains("graph")) {
        std::size_t m = 0;
        if (codec && fits_size_t(codec->size())) m = to_size_t(codec->size());
        if (config.at("graph").contains("m")) m = config.at("graph").at("m").get<std::size_t>();
        if (m == 0) throw ParameterError("validate: graph block needs a domain or an explicit m");
        CirculantGraph graph = graph_from_json(config.at("graph"), m);
        Spectrum closed = eigenvalues(graph);
        Spectrum via_dft = eigenvalues_dft(graph);
        double max_dev = 0.0, sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            max_dev = std::max(max_dev,
                               std::abs(closed.eigenvalues[j] - via_dft.eigenvalues[j]));
            sum += closed.eigenvalues[j];
        }
        record(max_dev <= 1e-12,
               "spectrum closed form vs DFT (max deviation " + format_g17(max_dev) + ")");
        record(std::abs(sum) <= 1e-9 * static_cast<double>(m),
               "spectrum trace zero (sum " + format_g17(sum) + ")");
        record(std::abs(closed.eigenvalues[0] - static_cast<double>(graph.degree())) <= 1e-9,
               "lambda_0 equals vertex degree");

        if (config.contains("embedding")) {
            if (!codec) throw ParameterError("validate: embedding check needs a domain");
            const json& emb = config.at("embedding");
            int qubits = emb.value("qubits", codec->bit_width());
            double time = emb.value("time", 0.7);
            EmbeddingReport report = validate_embedding(*codec, graph, qubits, time);
            record(report.block_exact,
                   "indexing conjugation yields the exact circulant leading block");
            record(report.max_walk_error <= 1e-10,
                   "object-space walk matches index-space walk (max deviation " +
                       format_g17(report.max_walk_error) + ")");
        }
    }

    outcome.ok = ok;
    outcome.stdout_text = out.str();
    return outcome;
}

} // namespace qwoa
