#include "qwoa/combinadics.hpp"
#include "qwoa/errors.hpp"
#include "qwoa/experiment.hpp"
#include "qwoa/resources.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace {

using qwoa::BigInt;
using qwoa::DomainCodec;

struct CodecFlags {
    std::string family;
    int n = 0;
    int k = 0;
    int k_max = -1;
    std::vector<int> orders;
    int alphabet = 0;
    int length = 0;
    std::string order = "lehmer";
};

void add_codec_flags(CLI::App* cmd, CodecFlags& flags) {
    cmd->add_option("--family", flags.family,
                    "comb | bcomb | perm | perm-mr | dyck | word")
        ->required();
    cmd->add_option("--n", flags.n, "universe / permutation / grid size");
    cmd->add_option("--k", flags.k, "combination size");
    cmd->add_option("--kmax", flags.k_max, "bounded combinations: maximum size");
    cmd->add_option("--orders", flags.orders, "bounded combinations: allowed sizes")
        ->delimiter(',');
    cmd->add_option("--alphabet", flags.alphabet, "word alphabet size");
    cmd->add_option("--length", flags.length, "word length");
    cmd->add_option("--order", flags.order, "permutations: lehmer (default) or mr");
}

DomainCodec build_codec(const CodecFlags& flags) {
    if (flags.family == "comb" || flags.family == "combinations")
        return DomainCodec::combinations(flags.n, flags.k);
    if (flags.family == "bcomb" || flags.family == "bounded-combinations") {
        if (!flags.orders.empty())
            return DomainCodec::bounded_combinations(flags.n, flags.orders);
        if (flags.k_max < 0)
            throw qwoa::ParameterError("bounded combinations need --kmax or --orders");
        return DomainCodec::bounded_combinations(flags.n, flags.k_max);
    }
    if (flags.family == "perm" || flags.family == "permutations")
        return flags.order == "mr" ? DomainCodec::permutations_mr(flags.n)
                                   : DomainCodec::permutations_lehmer(flags.n);
    if (flags.family == "perm-mr") return DomainCodec::permutations_mr(flags.n);
    if (flags.family == "dyck") return DomainCodec::dyck(flags.n);
    if (flags.family == "word" || flags.family == "words")
        return DomainCodec::words(flags.alphabet, flags.length);
    throw qwoa::ParameterError("unknown family '" + flags.family + "'");
}

std::filesystem::path resolve_output_dir(const nlohmann::json& config) {
    if (config.contains("output") && config.at("output").contains("directory"))
        return config.at("output").at("directory").get<std::string>();
    if (const char* env = std::getenv("QWOA_OUTPUT_DIR"))
        return env;
    return ".";
}

void emit_outcome(const nlohmann::json& config, const qwoa::ExperimentOutcome& outcome) {
    std::filesystem::path dir = resolve_output_dir(config);
    std::filesystem::create_directories(dir);
    for (const auto& [name, content] : outcome.files)
        qwoa::write_file_atomic((dir / name).string(), content);
    std::cout << outcome.stdout_text;
}

void emit_csv(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        qwoa::write_file_atomic(out_path, content);
}

int dispatch(CLI::App& app, int argc, char** argv) {
    CodecFlags codec_flags;
    std::string object_text, rank_text, config_path, out_path;

    auto* rank_cmd = app.add_subcommand("rank", "index a combinatorial object");
    add_codec_flags(rank_cmd, codec_flags);
    rank_cmd->add_option("--object", object_text, "object literal, e.g. 2,3 or EENN")
        ->required();

    auto* unrank_cmd = app.add_subcommand("unrank", "recover the object at an index");
    add_codec_flags(unrank_cmd, codec_flags);
    unrank_cmd->add_option("--rank", rank_text, "index in [0, M)")->required();

    auto* size_cmd = app.add_subcommand("size", "exact domain size M");
    add_codec_flags(size_cmd, codec_flags);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "circulant eigenvalues as CSV");
    std::string graph_family = "complete";
    std::size_t graph_m = 0;
    std::vector<std::size_t> graph_generators;
    spectrum_cmd->add_option("--graph", graph_family, "complete | cycle | mobius | circulant");
    spectrum_cmd->add_option("--m", graph_m, "vertex count")->required();
    spectrum_cmd->add_option("--generators", graph_generators, "offsets for circulant")
        ->delimiter(',');
    spectrum_cmd->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* walk_cmd = app.add_subcommand("walk", "single CTQW, distribution CSV");
    walk_cmd->add_option("--config", config_path, "JSON experiment config")->required();

    auto* qwoa_cmd = app.add_subcommand("qwoa", "variational optimisation run");
    qwoa_cmd->add_option("--config", config_path, "JSON experiment config")->required();

    auto* grover_cmd = app.add_subcommand("grover", "amplitude-amplified search");
    grover_cmd->add_option("--config", config_path, "JSON experiment config")->required();

    auto* validate_cmd = app.add_subcommand("validate", "self-checks for a config");
    validate_cmd->add_option("--config", config_path, "JSON experiment config")->required();

    auto* resources_cmd = app.add_subcommand("resources", "indexing-circuit gate counts");
    std::string circuit;
    std::vector<std::uint64_t> res_n, res_k;
    bool compare = false;
    resources_cmd->add_option("--circuit", circuit,
                              "combination-bitstring | combination-list | permutation-lehmer | "
                              "binom-fixed-k | binom-fixed-n | adder | comparator");
    resources_cmd->add_option("--n", res_n, "values of n")->delimiter(',');
    resources_cmd->add_option("--k", res_k, "values of k")->delimiter(',');
    resources_cmd->add_flag("--compare", compare, "compare the two combination representations");
    resources_cmd->add_option("--out", out_path, "write CSV here instead of stdout");

    app.require_subcommand(1);
    app.parse(argc, argv);

    if (rank_cmd->parsed()) {
        DomainCodec codec = build_codec(codec_flags);
        std::cout << codec.rank(codec.parse_object(object_text)).str() << "\n";
        return 0;
    }
    if (unrank_cmd->parsed()) {
        DomainCodec codec = build_codec(codec_flags);
        std::cout << codec.object_string(codec.unrank(BigInt(rank_text))) << "\n";
        return 0;
    }
    if (size_cmd->parsed()) {
        std::cout << build_codec(codec_flags).size().str() << "\n";
        return 0;
    }
    if (spectrum_cmd->parsed()) {
        nlohmann::json graph{{"family", graph_family}};
        if (!graph_generators.empty()) graph["generators"] = graph_generators;
        qwoa::Spectrum s = qwoa::eigenvalues(qwoa::graph_from_json(graph, graph_m));
        emit_csv(out_path, qwoa::spectrum_csv(s));
        return 0;
    }
    if (resources_cmd->parsed()) {
        if (res_n.empty()) throw qwoa::ParameterError("resources: need at least one --n");
        if (res_k.empty()) res_k.push_back(0);
        std::ostringstream csv;
        if (compare) {
            csv << "n,k,recommended,bitstring_gates,list_gates,bitstring_qubits,list_qubits\n";
            for (std::uint64_t n : res_n)
                for (std::uint64_t k : res_k) {
                    auto advice = qwoa::compare_representations(n, k);
                    csv << n << ',' << k << ','
                        << (advice.recommended == qwoa::Representation::List ? "list"
                                                                             : "bitstring")
                        << ',' << advice.bitstring_gates << ',' << advice.list_gates << ','
                        << advice.bitstring_space << ',' << advice.list_space << '\n';
                }
        } else {
            if (circuit.empty())
                throw qwoa::ParameterError("resources: need --circuit or --compare");
            qwoa::CircuitKind kind = qwoa::circuit_kind_from_string(circuit);
            csv << "circuit,n,k,gates,qubits\n";
            for (std::uint64_t n : res_n)
                for (std::uint64_t k : res_k) {
                    std::uint64_t gates = qwoa::gate_count({kind, n, k});
                    std::uint64_t qubits = 0;
                    switch (kind) {
                    case qwoa::CircuitKind::CombinationBitstring:
                        qubits = qwoa::bitstring_qubits(n); break;
                    case qwoa::CircuitKind::CombinationList:
                        qubits = qwoa::list_qubits(n, k); break;
                    case qwoa::CircuitKind::PermutationLehmer:
                        qubits = qwoa::list_qubits(n, n); break;
                    default:
                        qubits = qwoa::list_qubits(n, 1); break; // operand register width
                    }
                    csv << circuit << ',' << n << ',' << k << ',' << gates << ',' << qubits
                        << '\n';
                }
        }
        emit_csv(out_path, csv.str());
        return 0;
    }

    // Config-driven subcommands.
    nlohmann::json config = qwoa::load_json_file(config_path);
    qwoa::ExperimentOutcome outcome;
    if (walk_cmd->parsed()) outcome = qwoa::run_walk_experiment(config);
    else if (qwoa_cmd->parsed()) outcome = qwoa::run_qwoa_experiment(config);
    else if (grover_cmd->parsed()) outcome = qwoa::run_grover_experiment(config);
    else outcome = qwoa::run_validate_experiment(config);
    emit_outcome(config, outcome);
    return outcome.ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous-time quantum walk optimisation over indexed combinatorial domains"};
    try {
        return dispatch(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qwoa::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const qwoa::NumericalError& e) {
        std::cerr << "numerical validation error: " << e.what() << "\n";
        return 4;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "out of range: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
