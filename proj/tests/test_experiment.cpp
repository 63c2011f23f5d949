#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwoa/errors.hpp"
#include "qwoa/experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qwoa;
using nlohmann::json;

namespace {

std::string file_of(const ExperimentOutcome& outcome, const std::string& name) {
    for (const auto& [n, content] : outcome.files)
        if (n == name) return content;
    FAIL("missing rendered file " << name);
    return {};
}

json strip_wall_time(json j) {
    j.erase("wall_time_seconds");
    return j;
}

} // namespace

TEST_CASE("format_g17 round-trips doubles exactly") {
    for (double v : {1.0 / 3.0, 2.2250738585072014e-308, 0.1, -123456.789, 0.0}) {
        std::string text = format_g17(v);
        double back = std::strtod(text.c_str(), nullptr);
        CHECK(back == v);
    }
}

TEST_CASE("codec_from_json builds every family") {
    CHECK(codec_from_json(json{{"family", "combinations"}, {"n", 4}, {"k", 2}}).size() == 6);
    CHECK(codec_from_json(json{{"family", "bcomb"}, {"n", 4}, {"k_max", 2}}).size() == 11);
    CHECK(codec_from_json(json{{"family", "bounded-combinations"},
                               {"n", 4},
                               {"orders", json::array({0, 1, 3, 4})}})
              .size() == 10);
    CHECK(codec_from_json(json{{"family", "permutations"}, {"n", 4}}).family() ==
          Family::PermutationsLehmer);
    CHECK(codec_from_json(json{{"family", "perm"}, {"n", 4}, {"order", "mr"}}).family() ==
          Family::PermutationsMR);
    CHECK(codec_from_json(json{{"family", "dyck"}, {"n", 3}}).size() == 5);
    CHECK(codec_from_json(json{{"family", "words"}, {"alphabet", 3}, {"length", 2}}).size() == 9);

    CHECK_THROWS_AS(codec_from_json(json{{"family", "widgets"}, {"n", 3}}), ParameterError);
    CHECK_THROWS(codec_from_json(json{{"family", "combinations"}, {"n", 4}})); // missing k
}

TEST_CASE("graph blocks") {
    CHECK(graph_from_json(json{{"family", "cycle"}}, 7).generators() ==
          std::vector<std::size_t>{1});
    CHECK(graph_from_json(json{{"family", "circulant"}, {"generators", json::array({2, 5})}}, 12)
              .degree() == 4);
    CHECK_THROWS_AS(graph_from_json(json{{"family", "cycle"}, {"m", 9}}, 7), ParameterError);
    CHECK_THROWS_AS(graph_from_json(json{{"family", "torus"}}, 7), ParameterError);

    auto schedule = graph_schedule_from_json(
        json{{"schedule", json::array({json{{"family", "complete"}},
                                       json{{"family", "cycle"}}})}},
        10, 2);
    CHECK(schedule.size() == 2);
    CHECK(schedule[0].family() == GraphFamily::Complete);
    CHECK(schedule[1].family() == GraphFamily::Cycle);
    CHECK_THROWS_AS(graph_schedule_from_json(
                        json{{"schedule", json::array({json{{"family", "complete"}},
                                                       json{{"family", "cycle"}}})}},
                        10, 3),
                    ParameterError);
}

TEST_CASE("problem blocks build consistent codecs and quality vectors") {
    json tsp_config{
        {"problem",
         {{"type", "tsp"},
          {"distances", json::array({json::array({0.0, 1.0, 2.0}),
                                     json::array({1.0, 0.0, 1.5}),
                                     json::array({2.0, 1.5, 0.0})})}}}};
    ProblemBundle tsp = problem_from_json(tsp_config, 1);
    CHECK(tsp.codec.size() == 6);
    CHECK(tsp.qualities.size() == 6);
    for (double q : tsp.qualities)
        CHECK(q == doctest::Approx(-4.5)); // all 3-city tours congruent

    json generated{{"problem", {{"type", "partition"},
                                {"generate", {{"vertices", 6}, {"seed", 11}}}}}};
    ProblemBundle a = problem_from_json(generated, 5);
    ProblemBundle b = problem_from_json(generated, 99); // explicit seed wins over master
    CHECK(a.qualities == b.qualities);
    CHECK(a.codec.size() == 20);

    json portfolio{{"problem", {{"type", "portfolio"},
                                {"generate", {{"assets", 5}, {"max_assets", 2}}}}}};
    ProblemBundle p = problem_from_json(portfolio, 7);
    CHECK(p.codec.size() == 16); // 1 + 5 + 10
    CHECK(p.qualities[0] == 0.0); // empty portfolio first

    json lattice{{"problem", {{"type", "lattice"},
                              {"generate", {{"grid", 4}, {"seed", 2}}}}}};
    CHECK(problem_from_json(lattice, 3).qualities.size() == 14);

    json inconsistent = tsp_config;
    inconsistent["domain"] = {{"family", "permutations"}, {"n", 4}};
    CHECK_THROWS_AS(problem_from_json(inconsistent, 1), ParameterError);
}

TEST_CASE("predicates") {
    DomainCodec codec = codec_from_json(json{{"family", "combinations"}, {"n", 5}, {"k", 2}});
    SearchPredicate equals =
        predicate_from_json(json{{"type", "equals"}, {"object", "1,3"}}, codec, nullptr);
    CHECK(equals(codec.parse_object("1,3")));
    CHECK_FALSE(equals(codec.parse_object("0,3")));

    SearchPredicate contains =
        predicate_from_json(json{{"type", "contains"}, {"element", 4}}, codec, nullptr);
    CHECK(contains(codec.parse_object("1,4")));
    CHECK_FALSE(contains(codec.parse_object("1,3")));

    DomainCodec perms = codec_from_json(json{{"family", "permutations"}, {"n", 3}});
    SearchPredicate identity = predicate_from_json(json{{"type", "identity"}}, perms, nullptr);
    CHECK(identity(perms.parse_object("0,1,2")));
    CHECK_FALSE(identity(perms.parse_object("0,2,1")));

    std::vector<double> qualities{0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0};
    SearchPredicate good = predicate_from_json(
        json{{"type", "quality_at_least"}, {"threshold", 8.0}}, codec, &qualities);
    CHECK(good(codec.unrank(9)));
    CHECK_FALSE(good(codec.unrank(3)));
    CHECK_THROWS_AS(predicate_from_json(
                        json{{"type", "quality_at_least"}, {"threshold", 1.0}}, codec, nullptr),
                    ParameterError);
    CHECK_THROWS_AS(predicate_from_json(json{{"type", "spooky"}}, codec, nullptr),
                    ParameterError);
}

TEST_CASE("distribution and trace CSV formats") {
    DomainCodec codec = codec_from_json(json{{"family", "words"}, {"alphabet", 2}, {"length", 2}});
    std::vector<double> probs{0.25, 0.25, 0.25, 0.25};
    std::vector<double> qual{1.0, 2.0, 3.0, 4.0};
    std::string csv = distribution_csv(codec, probs, qual);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "index,object,probability,quality");
    std::getline(lines, line);
    CHECK(line == "0,00,0.25,1");
    int rows = 1;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 4);

    QwoaRun run;
    run.trace.push_back(EvalRecord{0, 0, QwoaParams{{0.5}, {1.5}}, 2.0});
    std::string trace = trace_csv(run, 1);
    CHECK(trace == "eval_id,start_id,gamma_1,t_1,expectation\n0,0,0.5,1.5,2\n");
}

TEST_CASE("qwoa experiment renders deterministic outputs") {
    json config{
        {"seed", 42},
        {"problem", {{"type", "tsp"}, {"generate", {{"cities", 4}}}}},
        {"graph", {{"family", "complete"}}},
        {"qwoa", {{"layers", 1}, {"budget", 80}, {"starts", 2}, {"top_n", 3}}},
    };
    ExperimentOutcome first = run_qwoa_experiment(config);
    ExperimentOutcome second = run_qwoa_experiment(config);

    std::string trace1 = file_of(first, "trace.csv");
    CHECK(trace1 == file_of(second, "trace.csv"));
    CHECK(file_of(first, "distribution.csv") == file_of(second, "distribution.csv"));

    json summary1 = json::parse(file_of(first, "summary.json"));
    json summary2 = json::parse(file_of(second, "summary.json"));
    CHECK(strip_wall_time(summary1) == strip_wall_time(summary2));

    CHECK(summary1.at("m") == 24);
    CHECK(summary1.at("best_expectation").get<double>() >
          summary1.at("uniform_mean").get<double>());
    CHECK(summary1.at("top_solutions").size() == 3);
}

TEST_CASE("grover experiment statistics") {
    json config{
        {"seed", 7},
        {"domain", {{"family", "combinations"}, {"n", 6}, {"k", 3}}},
        {"grover", {{"predicate", {{"type", "contains"}, {"element", 0}}}}},
    };
    ExperimentOutcome outcome = run_grover_experiment(config);
    json stats = json::parse(file_of(outcome, "grover.json"));
    CHECK(stats.at("m") == 20);
    CHECK(stats.at("marked_count") == 10);
    CHECK(stats.at("marked_probability").size() ==
          stats.at("iterations").get<std::size_t>() + 1);
    double predicted = stats.at("predicted_success").get<double>();
    double last = stats.at("marked_probability").back().get<double>();
    CHECK(std::abs(predicted - last) < 1e-9);
}

TEST_CASE("walk experiment needs only a domain") {
    json config{
        {"domain", {{"family", "dyck"}, {"n", 3}}},
        {"graph", {{"family", "cycle"}}},
        {"walk", {{"time", 0.0}}},
    };
    ExperimentOutcome outcome = run_walk_experiment(config);
    std::string csv = file_of(outcome, "distribution.csv");
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line); // header
    std::getline(lines, line);
    CHECK(line == "0,EEENNN,0.19999999999999998,0"); // uniform over Catalan(3)=5
}

TEST_CASE("validate experiment") {
    json good{
        {"domain", {{"family", "bounded-combinations"},
                    {"n", 4},
                    {"orders", json::array({0, 1, 3, 4})}}},
        {"graph", {{"family", "mobius"}}},
        {"embedding", {{"qubits", 4}, {"time", 0.8}}},
    };
    ExperimentOutcome outcome = run_validate_experiment(good);
    CHECK(outcome.ok);
    CHECK(outcome.stdout_text.find("FAIL") == std::string::npos);
}

TEST_CASE("atomic writes leave no temporary behind") {
    auto dir = std::filesystem::temp_directory_path() / "qwoa_atomic_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "out.txt").string();
    write_file_atomic(path, "payload");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "payload");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
}
