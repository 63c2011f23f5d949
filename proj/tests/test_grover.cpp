#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qwoa/errors.hpp"
#include "qwoa/grover.hpp"

#include <cmath>

using namespace qwoa;

namespace {

double analytic_success(std::size_t m, std::size_t k, std::uint64_t j) {
    double theta = std::asin(std::sqrt(double(k) / double(m)));
    double s = std::sin(double(2 * j + 1) * theta);
    return s * s;
}

} // namespace

TEST_CASE("iteration fixes the uniform state when nothing or everything is marked") {
    StateVector s = StateVector::uniform(9);
    std::vector<bool> none(9, false);
    grover_iteration(s, none);
    std::vector<double> p = probabilities(s);
    for (double v : p) CHECK(std::abs(v - 1.0 / 9.0) < 1e-13);

    StateVector t = StateVector::uniform(9);
    std::vector<bool> all(9, true);
    grover_iteration(t, all);
    p = probabilities(t);
    for (double v : p) CHECK(std::abs(v - 1.0 / 9.0) < 1e-13);
}

TEST_CASE("one iteration on M=6, k=1 hits sin^2(3 theta)") {
    StateVector s = StateVector::uniform(6);
    std::vector<bool> marked(6, false);
    marked[4] = true;
    grover_iteration(s, marked);
    CHECK(std::abs(s.norm() - 1.0) < 1e-12);
    CHECK(std::norm(s[4]) == doctest::Approx(analytic_success(6, 1, 1)).epsilon(1e-12));
}

TEST_CASE("optimal iteration counts") {
    CHECK(optimal_iterations(17, 17) == 0);
    CHECK(optimal_iterations(4, 1) == 1);
    CHECK(predicted_success(4, 1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(optimal_iterations(120, 1) == 8);
    CHECK(predicted_success(120, 1, 8) > 0.99);
    CHECK(optimal_iterations(1, 1) == 0);

    CHECK_THROWS_AS(optimal_iterations(10, 0), ParameterError);
    CHECK_THROWS_AS(optimal_iterations(10, 11), ParameterError);
}

TEST_CASE("search on a single-object domain") {
    DomainCodec codec = DomainCodec::permutations_lehmer(1);
    SearchResult result =
        grover_search(codec, [](const DomainObject&) { return true; }, 3);
    CHECK(result.m == 1);
    CHECK(result.marked_count == 1);
    CHECK(result.iterations == 0);
    CHECK(result.sampled_index == 0);
    CHECK(result.sample_marked);
}

TEST_CASE("marked trajectory matches the analytic rotation: combinations") {
    // 3-combinations of [6], marked iff the combination contains element 0
    DomainCodec codec = DomainCodec::combinations(6, 3); // M = 20
    SearchPredicate contains_zero = [](const DomainObject& x) {
        const Combination& c = std::get<Combination>(x);
        return !c.elements.empty() && c.elements.front() == 0;
    };
    SearchResult result = grover_search(codec, contains_zero, 17);
    CHECK(result.m == 20);
    CHECK(result.marked_count == 10); // C(5,2)
    for (std::uint64_t j = 0; j < result.marked_probability.size(); ++j)
        CHECK(std::abs(result.marked_probability[j] - analytic_success(20, 10, j)) < 1e-9);
}

TEST_CASE("marked trajectory matches the analytic rotation: permutations") {
    DomainCodec codec = DomainCodec::permutations_lehmer(5); // M = 120
    SearchPredicate identity = [](const DomainObject& x) {
        const Permutation& p = std::get<Permutation>(x);
        for (int i = 0; i < p.n(); ++i)
            if (p.mapping[i] != i) return false;
        return true;
    };
    SearchResult result = grover_search(codec, identity, 23);
    CHECK(result.m == 120);
    CHECK(result.marked_count == 1);
    CHECK(result.iterations == 8);
    REQUIRE(result.marked_probability.size() == 9);
    for (std::uint64_t j = 0; j <= 8; ++j)
        CHECK(std::abs(result.marked_probability[j] - analytic_success(120, 1, j)) < 1e-9);
    CHECK(result.marked_probability.back() > 0.99);
    CHECK(result.sample_marked); // 99.98% mass on the identity for this seed
    CHECK(std::get<Permutation>(result.sampled_object).mapping ==
          std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("iterations preserve the norm") {
    DomainCodec codec = DomainCodec::words(3, 3); // M = 27
    std::vector<bool> marked = marked_mask(codec, [](const DomainObject& x) {
        return std::get<Word>(x).letters[0] == 2;
    });
    StateVector s = StateVector::uniform(27);
    for (int j = 0; j < 20; ++j) {
        grover_iteration(s, marked);
        CHECK(std::abs(s.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("search errors") {
    DomainCodec codec = DomainCodec::combinations(5, 2);
    CHECK_THROWS_AS(grover_search(codec, [](const DomainObject&) { return false; }, 1),
                    ParameterError);
    StateVector s = StateVector::uniform(10);
    std::vector<bool> wrong(9, false);
    CHECK_THROWS_AS(grover_iteration(s, wrong), DimensionError);
}
