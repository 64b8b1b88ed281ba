#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "randnet/edge_prob.hpp"
#include "randnet/experiments.hpp"
#include "randnet/graph.hpp"

using namespace randnet;

namespace {

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            edges.push_back({i, j});
        }
    }
    return Graph(n, edges);
}

// Two hubs, five leaves each: degrees 5,5,1,...,1 with 10 edges on 12 nodes.
Graph two_hub_graph() {
    std::vector<Edge> edges;
    for (NodeId leaf = 2; leaf < 7; ++leaf) {
        edges.push_back({0, leaf});
    }
    for (NodeId leaf = 7; leaf < 12; ++leaf) {
        edges.push_back({1, leaf});
    }
    return Graph(12, edges);
}

} // namespace

TEST_CASE("complete-graph trials are exact for the combinatorial model") {
    const TrialReport r = run_compare(complete_graph(5), 50, 123);
    CHECK(r.trials == 50);
    CHECK(r.rows.size() == 5);
    for (const TrialNodeRow& row : r.rows) {
        CHECK(row.original_degree == 4);
        // Every pair is certain, so each trial returns K5 exactly.
        CHECK(row.mean_degree_comb == 4.0);
        CHECK(row.std_degree_comb == 0.0);
        // Chung-Lu caps at (n-1)/n < 1 and must fall short on average.
        CHECK(row.mean_degree_cl < 4.0);
        CHECK(row.mean_degree_cl > 2.5);
    }
}

TEST_CASE("report rows sort by descending degree with id tiebreaks") {
    // Path 0-1-2-3: degrees 1,2,2,1.
    const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    const TrialReport r = run_compare(path, 5, 9);
    REQUIRE(r.rows.size() == 4);
    CHECK(r.rows[0].node == 1);
    CHECK(r.rows[1].node == 2);
    CHECK(r.rows[2].node == 0);
    CHECK(r.rows[3].node == 3);
    CHECK(r.rows[0].original_degree == 2);
    CHECK(r.rows[3].original_degree == 1);
}

TEST_CASE("trial means converge to the kernel expectation") {
    const TrialReport r = run_compare(two_hub_graph(), 20000, 0x2b5eed);
    // Expected hub degree under the combinatorial kernel, summed directly.
    const double expected =
        combinatorial_p(12, 10, 5, 5, ProbMode::strict) +
        10.0 * combinatorial_p(12, 10, 5, 1, ProbMode::strict);
    // Top two rows are the hubs; per-trial sigma ~1.56 so the 20000-trial
    // mean carries sigma ~0.011.
    REQUIRE(r.rows.size() == 12);
    CHECK(r.rows[0].original_degree == 5);
    CHECK(r.rows[1].original_degree == 5);
    CHECK(std::fabs(r.rows[0].mean_degree_comb - expected) < 0.045);
    CHECK(std::fabs(r.rows[1].mean_degree_comb - expected) < 0.045);
    CHECK(r.rows[0].std_degree_comb > 0.0);
}

TEST_CASE("trial count must be positive") {
    CHECK_THROWS_AS(run_compare(complete_graph(3), 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        run_sweep(Family::er, 10, {0.5}, 0, 1), std::invalid_argument);
}

TEST_CASE("density sweep rows echo their configuration") {
    const auto rows = run_sweep(Family::er, 40, {0.2, 0.8}, 10, 77);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].family == Family::er);
    CHECK(rows[0].n == 40);
    CHECK(rows[0].density == 0.2);
    CHECK(rows[0].trials == 10);
    for (const SweepRow& row : rows) {
        CHECK(row.std_cl >= 0.0);
        CHECK(row.std_comb >= 0.0);
        // Mean absolute error dominates the absolute mean error.
        CHECK(row.mean_abs_diff_cl >= std::fabs(row.signed_diff_cl) - 1e-12);
        CHECK(row.mean_abs_diff_comb >=
              std::fabs(row.signed_diff_comb) - 1e-12);
    }

    // Deterministic under the same seed.
    const auto again = run_sweep(Family::er, 40, {0.2, 0.8}, 10, 77);
    CHECK(again[0].mean_abs_diff_cl == rows[0].mean_abs_diff_cl);
    CHECK(again[1].signed_diff_comb == rows[1].signed_diff_comb);
}

TEST_CASE("zero density sweeps produce empty graphs and zero diffs") {
    const auto rows = run_sweep(Family::er, 20, {0.0}, 5, 3);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].mean_abs_diff_cl == 0.0);
    CHECK(rows[0].mean_abs_diff_comb == 0.0);
    CHECK(rows[0].signed_diff_cl == 0.0);
}

TEST_CASE("attachment-family sweep runs end to end") {
    const auto rows = run_sweep(Family::ba, 30, {0.4}, 5, 13);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].family == Family::ba);
    CHECK(rows[0].mean_abs_diff_comb >= 0.0);
}

TEST_CASE("density parsing accepts ranges, lists and single values") {
    const auto range = parse_densities("0.1:0.9:0.2");
    REQUIRE(range.size() == 5);
    CHECK(range.front() == doctest::Approx(0.1));
    CHECK(range.back() == doctest::Approx(0.9));

    const auto inclusive = parse_densities("0.1:0.5:0.1");
    CHECK(inclusive.size() == 5);

    const auto list = parse_densities("0.1,0.3,0.7");
    REQUIRE(list.size() == 3);
    CHECK(list[1] == doctest::Approx(0.3));

    const auto single = parse_densities("0.139");
    REQUIRE(single.size() == 1);
    CHECK(single[0] == doctest::Approx(0.139));

    CHECK_THROWS_AS(parse_densities("0.1:0.9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_densities("0.9:0.1:0.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_densities("0.1:0.9:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_densities("0.5,nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_densities("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_densities(""), std::invalid_argument);
}

TEST_CASE("trial report CSV carries the exact header and sorted rows") {
    const TrialReport r = run_compare(complete_graph(4), 10, 5);
    std::ostringstream out;
    write_trial_report_csv(r, out);
    const std::string text = out.str();
    CHECK(text.rfind("original_degree,mean_degree_cl,mean_degree_comb,"
                     "std_degree_cl,std_degree_comb,trials\n",
                     0) == 0);
    // Four data rows, each ending in the trial count.
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    CHECK(text.find(",10\n") != std::string::npos);

    std::ostringstream again;
    write_trial_report_csv(r, again);
    CHECK(again.str() == text);
}

TEST_CASE("sweep CSV carries the exact header and family names") {
    SweepRow row{};
    row.family = Family::ba;
    row.n = 200;
    row.density = 0.139;
    row.trials = 50;
    row.mean_abs_diff_cl = 1.0 / 3.0;
    row.mean_abs_diff_comb = 0.25;
    row.signed_diff_cl = -1.0 / 3.0;
    row.signed_diff_comb = 0.0;
    row.std_cl = 0.5;
    row.std_comb = 0.125;
    std::ostringstream out;
    write_sweep_csv({row}, out);
    CHECK(out.str() ==
          "family,n,density,trials,mean_abs_diff_cl,mean_abs_diff_comb,"
          "signed_diff_cl,signed_diff_comb,std_cl,std_comb\n"
          "BA,200,0.139,50,0.333333,0.25,-0.333333,0,0.5,0.125\n");
    CHECK(family_name(Family::er) == "ER");
}
