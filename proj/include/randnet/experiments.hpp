#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "randnet/graph.hpp"

namespace randnet {

// Per-node outcome of randomizing one input graph many times under both
// models: how well does each model reproduce the node's original degree?
struct TrialNodeRow {
    std::size_t node; // original node id (rows are sorted by degree, not id)
    std::size_t original_degree;
    double mean_degree_cl;
    double mean_degree_comb;
    double std_degree_cl;
    double std_degree_comb;
};

struct TrialReport {
    std::vector<TrialNodeRow> rows; // nonincreasing original degree, ties by id
    std::size_t trials = 0;
};

/// Randomizes `g` `trials` times under each model (skipping sampler, clamp
/// mode) with the graph's own degree sequence as weights, and reports the
/// per-node mean and population standard deviation of the sampled degrees.
///
/// Seeding: model `k` (0 = Chung-Lu, 1 = combinatorial) trial `t` samples
/// with derive_stream(derive_stream(seed, k), t), so the two models and all
/// trials are independent and individually reproducible.
TrialReport run_compare(const Graph& g, std::size_t trials, std::uint64_t seed);

enum class Family { er, ba };

std::string family_name(Family f);

// One density point of a sweep: how far each model's expected-degree
// reproduction drifts as the input graph gets denser. Diffs are in mean
// degree, 2m/n; `signed_*` averages the per-trial differences (randomized
// minus original), `mean_abs_*` averages their magnitudes, `std_*` is the
// population standard deviation of the signed differences.
struct SweepRow {
    Family family;
    std::size_t n;
    double density;
    std::size_t trials;
    double mean_abs_diff_cl;
    double mean_abs_diff_comb;
    double signed_diff_cl;
    double signed_diff_comb;
    double std_cl;
    double std_comb;
};

/// For each density: regenerate a fresh input graph per trial (ER: uniform
/// with exactly er_edge_count(n, d) edges; BA: attachment parameter
/// calibrated once per density to that same target), randomize it under both
/// models, and accumulate the mean-degree differences.
///
/// Seeding: density index d gets base = derive_stream(seed, d); trial t uses
/// derive_stream(base, 3t) for the generator, 3t+1 for Chung-Lu, 3t+2 for
/// the combinatorial model.
std::vector<SweepRow> run_sweep(Family family, std::size_t n,
                                const std::vector<double>& densities,
                                std::size_t trials, std::uint64_t seed);

/// Accepts "0.1:0.9:0.2" (inclusive arithmetic progression) or "0.1,0.3,0.7"
/// (explicit list) or a single value; every density must lie in [0, 1].
std::vector<double> parse_densities(const std::string& text);

// CSV writers; numeric columns use six significant digits so files are
// byte-stable across runs and platforms.
void write_trial_report_csv(const TrialReport& report, std::ostream& out);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

} // namespace randnet
