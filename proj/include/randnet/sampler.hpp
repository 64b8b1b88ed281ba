#pragma once

#include <cstdint>
#include <stdexcept>

#include "randnet/edge_prob.hpp"
#include "randnet/graph.hpp"

namespace randnet {

// `naive` tests every pair with one uniform draw (O(n^2) regardless of
// density); `skipping` walks each row in geometric jumps sized by the current
// probability bound, touching O(n + m) candidates in expectation.
enum class Algorithm { naive, skipping };

struct SamplerConfig {
    ModelKind model = ModelKind::combinatorial;
    std::uint64_t seed = 0;
    ProbMode mode = ProbMode::clamp;
    Algorithm algorithm = Algorithm::skipping;
};

struct SampleDiagnostics {
    std::uint64_t pairs_evaluated = 0; // candidates whose probability was tested
    std::uint64_t pairs_skipped = 0;   // pairs jumped over without evaluation
    std::uint64_t clamped_pairs = 0;   // out-of-range probabilities snapped to {0,1}
    std::uint64_t edges_emitted = 0;
};

struct SampleResult {
    Graph graph;
    SampleDiagnostics diagnostics;
};

// The skipping walk requires probabilities to be nonincreasing along each
// row of the weight-sorted pair matrix. Both kernels satisfy that for any
// realizable weight sequence; this error reports a violation (possible only
// for contradictory inputs in clamp mode) instead of silently mis-sampling.
struct MonotonicityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Draws one random simple graph whose expected degrees approximate
/// `weights`, by independently including each pair {i, j} with the model's
/// edge probability. Node ids in the result match positions in `weights`.
///
/// Reproducibility: every row of the pair matrix draws from its own
/// substream, derive_stream(config.seed, row). The naive algorithm rows are
/// original node indices; the skipping algorithm rows are positions in the
/// weight-sorted order (nonincreasing weight, ties by original index). The
/// two algorithms therefore agree in distribution, not draw-for-draw.
SampleResult sample(const WeightSeq& weights, const SamplerConfig& config);

/// Per-pair Bernoulli sweep; one uniform draw per pair, rows in original
/// index order.
SampleResult sample_naive(const WeightSeq& weights, const SamplerConfig& config);

/// Geometric-skip sweep over rows sorted by nonincreasing weight. Within a
/// row the bound `cap` starts at the first candidate's probability and
/// tightens to each evaluated probability; runs of certain misses are jumped
/// in one draw.
SampleResult sample_skipping(const WeightSeq& weights,
                             const SamplerConfig& config);

} // namespace randnet
