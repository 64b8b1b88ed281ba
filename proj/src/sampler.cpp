#include "randnet/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "randnet/rng.hpp"

namespace randnet {

namespace {

// Kernels bound to graph-level parameters, evaluated per candidate pair. The
// original node ids travel along so strict-mode failures can name the pair.

struct ChungLuKernel {
    double total;
    double operator()(double wi, double wj, std::size_t, std::size_t) const {
        return chung_lu_p(total, wi, wj);
    }
};

template <bool Strict>
struct CombinatorialKernel {
    double n;
    double m;
    std::uint64_t* clamped;

    double operator()(double wi, double wj, std::size_t i, std::size_t j) const {
        const CombinatorialTerms t = combinatorial_terms(n, m, wi, wj);
        if (!t.out_of_range) {
            return t.p;
        }
        if constexpr (Strict) {
            std::ostringstream msg;
            msg << "no simple graph gives nodes " << i << " and " << j
                << " degrees (" << wi << ", " << wj << ") with n=" << n
                << ", m=" << m << "; raw probability " << t.p;
            throw NonGraphicalError(msg.str(), t);
        } else {
            ++*clamped;
            return t.x > 0.0 ? 1.0 : 0.0;
        }
    }
};

std::uint64_t pair_count(std::size_t n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

std::size_t reserve_hint(const WeightSeq& w) {
    const double expected = w.total() / 2.0;
    const double cap = static_cast<double>(pair_count(w.size()));
    return static_cast<std::size_t>(std::min(expected * 1.05 + 64.0, cap));
}

template <typename Kernel>
SampleResult run_naive(const WeightSeq& w, std::uint64_t seed, Kernel kernel) {
    const std::size_t n = w.size();
    SampleDiagnostics diag;
    std::vector<Edge> edges;
    if (n >= 2) {
        edges.reserve(reserve_hint(w));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        SplitMix64 rng(derive_stream(seed, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = kernel(w[i], w[j], i, j);
            ++diag.pairs_evaluated;
            if (rng.uniform() < p) {
                edges.push_back(Edge{static_cast<NodeId>(i),
                                     static_cast<NodeId>(j)});
            }
        }
    }
    diag.edges_emitted = edges.size();
    return SampleResult{Graph::from_unique_edges(n, std::move(edges)), diag};
}

template <typename Kernel>
SampleResult run_skipping(const WeightSeq& w, std::uint64_t seed,
                          Kernel kernel) {
    const std::size_t n = w.size();
    SampleDiagnostics diag;
    std::vector<Edge> edges;
    if (n >= 2) {
        edges.reserve(reserve_hint(w));
    }

    // Rows iterate positions in nonincreasing-weight order so probabilities
    // only shrink along a row; ties break by original index to keep the
    // permutation deterministic.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return w[a] != w[b] ? w[a] > w[b] : a < b;
    });

    for (std::size_t r = 0; r + 1 < n; ++r) {
        SplitMix64 rng(derive_stream(seed, r));
        const std::size_t i = order[r];
        const double wi = w[i];

        std::size_t v = r + 1;
        double cap = std::min(kernel(wi, w[order[v]], i, order[v]), 1.0);
        if (cap <= 0.0) {
            continue; // row probabilities are nonincreasing: all remaining are 0
        }
        while (v < n) {
            if (cap < 1.0) {
                // Candidates miss independently with probability 1 - cap
                // under the current bound; jump the geometric run of misses.
                const double u = rng.uniform_open();
                const double skip = std::floor(std::log(u) / std::log1p(-cap));
                if (skip >= static_cast<double>(n - v)) {
                    break;
                }
                v += static_cast<std::size_t>(skip);
            }
            const std::size_t j = order[v];
            double q = kernel(wi, w[j], i, j);
            if (q > cap * (1.0 + 1e-9) + 1e-12) {
                std::ostringstream msg;
                msg << "edge probability rose along a weight-sorted row at nodes "
                    << i << " and " << j << " (bound " << cap << ", got " << q
                    << "); the weight sequence admits no consistent sweep";
                throw MonotonicityError(msg.str());
            }
            q = std::min(q, cap);
            ++diag.pairs_evaluated;
            // Accepting with probability q / cap thins the cap-rate hits to
            // exact rate q; scaling by cap avoids the division.
            if (rng.uniform() * cap < q) {
                edges.push_back(make_edge(static_cast<NodeId>(i),
                                          static_cast<NodeId>(j)));
            }
            cap = q;
            ++v;
            if (cap <= 0.0) {
                break;
            }
        }
    }

    diag.pairs_skipped = pair_count(n) - diag.pairs_evaluated;
    diag.edges_emitted = edges.size();
    return SampleResult{Graph::from_unique_edges(n, std::move(edges)), diag};
}

template <typename Runner>
SampleResult dispatch(const WeightSeq& w, const SamplerConfig& cfg,
                      Runner runner) {
    const double n = static_cast<double>(w.size());
    const double m = w.total() / 2.0;

    if (cfg.model == ModelKind::chung_lu) {
        return runner(w, cfg.seed, ChungLuKernel{w.total()});
    }
    if (cfg.mode == ProbMode::strict) {
        return runner(w, cfg.seed, CombinatorialKernel<true>{n, m, nullptr});
    }
    std::uint64_t clamped = 0;
    SampleResult result =
        runner(w, cfg.seed, CombinatorialKernel<false>{n, m, &clamped});
    result.diagnostics.clamped_pairs = clamped;
    return result;
}

} // namespace

SampleResult sample_naive(const WeightSeq& weights, const SamplerConfig& config) {
    return dispatch(weights, config,
                    [](const WeightSeq& w, std::uint64_t seed, auto kernel) {
                        return run_naive(w, seed, kernel);
                    });
}

SampleResult sample_skipping(const WeightSeq& weights,
                             const SamplerConfig& config) {
    return dispatch(weights, config,
                    [](const WeightSeq& w, std::uint64_t seed, auto kernel) {
                        return run_skipping(w, seed, kernel);
                    });
}

SampleResult sample(const WeightSeq& weights, const SamplerConfig& config) {
    return config.algorithm == Algorithm::naive ? sample_naive(weights, config)
                                                : sample_skipping(weights, config);
}

} // namespace randnet
