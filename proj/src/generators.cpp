#include "randnet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "randnet/rng.hpp"

namespace randnet {

namespace {

std::uint64_t pack(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Pair index k (row-major over i < j) back to its endpoints. Row i starts at
// offset i*(2n - i - 1)/2; a float guess for the row is corrected by integer
// comparisons so huge indices stay exact.
Edge unrank_pair(std::uint64_t k, std::size_t n) {
    const auto nn = static_cast<std::uint64_t>(n);
    auto row_start = [nn](std::uint64_t i) {
        return i * (2 * nn - i - 1) / 2;
    };
    const double nd = static_cast<double>(nn) - 0.5;
    double guess = nd - std::sqrt(nd * nd - 2.0 * static_cast<double>(k));
    std::uint64_t i = guess <= 0.0 ? 0 : static_cast<std::uint64_t>(guess);
    i = std::min(i, nn - 2);
    while (i > 0 && row_start(i) > k) {
        --i;
    }
    while (i + 2 < nn && row_start(i + 1) <= k) {
        ++i;
    }
    const std::uint64_t j = i + 1 + (k - row_start(i));
    return Edge{static_cast<NodeId>(i), static_cast<NodeId>(j)};
}

} // namespace

std::uint64_t max_edges(std::size_t n) {
    const auto nn = static_cast<std::uint64_t>(n);
    return nn * (nn - 1) / 2;
}

std::uint64_t er_edge_count(std::size_t n, double density) {
    if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("er_edge_count: density must be in [0, 1]");
    }
    return static_cast<std::uint64_t>(
        std::llround(density * static_cast<double>(max_edges(n))));
}

Graph generate_er_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
    const std::uint64_t pairs = max_edges(n);
    if (m > pairs) {
        throw std::invalid_argument("generate_er_gnm: more edges than pairs");
    }
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(m);

    // Dense (or small) case: partial Fisher-Yates over all pair indices
    // gives exactly-m without rejection. Sparse-and-huge case: rejection
    // into a hash set, cheap while m is well below the pair count.
    if (pairs <= std::max(4 * m, std::uint64_t{1} << 22)) {
        std::vector<std::uint64_t> idx(pairs);
        std::iota(idx.begin(), idx.end(), std::uint64_t{0});
        for (std::uint64_t t = 0; t < m; ++t) {
            std::swap(idx[t], idx[t + rng.bounded(pairs - t)]);
            edges.push_back(unrank_pair(idx[t], n));
        }
    } else {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(m * 2);
        while (edges.size() < m) {
            const auto a = static_cast<NodeId>(rng.bounded(n));
            const auto b = static_cast<NodeId>(rng.bounded(n));
            if (a == b) {
                continue;
            }
            const Edge e = make_edge(a, b);
            if (seen.insert(pack(e.a, e.b)).second) {
                edges.push_back(e);
            }
        }
    }
    return Graph::from_unique_edges(n, std::move(edges));
}

Graph generate_er_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("generate_er_gnp: p must be in [0, 1]");
    }
    std::vector<Edge> edges;
    if (n < 2 || p <= 0.0) {
        return Graph::from_unique_edges(n, std::move(edges));
    }
    if (p < 1.0) {
        edges.reserve(static_cast<std::size_t>(
            static_cast<double>(max_edges(n)) * p * 1.05 + 64.0));
    } else {
        edges.reserve(max_edges(n));
    }

    // Geometric jumps through the row-major pair sequence: the gap to the
    // next present edge is Geometric(p). For p = 1 the jump is always zero
    // (log1p(-1) = -inf), so every pair lands.
    SplitMix64 rng(seed);
    const double lp = std::log1p(-p);
    std::size_t v = 1;
    std::uint64_t w = std::uint64_t(-1); // column cursor, one before the next candidate
    while (v < n) {
        const double lr = std::log(rng.uniform_open());
        const double gap = std::floor(lr / lp);
        if (gap >= static_cast<double>(max_edges(n))) {
            break; // beyond every remaining pair
        }
        w += 1 + static_cast<std::uint64_t>(gap);
        while (v < n && w >= v) {
            w -= v;
            ++v;
        }
        if (v < n) {
            edges.push_back(Edge{static_cast<NodeId>(w), static_cast<NodeId>(v)});
        }
    }
    return Graph::from_unique_edges(n, std::move(edges));
}

Graph generate_ba(std::size_t n, std::size_t m_per_node, std::uint64_t seed) {
    if (m_per_node < 1 || m_per_node > n) {
        throw std::invalid_argument(
            "generate_ba: m_per_node must be in [1, n]");
    }
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(ba_edge_count(n, m_per_node));

    // Each endpoint appearance is one entry; sampling an entry uniformly is
    // sampling a node proportionally to its degree.
    std::vector<NodeId> repeated;
    repeated.reserve(2 * ba_edge_count(n, m_per_node));

    for (std::size_t i = 0; i < m_per_node; ++i) {
        for (std::size_t j = i + 1; j < m_per_node; ++j) {
            edges.push_back(Edge{static_cast<NodeId>(i), static_cast<NodeId>(j)});
            repeated.push_back(static_cast<NodeId>(i));
            repeated.push_back(static_cast<NodeId>(j));
        }
    }

    std::vector<NodeId> targets;
    targets.reserve(m_per_node);
    for (std::size_t v = m_per_node; v < n; ++v) {
        targets.clear();
        while (targets.size() < m_per_node) {
            // Degree-proportional draw; uniform over existing nodes while no
            // edges exist yet (only the m_per_node = 1 bootstrap).
            const NodeId t =
                repeated.empty()
                    ? static_cast<NodeId>(rng.bounded(v))
                    : repeated[rng.bounded(repeated.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                targets.push_back(t);
            }
        }
        for (const NodeId t : targets) {
            edges.push_back(make_edge(static_cast<NodeId>(v), t));
            repeated.push_back(static_cast<NodeId>(v));
            repeated.push_back(t);
        }
    }
    return Graph::from_unique_edges(n, std::move(edges));
}

std::uint64_t ba_edge_count(std::size_t n, std::size_t m_per_node) {
    const auto nn = static_cast<std::uint64_t>(n);
    const auto m0 = static_cast<std::uint64_t>(m_per_node);
    return m0 * (2 * nn - m0 - 1) / 2;
}

std::size_t ba_calibrate_m_per_node(std::size_t n, std::uint64_t target_m) {
    if (n < 1) {
        throw std::invalid_argument("ba_calibrate_m_per_node: empty graph");
    }
    std::size_t best = 1;
    std::uint64_t best_err = std::uint64_t(-1);
    for (std::size_t m0 = 1; m0 <= n; ++m0) {
        const std::uint64_t got = ba_edge_count(n, m0);
        const std::uint64_t err =
            got > target_m ? got - target_m : target_m - got;
        if (err < best_err) {
            best_err = err;
            best = m0;
        }
    }
    return best;
}

} // namespace randnet
