#pragma once

#include <cstddef>
#include <cstdint>

#include "randnet/graph.hpp"

namespace randnet {

// Reference input-graph generators for the fidelity experiments. Each one
// consumes `seed` as a single SplitMix64 stream and is deterministic given
// (arguments, seed).

/// Number of unordered pairs on n nodes, C(n, 2).
std::uint64_t max_edges(std::size_t n);

/// Edge count hitting `density` = m / C(n, 2) as closely as possible.
std::uint64_t er_edge_count(std::size_t n, double density);

/// Uniform random simple graph with exactly m edges (Erdos-Renyi G(n, m)).
/// Dense requests draw a partial Fisher-Yates shuffle of all pair indices;
/// sparse ones rejection-sample pairs into a hash set.
Graph generate_er_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed);

/// Erdos-Renyi G(n, p): each pair independently present with probability p.
/// Walks the pair sequence in geometric jumps, so the cost is O(n + m)
/// rather than O(n^2).
Graph generate_er_gnp(std::size_t n, double p, std::uint64_t seed);

/// Barabasi-Albert preferential attachment: a clique on the first
/// m_per_node nodes, then each new node attaches to m_per_node distinct
/// existing nodes chosen proportionally to degree (uniformly while all
/// degrees are still zero, which only happens for m_per_node = 1).
/// Requires 1 <= m_per_node <= n.
Graph generate_ba(std::size_t n, std::size_t m_per_node, std::uint64_t seed);

/// Exact edge count of generate_ba: the clique plus m_per_node edges per
/// attached node, m_per_node * (2n - m_per_node - 1) / 2.
std::uint64_t ba_edge_count(std::size_t n, std::size_t m_per_node);

/// Smallest m_per_node whose ba_edge_count is closest to target_m (ties go
/// to the smaller value). Lets density-targeted experiments pick the
/// attachment parameter.
std::size_t ba_calibrate_m_per_node(std::size_t n, std::uint64_t target_m);

} // namespace randnet
