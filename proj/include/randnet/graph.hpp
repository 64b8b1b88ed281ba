#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace randnet {

using NodeId = std::uint32_t;

// Undirected edge, stored with endpoints normalized so that a < b.
struct Edge {
    NodeId a;
    NodeId b;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Normalizes an endpoint pair into an Edge. Self-loops are the caller's
/// problem; Graph construction rejects them.
inline Edge make_edge(NodeId u, NodeId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Raised by the edge-list reader; `line` is the 1-based offending line.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line_no)
        : std::runtime_error(what), line(line_no) {}
    std::size_t line;
};

// Immutable undirected simple graph: fixed node count, unique normalized
// edges kept in insertion order, optional node labels. Edges are deliberately
// not sorted -- samplers emit tens of millions of edges on the hot path and
// order is irrelevant to every consumer here.
class Graph {
public:
    /// Validating constructor: normalizes endpoints, silently collapses
    /// duplicate edges (keeping first occurrence), throws std::invalid_argument
    /// on self-loops or endpoints >= n.
    Graph(std::size_t n, const std::vector<Edge>& edges,
          std::vector<std::string> labels = {});

    /// Trusted fast path for generators/samplers that produce edges already
    /// normalized, in-range, loop-free, and unique. No validation.
    static Graph from_unique_edges(std::size_t n, std::vector<Edge>&& edges,
                                   std::vector<std::string> labels = {});

    std::size_t node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_labels() const { return !labels_.empty(); }

    /// Node label; numeric string of the index when no labels were attached.
    std::string label(NodeId v) const;

    const std::vector<std::string>& labels() const { return labels_; }

private:
    Graph() = default;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_; // empty, or exactly n_ entries
};

// Nonnegative expected-degree (weight) sequence with its total precomputed.
class WeightSeq {
public:
    explicit WeightSeq(std::vector<double> weights);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& values() const { return weights_; }
    double total() const { return total_; }

private:
    std::vector<double> weights_;
    double total_ = 0.0;
};

/// Degree of every node, indexed by NodeId.
std::vector<std::size_t> degree_sequence(const Graph& g);

/// Reads the whitespace-separated edge-list format:
///   - '#' starts a comment (whole line or trailing), blank lines are skipped;
///   - two labels on a line form an edge (first occurrence of each label
///     assigns its node id, in reading order);
///   - one label on a line declares an isolated node;
///   - duplicate edges collapse silently; a self-loop raises ParseError with
///     its line number, as do lines with three or more labels.
Graph read_edge_list(std::istream& in);

/// Writes a graph back out in the same format: one "a b" line per edge in
/// stored order, then a single-label line per isolated node.
void write_edge_list(const Graph& g, std::ostream& out);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

} // namespace randnet
