#include "randnet/graph.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace randnet {

namespace {

std::uint64_t edge_key(const Edge& e) {
    return (static_cast<std::uint64_t>(e.a) << 32) | e.b;
}

} // namespace

Graph::Graph(std::size_t n, const std::vector<Edge>& edges,
             std::vector<std::string> labels) {
    if (n > std::numeric_limits<NodeId>::max()) {
        throw std::invalid_argument("graph: node count exceeds id range");
    }
    if (!labels.empty() && labels.size() != n) {
        throw std::invalid_argument("graph: label count does not match node count");
    }
    n_ = n;
    labels_ = std::move(labels);

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        if (raw.a == raw.b) {
            throw std::invalid_argument("graph: self-loop on node " +
                                        std::to_string(raw.a));
        }
        if (raw.a >= n_ || raw.b >= n_) {
            throw std::invalid_argument("graph: edge endpoint out of range");
        }
        Edge e = make_edge(raw.a, raw.b);
        if (seen.insert(edge_key(e)).second) {
            edges_.push_back(e);
        }
    }
}

Graph Graph::from_unique_edges(std::size_t n, std::vector<Edge>&& edges,
                               std::vector<std::string> labels) {
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.labels_ = std::move(labels);
    return g;
}

std::string Graph::label(NodeId v) const {
    if (v >= n_) {
        throw std::out_of_range("graph: node id out of range");
    }
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

WeightSeq::WeightSeq(std::vector<double> weights) : weights_(std::move(weights)) {
    for (double w : weights_) {
        if (!(w >= 0.0)) { // also rejects NaN
            throw std::invalid_argument("weights: entries must be nonnegative");
        }
        total_ += w;
    }
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> deg(g.node_count(), 0);
    for (const Edge& e : g.edges()) {
        ++deg[e.a];
        ++deg[e.b];
    }
    return deg;
}

Graph read_edge_list(std::istream& in) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;

    auto intern = [&](const std::string& token) -> NodeId {
        auto [it, inserted] = ids.emplace(token, static_cast<NodeId>(labels.size()));
        if (inserted) {
            labels.push_back(token);
        }
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string first, second, extra;
        if (!(fields >> first)) {
            continue; // blank or comment-only line
        }
        if (!(fields >> second)) {
            intern(first); // isolated-node declaration
            continue;
        }
        if (fields >> extra) {
            throw ParseError("edge list: expected at most two labels per line",
                             line_no);
        }
        NodeId u = intern(first);
        NodeId v = intern(second);
        if (u == v) {
            throw ParseError("edge list: self-loop on node '" + first + "'",
                             line_no);
        }
        Edge e = make_edge(u, v);
        if (seen.insert(edge_key(e)).second) {
            edges.push_back(e);
        }
    }
    const std::size_t n = labels.size();
    return Graph::from_unique_edges(n, std::move(edges), std::move(labels));
}

void write_edge_list(const Graph& g, std::ostream& out) {
    std::vector<bool> touched(g.node_count(), false);
    for (const Edge& e : g.edges()) {
        touched[e.a] = true;
        touched[e.b] = true;
        out << g.label(e.a) << ' ' << g.label(e.b) << '\n';
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!touched[v]) {
            out << g.label(v) << '\n';
        }
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open edge list: " + path);
    }
    return read_edge_list(in);
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    write_edge_list(g, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

} // namespace randnet
