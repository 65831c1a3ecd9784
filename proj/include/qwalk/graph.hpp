#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/matrix.hpp"

namespace qwalk {

/// Undirected edge, stored 0-based with u < v.
struct Edge {
    int u, v;
    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

/// Immutable simple undirected graph.
///
/// Nodes are labeled 1..N in every public signature and in all file formats;
/// storage is 0-based. Edges are kept canonically sorted (lexicographic on
/// the normalized (u,v) pair, u < v), and "edge k" means the 1-based position
/// in that list, so edge indices are stable across runs.
class Graph {
public:
    /// Builds a graph from 1-based node pairs. When `n` is absent, N is the
    /// largest label seen. Rejects self-loops, duplicate edges (as unordered
    /// pairs), non-positive labels and labels above n.
    static Graph from_edge_list(const std::vector<std::pair<int, int>>& pairs,
                                std::optional<int> n = std::nullopt);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Canonically sorted 0-based edge list.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edge at 1-based index k, as a 1-based (u,v) pair.
    std::pair<int, int> edge_pair(int k) const;

    /// 1-based index of edge (u,v) given 1-based endpoints, if present.
    std::optional<int> edge_index(int u, int v) const;

    Matrix adjacency_matrix() const;
    Matrix laplacian_matrix() const;

    std::vector<int> degrees() const;

    /// Degree centrality C_j = d_j / (N-1) for 1-based node j. Undefined
    /// (rejected) on a single-node graph.
    double degree_centrality(int j) const;

    /// New graph with edge k (1-based) removed; remaining edges keep their
    /// relative order. The receiver is unchanged.
    Graph remove_edge(int k) const;

    bool is_connected() const;
    bool is_regular() const;

    bool operator==(const Graph&) const = default;

private:
    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Parses the edge-list text format: one edge per line as two whitespace-
/// separated positive 1-based integers; lines starting with '#' and blank
/// lines are ignored. Errors carry the 1-based line number.
std::vector<std::pair<int, int>> read_edge_list_text(std::istream& in);

/// Writes the same format, one "u v" line per edge in canonical order.
void write_edge_list_text(std::ostream& out, const Graph& g);

} // namespace qwalk
