#include "qwalk/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qwalk {

Graph Graph::from_edge_list(const std::vector<std::pair<int, int>>& pairs,
                            std::optional<int> n) {
    int max_label = 0;
    for (const auto& [a, b] : pairs) {
        if (a <= 0 || b <= 0)
            throw std::invalid_argument("from_edge_list: node labels must be positive, got (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b)
            throw std::invalid_argument("from_edge_list: self-loop at node " + std::to_string(a));
        max_label = std::max({max_label, a, b});
    }

    int node_count = n.value_or(max_label);
    if (node_count < 0) throw std::invalid_argument("from_edge_list: negative node count");
    if (max_label > node_count)
        throw std::invalid_argument("from_edge_list: label " + std::to_string(max_label) +
                                    " exceeds node count " + std::to_string(node_count));

    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        edges.push_back(Edge{std::min(a, b) - 1, std::max(a, b) - 1});
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw std::invalid_argument("from_edge_list: duplicate edge (" +
                                    std::to_string(dup->u + 1) + "," +
                                    std::to_string(dup->v + 1) + ")");
    return Graph(node_count, std::move(edges));
}

std::pair<int, int> Graph::edge_pair(int k) const {
    if (k < 1 || k > edge_count())
        throw std::invalid_argument("edge_pair: index " + std::to_string(k) +
                                    " out of range [1," + std::to_string(edge_count()) + "]");
    const Edge& e = edges_[k - 1];
    return {e.u + 1, e.v + 1};
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u == v) return std::nullopt;
    Edge target{std::min(u, v) - 1, std::max(u, v) - 1};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), target);
    if (it != edges_.end() && *it == target)
        return static_cast<int>(it - edges_.begin()) + 1;
    return std::nullopt;
}

Matrix Graph::adjacency_matrix() const {
    Matrix a(n_, n_);
    for (const Edge& e : edges_) {
        a(e.u, e.v) = 1.0;
        a(e.v, e.u) = 1.0;
    }
    return a;
}

Matrix Graph::laplacian_matrix() const {
    Matrix l(n_, n_);
    for (const Edge& e : edges_) {
        l(e.u, e.v) = -1.0;
        l(e.v, e.u) = -1.0;
        l(e.u, e.u) += 1.0;
        l(e.v, e.v) += 1.0;
    }
    return l;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const Edge& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

double Graph::degree_centrality(int j) const {
    if (n_ <= 1)
        throw std::invalid_argument("degree_centrality: undefined for a single-node graph");
    if (j < 1 || j > n_)
        throw std::invalid_argument("degree_centrality: node " + std::to_string(j) +
                                    " out of range [1," + std::to_string(n_) + "]");
    return static_cast<double>(degrees()[j - 1]) / (n_ - 1);
}

Graph Graph::remove_edge(int k) const {
    if (k < 1 || k > edge_count())
        throw std::invalid_argument("remove_edge: index " + std::to_string(k) +
                                    " out of range [1," + std::to_string(edge_count()) + "]");
    std::vector<Edge> remaining = edges_;
    remaining.erase(remaining.begin() + (k - 1));
    return Graph(n_, std::move(remaining));
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n_, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop();
        for (int next : adj[cur]) {
            if (!seen[next]) {
                seen[next] = 1;
                ++reached;
                frontier.push(next);
            }
        }
    }
    return reached == n_;
}

bool Graph::is_regular() const {
    std::vector<int> d = degrees();
    return std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; });
}

std::vector<std::pair<int, int>> read_edge_list_text(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long long a = 0, b = 0;
        if (!(fields >> a >> b))
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected two integers, got \"" + line + "\"");
        std::string extra;
        if (fields >> extra)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": trailing content \"" + extra + "\"");
        if (a <= 0 || b <= 0)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": node labels must be positive");
        if (a == b)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": self-loop at node " + std::to_string(a));
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return pairs;
}

void write_edge_list_text(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges())
        out << (e.u + 1) << ' ' << (e.v + 1) << '\n';
}

} // namespace qwalk
