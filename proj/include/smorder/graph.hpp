#ifndef SMORDER_GRAPH_HPP
#define SMORDER_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace smorder {

// Unordered vertex pair, normalised u < v.
using Edge = std::pair<int, int>;
using EdgeSet = std::vector<Edge>;

// Simple undirected graph on vertices 0..n-1, n <= 64. Adjacency is one
// machine word per vertex so edge tests and neighbour scans are O(1)-ish,
// which is what the census loops live on. Immutable after construction;
// share freely between threads.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;  // K_0
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
    int degree(int v) const;

    // All vertices as a bitmask: (1<<n)-1, all 64 bits when n = 64.
    std::uint64_t vertex_mask() const;

    EdgeSet edges() const;

    // New graph with vertex i renamed to perm[i]; perm must be a
    // permutation of 0..n-1.
    Graph relabel(std::span<const int> perm) const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    bool operator==(const Graph& rhs) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Builds the simple graph with the given edges; duplicates collapse.
// Throws std::invalid_argument on out-of-range endpoints or loops.
Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<Edge> edges);

// K_0 and K_1 count as connected.
bool is_connected(const Graph& g);

// Bridges of a connected graph, one DFS with low-links. Sorted.
// Throws std::invalid_argument on disconnected input.
EdgeSet cut_edges(const Graph& g);

// Length of a shortest cycle; 0 for forests.
int girth(const Graph& g);

// Total-order key that is equal for two graphs iff they are isomorphic.
// Concretely the lexicographically smallest graph6 encoding over the
// labelings admitted by colour refinement, so it is re-parseable.
using CanonicalCode = std::string;

// Degree refinement plus pruned search over the residual permutations.
// Throws std::invalid_argument when g.order() > max_n.
CanonicalCode canonical_form(const Graph& g, int max_n = 10);

// The relabeled representative the code encodes.
Graph canonical_graph(const Graph& g, int max_n = 10);

}  // namespace smorder

#endif
