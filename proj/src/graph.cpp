#include "smorder/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "smorder/graph6.hpp"

namespace smorder {

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 0..64, got " + std::to_string(n));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("loop edge rejected: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    for (int v = 0; v < n_; ++v) m_ += degree(v);
    m_ /= 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::uint64_t Graph::vertex_mask() const {
    if (n_ == 0) return 0;
    if (n_ == 64) return ~std::uint64_t{0};
    return (std::uint64_t{1} << n_) - 1;
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u + 1 < n_; ++u) {  // u = 63 has no higher neighbours
        std::uint64_t higher = adj_[u] >> (u + 1);
        for (int v = u + 1; higher; ++v, higher >>= 1) {
            if (higher & 1u) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::relabel(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabel: permutation size mismatch");
    EdgeSet mapped;
    mapped.reserve(static_cast<std::size_t>(m_));
    for (const auto& [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
    return Graph(n_, mapped);
}

Graph Graph::with_edge(int u, int v) const {
    EdgeSet e = edges();
    e.emplace_back(u, v);
    return Graph(n_, e);
}

Graph Graph::without_edge(int u, int v) const {
    EdgeSet e = edges();
    std::erase_if(e, [&](const Edge& x) {
        return (x.first == u && x.second == v) || (x.first == v && x.second == u);
    });
    return Graph(n_, e);
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph build_graph(int n, std::initializer_list<Edge> edges) {
    return Graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbor_mask(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

namespace {

struct BridgeDfs {
    const Graph& g;
    std::vector<int> disc, low;
    EdgeSet bridges;
    int timer = 0;

    explicit BridgeDfs(const Graph& graph)
        : g(graph), disc(graph.order(), -1), low(graph.order(), -1) {}

    void run(int u, int parent) {
        disc[u] = low[u] = timer++;
        std::uint64_t nbr = g.neighbor_mask(u);
        bool skipped_parent = false;
        while (nbr) {
            int v = std::countr_zero(nbr);
            nbr &= nbr - 1;
            if (v == parent && !skipped_parent) {
                // one parent edge only; simple graphs have no multi-edges
                skipped_parent = true;
                continue;
            }
            if (disc[v] == -1) {
                run(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) bridges.emplace_back(std::min(u, v), std::max(u, v));
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

EdgeSet cut_edges(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("cut_edges: graph is disconnected");
    if (g.order() == 0) return {};
    BridgeDfs dfs(g);
    dfs.run(0, -1);
    std::sort(dfs.bridges.begin(), dfs.bridges.end());
    return dfs.bridges;
}

int girth(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    // BFS from every vertex; a non-tree edge at depth d closes a cycle.
    std::vector<int> dist(n), parent(n), queue(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            if (2 * dist[u] >= best) break;
            std::uint64_t nbr = g.neighbor_mask(u);
            while (nbr) {
                int v = std::countr_zero(nbr);
                nbr &= nbr - 1;
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue[tail++] = v;
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

// ---------------------------------------------------------------------------
// Canonical form: colour refinement, then a lexicographic minimisation of the
// graph6 bit string over labelings compatible with the refined cells.

namespace {

// Equitable refinement with invariant colour ids: start from degrees, then
// repeatedly re-colour by (colour, sorted neighbour colours). The final ids
// depend only on the isomorphism type, so cells line up across isomorphic
// graphs.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);

    int classes = 0;
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            std::uint64_t mask = g.neighbor_mask(v);
            while (mask) {
                int u = std::countr_zero(mask);
                mask &= mask - 1;
                nb.push_back(color[u]);
            }
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> dict(sig);
        std::sort(dict.begin(), dict.end());
        dict.erase(std::unique(dict.begin(), dict.end()), dict.end());
        for (int v = 0; v < n; ++v) {
            color[v] = static_cast<int>(
                std::lower_bound(dict.begin(), dict.end(), sig[v]) - dict.begin());
        }
        int now = static_cast<int>(dict.size());
        if (now == classes) break;
        classes = now;
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> cells;  // vertices grouped by colour, colour order
    std::vector<int> cell_of_pos;         // which cell fills each position
    std::vector<std::uint8_t> best;       // best bit string found, graph6 bit order
    std::vector<std::uint8_t> cur;
    std::vector<int> placed;              // position -> vertex
    std::vector<bool> used;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
        std::vector<int> color = refine_colors(g);
        int classes = *std::max_element(color.begin(), color.end()) + 1;
        cells.assign(static_cast<std::size_t>(classes), {});
        for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
        for (int c = 0; c < classes; ++c)
            for (std::size_t i = 0; i < cells[c].size(); ++i) cell_of_pos.push_back(c);
        best.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
        cur = best;
        placed.assign(n, -1);
        used.assign(n, false);
    }

    // bits for position i are adjacency to positions 0..i-1 (graph6 order)
    void descend(int pos, bool tied) {
        if (pos == n) {
            if (!have_best || cur < best) best = cur;
            have_best = true;
            return;
        }
        std::size_t base = static_cast<std::size_t>(pos) * (pos - 1) / 2;
        std::uint64_t tried_twins = 0;
        for (int v : cells[cell_of_pos[pos]]) {
            if (used[v]) continue;
            // twins (same closed/open neighbourhood) are interchangeable by a
            // transposition automorphism; trying one representative suffices
            bool twin_seen = false;
            std::uint64_t tw = tried_twins;
            while (tw) {
                int w = std::countr_zero(tw);
                tw &= tw - 1;
                std::uint64_t nu = g.neighbor_mask(v) & ~(std::uint64_t{1} << w);
                std::uint64_t nw = g.neighbor_mask(w) & ~(std::uint64_t{1} << v);
                if (nu == nw) {
                    twin_seen = true;
                    break;
                }
            }
            if (twin_seen) continue;
            tried_twins |= std::uint64_t{1} << v;

            bool child_tied = tied;
            bool worse = false;
            for (int p = 0; p < pos; ++p) {
                std::uint8_t bit = g.has_edge(placed[p], v) ? 1 : 0;
                cur[base + p] = bit;
                if (child_tied && have_best) {
                    if (bit > best[base + p]) {
                        worse = true;
                        break;
                    }
                    if (bit < best[base + p]) child_tied = false;
                }
            }
            if (worse) continue;
            placed[pos] = v;
            used[v] = true;
            descend(pos + 1, child_tied);
            used[v] = false;
        }
    }
};

}  // namespace

CanonicalCode canonical_form(const Graph& g, int max_n) {
    if (g.order() > max_n)
        throw std::invalid_argument("canonical_form: order " + std::to_string(g.order()) +
                                    " exceeds bound " + std::to_string(max_n));
    return emit_graph6(canonical_graph(g, max_n));
}

Graph canonical_graph(const Graph& g, int max_n) {
    if (g.order() > max_n)
        throw std::invalid_argument("canonical_graph: order " + std::to_string(g.order()) +
                                    " exceeds bound " + std::to_string(max_n));
    const int n = g.order();
    if (n <= 1) return g;
    CanonSearch search(g);
    search.descend(0, true);
    EdgeSet edges;
    for (int j = 1; j < n; ++j) {
        std::size_t base = static_cast<std::size_t>(j) * (j - 1) / 2;
        for (int i = 0; i < j; ++i) {
            if (search.best[base + i]) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

}  // namespace smorder
