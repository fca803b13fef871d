#include "smorder/motifs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace smorder {

namespace {

Graph make_pattern(Motif m) {
    switch (m) {
        case Motif::P2: return build_graph(2, {{0, 1}});
        case Motif::P3: return build_graph(3, {{0, 1}, {1, 2}});
        case Motif::P4: return build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
        case Motif::K13: return build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
        case Motif::C3: return build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
        case Motif::C4: return build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        case Motif::C5: return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        case Motif::C6:
            return build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
        case Motif::U4: return build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
        case Motif::U5: return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
        case Motif::B4: return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
        case Motif::B5:
            return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    }
    throw std::invalid_argument("unknown motif");
}

int brute_automorphisms(const Graph& p) {
    const int n = p.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (p.has_edge(u, v) != p.has_edge(perm[u], perm[v])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

std::string_view motif_name(Motif m) {
    switch (m) {
        case Motif::P2: return "P2";
        case Motif::P3: return "P3";
        case Motif::P4: return "P4";
        case Motif::K13: return "K13";
        case Motif::C3: return "C3";
        case Motif::C4: return "C4";
        case Motif::C5: return "C5";
        case Motif::C6: return "C6";
        case Motif::U4: return "U4";
        case Motif::U5: return "U5";
        case Motif::B4: return "B4";
        case Motif::B5: return "B5";
    }
    return "?";
}

const Graph& motif_pattern(Motif m) {
    static const std::array<Graph, kMotifCount> patterns = [] {
        std::array<Graph, kMotifCount> out;
        for (Motif t : kAllMotifs) out[static_cast<int>(t)] = make_pattern(t);
        return out;
    }();
    return patterns[static_cast<int>(m)];
}

int motif_automorphisms(Motif m) {
    static const std::array<int, kMotifCount> auts = [] {
        std::array<int, kMotifCount> out;
        for (Motif t : kAllMotifs) out[static_cast<int>(t)] = brute_automorphisms(motif_pattern(t));
        return out;
    }();
    return auts[static_cast<int>(m)];
}

std::uint64_t count_motif(const Graph& g, Motif m) {
    const Graph& pat = motif_pattern(m);
    const int p = pat.order();
    const int n = g.order();
    if (p > n || pat.edge_count() > g.edge_count()) return 0;

    const EdgeSet pat_edges = pat.edges();
    std::uint64_t embeddings = 0;

    // all p-subsets of 0..n-1, then all injective assignments on the subset
    std::vector<int> idx(p);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<int> assign(idx);
        std::sort(assign.begin(), assign.end());
        do {
            bool ok = true;
            for (const auto& [a, b] : pat_edges) {
                if (!g.has_edge(assign[a], assign[b])) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++embeddings;
        } while (std::next_permutation(assign.begin(), assign.end()));

        // next combination
        int i = p - 1;
        while (i >= 0 && idx[i] == n - p + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
    return embeddings / static_cast<std::uint64_t>(motif_automorphisms(m));
}

MotifCounts count_all(const Graph& g) {
    MotifCounts out;
    for (Motif m : kAllMotifs) out[m] = count_motif(g, m);
    return out;
}

namespace {

inline std::uint64_t choose2(std::uint64_t x) { return x * (x - 1) / 2; }
inline std::uint64_t choose3(std::uint64_t x) {
    return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6;
}

// Enumerates simple cycles of length len once each: smallest vertex first,
// direction fixed by second < last. Calls visit(path, vertex mask) per cycle.
template <typename Visit>
void for_each_cycle(const Graph& g, int len, Visit&& visit) {
    const int n = g.order();
    std::vector<int> path(len);
    std::uint64_t on_path = 0;

    auto dfs = [&](auto&& self, int depth) -> void {
        int u = path[depth - 1];
        if (depth == len) {
            if (g.has_edge(u, path[0]) && path[1] < path[len - 1]) visit(path, on_path);
            return;
        }
        std::uint64_t cand = g.neighbor_mask(u) & ~on_path;
        // only vertices above the anchor close canonical cycles
        cand &= ~((std::uint64_t{2} << path[0]) - 1);
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            path[depth] = v;
            on_path |= std::uint64_t{1} << v;
            self(self, depth + 1);
            on_path &= ~(std::uint64_t{1} << v);
        }
    };

    for (int s = 0; s < n; ++s) {
        path[0] = s;
        on_path = std::uint64_t{1} << s;
        dfs(dfs, 1);
        on_path = 0;
    }
}

}  // namespace

MotifCounts fast_counts(const Graph& g) {
    MotifCounts out;
    const int n = g.order();

    out[Motif::P2] = static_cast<std::uint64_t>(g.edge_count());             // m
    for (int v = 0; v < n; ++v) {
        out[Motif::P3] += choose2(static_cast<std::uint64_t>(g.degree(v)));  // sum C(d,2)
        out[Motif::K13] += choose3(static_cast<std::uint64_t>(g.degree(v)));
    }

    // per-edge and per-vertex triangle counts
    std::uint64_t tri_edge_sum = 0;  // sum over edges of t_e = 3 * #triangles
    std::uint64_t p4_mid = 0;        // sum over edges of (du-1)(dv-1)
    std::vector<std::uint64_t> tri_at(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        std::uint64_t common = g.neighbor_mask(u) & g.neighbor_mask(v);
        auto t_e = static_cast<std::uint64_t>(std::popcount(common));
        tri_edge_sum += t_e;
        out[Motif::B4] += choose2(t_e);
        tri_at[u] += t_e;
        tri_at[v] += t_e;
        p4_mid += static_cast<std::uint64_t>(g.degree(u) - 1) *
                  static_cast<std::uint64_t>(g.degree(v) - 1);
    }
    out[Motif::C3] = tri_edge_sum / 3;
    out[Motif::P4] = p4_mid - 3 * out[Motif::C3];
    for (int v = 0; v < n; ++v) out[Motif::B5] += choose2(tri_at[v] / 2);
    out[Motif::B5] -= 2 * out[Motif::B4];

    // pendant edges leave the cycle's vertex set; for triangles d_v - 2
    // already excludes both cycle neighbours, for 4-cycles chords must be
    // masked out too
    for_each_cycle(g, 3, [&](const std::vector<int>& cyc, std::uint64_t) {
        for (int v : cyc) out[Motif::U4] += static_cast<std::uint64_t>(g.degree(v) - 2);
    });
    for_each_cycle(g, 4, [&](const std::vector<int>& cyc, std::uint64_t mask) {
        ++out[Motif::C4];
        for (int v : cyc)
            out[Motif::U5] +=
                static_cast<std::uint64_t>(std::popcount(g.neighbor_mask(v) & ~mask));
    });
    for_each_cycle(g, 5, [&](const std::vector<int>&, std::uint64_t) { ++out[Motif::C5]; });
    for_each_cycle(g, 6, [&](const std::vector<int>&, std::uint64_t) { ++out[Motif::C6]; });

    return out;
}

}  // namespace smorder
