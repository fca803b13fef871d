#ifndef SMORDER_TESTS_PROPERTY_CHECKS_HPP
#define SMORDER_TESTS_PROPERTY_CHECKS_HPP

// The four standalone property suites. Shared by the doctest cases and the
// acceptance runner so both report on exactly the same checks. Each returns
// an empty optional on success or a description of the first failure.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "smorder/census.hpp"
#include "smorder/graph.hpp"
#include "smorder/graph6.hpp"
#include "smorder/spectral.hpp"

namespace smorder::tests {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    EdgeSet edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// graph6 round trip: exhaustive n <= 5, random n <= 40.
inline std::optional<std::string> property_graph6_roundtrip() {
    for (int n = 0; n <= 5; ++n) {
        EdgeSet slots;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            EdgeSet edges;
            for (std::size_t b = 0; b < slots.size(); ++b)
                if ((mask >> b) & 1) edges.push_back(slots[b]);
            Graph g(n, edges);
            if (parse_graph6(emit_graph6(g)) != g) {
                return "round trip failed for n=" + std::to_string(n) +
                       " mask=" + std::to_string(mask);
            }
        }
    }
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 40);
        Graph g = random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
        std::string text = emit_graph6(g);
        if (parse_graph6(text) != g || emit_graph6(parse_graph6(text)) != text)
            return "random round trip failed: " + text;
    }
    return std::nullopt;
}

// bridges vs deletion-reconnectivity, exhaustive over connected n <= 6.
inline std::optional<std::string> property_bridge_oracle() {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            EdgeSet bridges = cut_edges(g);
            for (const Edge& e : g.edges()) {
                bool is_bridge =
                    std::find(bridges.begin(), bridges.end(), e) != bridges.end();
                bool still_connected = is_connected(g.without_edge(e.first, e.second));
                if (still_connected == is_bridge)
                    return "bridge mismatch in " + emit_graph6(g) + " at edge (" +
                           std::to_string(e.first) + "," + std::to_string(e.second) + ")";
            }
        }
    }
    return std::nullopt;
}

// canonical codes constant under relabeling: 200 random graphs, 20 perms each.
inline std::optional<std::string> property_canonical_invariance() {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.3 + 0.05 * static_cast<double>(rng() % 9), rng);
        CanonicalCode code = canonical_form(g);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int p = 0; p < 20; ++p) {
            std::shuffle(perm.begin(), perm.end(), rng);
            if (canonical_form(g.relabel(perm)) != code)
                return "canonical code changed under relabeling of " + emit_graph6(g);
        }
    }
    return std::nullopt;
}

// total preorder behaviour of s_compare on random triples.
inline std::optional<std::string> property_s_compare_transitivity() {
    std::mt19937_64 rng(991);
    auto leq = [](const Graph& a, const Graph& b) {
        SRelation r = s_compare(a, b).relation;
        return r == SRelation::precedes || r == SRelation::equal;
    };
    for (int trial = 0; trial < 150; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        std::array<Graph, 3> t = {random_graph(n, 0.5, rng), random_graph(n, 0.5, rng),
                                  random_graph(n, 0.5, rng)};

        SOrderResult ab = s_compare(t[0], t[1]);
        SOrderResult ba = s_compare(t[1], t[0]);
        bool mirror_ok =
            (ab.relation == SRelation::equal && ba.relation == SRelation::equal) ||
            (ab.relation == SRelation::precedes && ba.relation == SRelation::succeeds) ||
            (ab.relation == SRelation::succeeds && ba.relation == SRelation::precedes);
        if (!mirror_ok || ab.pivot != ba.pivot)
            return "comparison is not antisymmetric on trial " + std::to_string(trial);

        std::array<int, 3> idx = {0, 1, 2};
        std::sort(idx.begin(), idx.end());
        do {
            const Graph& x = t[static_cast<std::size_t>(idx[0])];
            const Graph& y = t[static_cast<std::size_t>(idx[1])];
            const Graph& z = t[static_cast<std::size_t>(idx[2])];
            if (leq(x, y) && leq(y, z) && !leq(x, z))
                return "transitivity failed on trial " + std::to_string(trial);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return std::nullopt;
}

}  // namespace smorder::tests

#endif
