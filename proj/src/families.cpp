#include "smorder/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace smorder {

namespace {

void add_clique(EdgeSet& edges, int first, int count) {
    for (int i = first; i < first + count; ++i)
        for (int j = i + 1; j < first + count; ++j) edges.emplace_back(i, j);
}

void add_cycle(EdgeSet& edges, int first, int count) {
    for (int i = 0; i < count; ++i)
        edges.emplace_back(first + i, first + (i + 1) % count);
}

[[noreturn]] void infeasible(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

Graph knk(int n, int k) {
    if (n < 1) infeasible("knk: n >= 1 required");
    if (k < 0 || k > n - 1) infeasible("knk: 0 <= k <= n-1 required");
    EdgeSet edges;
    add_clique(edges, 0, n - k);
    for (int p = n - k; p < n; ++p) edges.emplace_back(0, p);
    return Graph(n, edges);
}

Graph pnk(int n, int k) {
    if (k < 0) infeasible("pnk: k >= 0 required");
    if (n - k < 3) infeasible("pnk: girth n-k < 3");
    const int c = n - k;
    EdgeSet edges;
    add_cycle(edges, 0, c);
    for (int p = c; p < n; ++p) edges.emplace_back(p == c ? 0 : p - 1, p);
    return Graph(n, edges);
}

Graph star_of_cliques(int a0, std::span<const int> parts) {
    if (a0 < 1) infeasible("star_of_cliques: a0 >= 1 required");
    for (int a : parts)
        if (a < 1) infeasible("star_of_cliques: every part >= 1 required");
    int n = a0 + std::accumulate(parts.begin(), parts.end(), 0);
    EdgeSet edges;
    add_clique(edges, 0, a0);
    int at = a0;
    for (int a : parts) {
        add_clique(edges, at, a);
        edges.emplace_back(0, at);
        at += a;
    }
    return Graph(n, edges);
}

Graph star_of_cliques(int a0, std::initializer_list<int> parts) {
    return star_of_cliques(a0, std::span<const int>(parts.begin(), parts.size()));
}

Graph g1(int n) {
    if (n < 2) infeasible("g1: n >= 2 required");
    return knk(n, 0).without_edge(n - 2, n - 1);
}

Graph g2(int n) {
    if (n < 5) infeasible("g2: n >= 5 required");
    // delete a clique edge avoiding the attachment vertex 0
    return knk(n, 1).without_edge(1, 2);
}

Graph g3(int n, int k) {
    if (k < 2) infeasible("g3: k >= 2 required");
    if (n - k < 3) infeasible("g3: n-k >= 3 required");
    // move the last pendant from the attachment vertex 0 to clique vertex 1
    return knk(n, k).without_edge(0, n - 1).with_edge(1, n - 1);
}

Graph star_plus(int n) {
    if (n < 3) infeasible("star_plus: n >= 3 required");
    EdgeSet edges;
    for (int v = 1; v <= n - 2; ++v) edges.emplace_back(0, v);
    edges.emplace_back(n - 2, n - 1);
    return Graph(n, edges);
}

Graph uhat(int n, int k) {
    if (k < 3) infeasible("uhat: k >= 3 required");
    if (n - k < 3) infeasible("uhat: girth n-k < 3");
    Graph stem = pnk(n - 2, k - 2);  // pendant endpoint is n-3
    EdgeSet edges = stem.edges();
    edges.emplace_back(n - 3, n - 2);
    edges.emplace_back(n - 3, n - 1);
    return Graph(n, edges);
}

Graph ung(int n, int g) {
    if (g < 3) infeasible("ung: girth g >= 3 required");
    if (g > n) infeasible("ung: g <= n required");
    return pnk(n, n - g);
}

}  // namespace smorder
