#include "smorder/motifs.hpp"

#include <random>

#include <stdexcept>

#include "doctest.h"
#include "smorder/families.hpp"

using namespace smorder;

namespace {

Graph petersen() {
    EdgeSet edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);      // outer cycle
        edges.emplace_back(i, i + 5);            // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, edges);
}

Graph bowtie() {
    return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    EdgeSet edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

TEST_SUITE("motifs") {

TEST_CASE("pattern automorphism counts") {
    CHECK(motif_automorphisms(Motif::P2) == 2);
    CHECK(motif_automorphisms(Motif::P3) == 2);
    CHECK(motif_automorphisms(Motif::P4) == 2);
    CHECK(motif_automorphisms(Motif::K13) == 6);
    CHECK(motif_automorphisms(Motif::C3) == 6);
    CHECK(motif_automorphisms(Motif::C4) == 8);
    CHECK(motif_automorphisms(Motif::C5) == 10);
    CHECK(motif_automorphisms(Motif::C6) == 12);
    CHECK(motif_automorphisms(Motif::U4) == 2);
    CHECK(motif_automorphisms(Motif::U5) == 2);
    CHECK(motif_automorphisms(Motif::B4) == 4);
    CHECK(motif_automorphisms(Motif::B5) == 8);
}

TEST_CASE("count_motif on small anchors") {
    Graph k4 = knk(4, 0);
    CHECK(count_motif(k4, Motif::C3) == 4);   // one triangle per 3-subset
    CHECK(count_motif(k4, Motif::B4) == 6);   // one diamond per omitted edge

    Graph c4 = pnk(4, 0);
    CHECK(count_motif(c4, Motif::P3) == 4);   // one 2-path centred per vertex

    CHECK(count_motif(bowtie(), Motif::B5) == 1);  // identity case
}

TEST_CASE("count_all on tiny graphs") {
    MotifCounts k3 = count_all(build_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    MotifCounts k3_expected;
    k3_expected[Motif::P2] = 3;
    k3_expected[Motif::P3] = 3;
    k3_expected[Motif::C3] = 1;
    CHECK(k3 == k3_expected);

    MotifCounts c6 = count_all(pnk(6, 0));
    MotifCounts c6_expected;
    c6_expected[Motif::P2] = 6;
    c6_expected[Motif::P3] = 6;
    c6_expected[Motif::P4] = 6;
    c6_expected[Motif::C6] = 1;
    CHECK(c6 == c6_expected);

    MotifCounts k1 = count_all(build_graph(1, {}));
    CHECK(k1 == MotifCounts{});
}

TEST_CASE("counts vanish when the pattern exceeds the graph") {
    Graph k2 = build_graph(2, {{0, 1}});
    for (Motif m : kAllMotifs) {
        if (m == Motif::P2) continue;
        CHECK(count_motif(k2, m) == 0);
    }
}

TEST_CASE("fast_counts equals the subset enumerator on anchors") {
    CHECK(fast_counts(knk(4, 0)) == count_all(knk(4, 0)));
    CHECK(fast_counts(petersen()) == count_all(petersen()));
    CHECK(fast_counts(bowtie()) == count_all(bowtie()));
    CHECK(fast_counts(knk(7, 2)) == count_all(knk(7, 2)));
    CHECK(fast_counts(uhat(8, 3)) == count_all(uhat(8, 3)));
}

TEST_CASE("petersen motif profile") {
    MotifCounts c = fast_counts(petersen());
    CHECK(c[Motif::P2] == 15);
    CHECK(c[Motif::P3] == 30);
    CHECK(c[Motif::C3] == 0);
    CHECK(c[Motif::C4] == 0);
    CHECK(c[Motif::C5] == 12);
    CHECK(c[Motif::C6] == 10);
    CHECK(c[Motif::K13] == 10);
}

TEST_CASE("fast_counts equals the enumerator on random graphs") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.25 + 0.07 * static_cast<double>(rng() % 8), rng);
        CHECK(fast_counts(g) == count_all(g));
    }
}

TEST_CASE("edge deletion never increases a count") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, 0.5, rng);
        if (g.edge_count() == 0) continue;
        EdgeSet edges = g.edges();
        Edge victim = edges[rng() % edges.size()];
        MotifCounts before = fast_counts(g);
        MotifCounts after = fast_counts(g.without_edge(victim.first, victim.second));
        for (Motif m : kAllMotifs) CHECK(after[m] <= before[m]);
    }
}

}  // TEST_SUITE
