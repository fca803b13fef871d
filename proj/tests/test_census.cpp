#include "smorder/census.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "smorder/families.hpp"
#include "smorder/graph6.hpp"

using namespace smorder;

namespace {

struct ThreadsGuard {
    explicit ThreadsGuard(const char* value) { setenv("SMORDER_THREADS", value, 1); }
    ~ThreadsGuard() { unsetenv("SMORDER_THREADS"); }
};

const ClaimResult* find_claim(const VerificationReport& report, const std::string& claim,
                              int k) {
    for (const ClaimResult& c : report.claims)
        if (c.claim == claim && c.k == k) return &c;
    return nullptr;
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("enumeration matches the published counts up to n=6") {
    CHECK(enumerate_connected(1).size() == 1);
    CHECK(enumerate_connected(2).size() == 1);
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(6).size() == 112);
    CHECK_THROWS_AS(enumerate_connected(8), std::invalid_argument);
}

TEST_CASE("enumeration output is deterministic across worker counts") {
    std::vector<Graph> solo, pooled;
    {
        ThreadsGuard guard("1");
        solo = enumerate_connected(5);
    }
    {
        ThreadsGuard guard("3");
        pooled = enumerate_connected(5);
    }
    CHECK(solo == pooled);
}

TEST_CASE("classify splits the 4-vertex census correctly") {
    auto classes = classify(enumerate_connected(4));
    REQUIRE(classes.count(0) == 1);
    CHECK(classes[0].members.size() == 3);  // C_4, diamond, K_4
    CHECK(classes.count(1) == 1);
    CHECK(classes[1].members.size() == 1);  // the paw
    CHECK(classes.count(2) == 0);           // k = n-2 infeasible
    REQUIRE(classes.count(3) == 1);
    CHECK(classes[3].members.size() == 2);  // the two trees

    std::set<CanonicalCode> k0;
    for (const Graph& g : classes[0].members) k0.insert(canonical_form(g));
    CHECK(k0 == std::set<CanonicalCode>{canonical_form(pnk(4, 0)), canonical_form(g1(4)),
                                        canonical_form(knk(4, 0))});
}

TEST_CASE("classify rejects mixed orders") {
    std::vector<Graph> mixed = {build_graph(3, {{0, 1}, {1, 2}, {0, 2}}),
                                build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})};
    CHECK_THROWS_AS(classify(mixed), std::invalid_argument);
}

TEST_CASE("trees are exactly the class k=n-1") {
    for (int n = 2; n <= 6; ++n) {
        auto classes = classify(enumerate_connected(n));
        REQUIRE(classes.count(n - 1) == 1);
        for (const Graph& g : classes[n - 1].members)
            CHECK(g.edge_count() == n - 1);
    }
}

TEST_CASE("rank pins the documented extremes of small classes") {
    auto classes = classify(enumerate_connected(6));

    RankReport r2 = rank(classes[2]);
    CHECK(r2.last()->g6 == canonical_form(knk(6, 2)));
    CHECK(r2.second_last()->g6 == canonical_form(g3(6, 2)));

    RankReport r3 = rank(classes[3]);
    CHECK(r3.first()->g6 == canonical_form(pnk(6, 3)));
    CHECK(r3.second()->g6 == canonical_form(uhat(6, 3)));
    CHECK(r3.last()->g6 == canonical_form(knk(6, 3)));

    // trees: path first, near-star second last, star last
    RankReport r5 = rank(classes[5]);
    CHECK(r5.last()->g6 == canonical_form(knk(6, 5)));
    CHECK(r5.second_last()->g6 == canonical_form(star_plus(6)));

    RankReport r1 = rank(classes[1]);
    CHECK(r1.last()->g6 == canonical_form(knk(6, 1)));
    CHECK(r1.second_last()->g6 == canonical_form(g2(6)));
    CHECK(r1.first()->g6 == canonical_form(pnk(6, 1)));
}

TEST_CASE("g2(5) is the second last graph of the 5-vertex k=1 class") {
    auto classes = classify(enumerate_connected(5));
    RankReport r1 = rank(classes[1]);
    CHECK(r1.second_last()->g6 == canonical_form(g2(5)));
}

TEST_CASE("rank reports are ordered and deterministic") {
    auto classes = classify(enumerate_connected(6));
    RankReport report = rank(classes[0]);
    for (std::size_t i = 0; i + 1 < report.ordered.size(); ++i) {
        SOrderResult r = s_compare(report.ordered[i].moments, report.ordered[i + 1].moments);
        CHECK(r.relation != SRelation::succeeds);
    }
    RankReport again = rank(classes[0]);
    for (std::size_t i = 0; i < report.ordered.size(); ++i)
        CHECK(report.ordered[i].g6 == again.ordered[i].g6);
}

TEST_CASE("ingest parses, deduplicates and reports bad lines") {
    std::string path = "ingest_test_tmp.g6";
    {
        std::ofstream out(path);
        out << ">>graph6<<" << emit_graph6(pnk(5, 0)) << "\n";
        out << emit_graph6(knk(5, 0)) << "\n";
        out << "\n";
        out << emit_graph6(pnk(5, 0).relabel(std::vector<int>{4, 3, 2, 1, 0})) << "\n";
        out << "not graph6 at all\x01\n";
        out << emit_graph6(knk(5, 2)) << "\n";
    }
    IngestResult result = ingest_graph6_file(path);
    std::remove(path.c_str());

    CHECK(result.lines_parsed == 4);
    CHECK(result.duplicates == 1);
    CHECK(result.graphs.size() == 3);
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].line == 5);
}

TEST_CASE("ingest strict mode throws with the line number") {
    std::istringstream in("Bw\nnot-a-graph\x01\n");
    CHECK_THROWS_WITH_AS(ingest_graph6(in, true),
                         doctest::Contains("line 2"), std::runtime_error);
}

TEST_CASE("ingest of an empty stream yields nothing") {
    std::istringstream in("");
    IngestResult result = ingest_graph6(in);
    CHECK(result.graphs.empty());
    CHECK(result.lines_parsed == 0);
}

TEST_CASE("ingest reports graphs beyond the canonicalization bound") {
    EdgeSet path;
    for (int i = 0; i + 1 < 12; ++i) path.emplace_back(i, i + 1);
    std::istringstream in(emit_graph6(Graph(12, path)) + "\nBw\n");
    IngestResult result = ingest_graph6(in);
    CHECK(result.graphs.size() == 1);
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].line == 1);
}

TEST_CASE("verification passes for n=4..6 and flags the empty class") {
    for (int n = 4; n <= 6; ++n) {
        VerificationReport report = verify_theorems(n);
        CHECK(report.all_pass());

        const ClaimResult* infeasible = find_claim(report, "k-infeasible", n - 2);
        REQUIRE(infeasible != nullptr);
        CHECK(infeasible->status == ClaimStatus::pass);
    }
}

TEST_CASE("verification claims cover the stated regimes at n=6") {
    VerificationReport report = verify_theorems(6);

    const ClaimResult* second = find_claim(report, "second", 3);
    REQUIRE(second != nullptr);
    CHECK(second->status == ClaimStatus::pass);
    CHECK(second->expected_g6 == canonical_form(uhat(6, 3)));

    CHECK(find_claim(report, "second-observed", 1) != nullptr);
    CHECK(find_claim(report, "second-observed", 2) != nullptr);

    const ClaimResult* girth3 = find_claim(report, "girth-first", 3);  // g=3 -> k=3
    REQUIRE(girth3 != nullptr);
    CHECK(girth3->status == ClaimStatus::pass);

    // feasible set: 0..n-3 plus the trees
    CHECK(report.feasible_k == std::vector<int>{0, 1, 2, 3, 5});
}

TEST_CASE("report writers produce one record per claim") {
    VerificationReport report = verify_theorems(4);

    std::ostringstream text;
    write_report_text(text, report);
    CHECK(text.str().find("ALL CLAIMS PASS") != std::string::npos);

    std::ostringstream jsonl;
    write_report_jsonl(jsonl, report);
    std::size_t lines = 0;
    std::string line;
    std::istringstream in(jsonl.str());
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    CHECK(lines == report.claims.size());
}

}  // TEST_SUITE
