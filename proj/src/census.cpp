#include "smorder/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "smorder/families.hpp"
#include "smorder/graph6.hpp"

namespace smorder {

int worker_count() {
    if (const char* env = std::getenv("SMORDER_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

namespace {

// Static block partition of [0, count); fn(worker, begin, end). Results must
// not depend on the partition, so every caller merges deterministically.
template <typename Fn>
void run_partitioned(std::uint64_t count, Fn&& fn) {
    int workers = worker_count();
    if (count < 2 || workers == 1) {
        fn(0, std::uint64_t{0}, count);
        return;
    }
    workers = static_cast<int>(std::min<std::uint64_t>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::uint64_t chunk = count / workers;
    std::uint64_t rem = count % workers;
    std::uint64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
        pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_connected: negative order");
    if (n > kEnumerationBound)
        throw std::invalid_argument("enumerate_connected: built-in bound is n <= " +
                                    std::to_string(kEnumerationBound) +
                                    "; ingest a graph6 catalog for larger orders");
    if (n == 0) return {Graph()};

    EdgeSet slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << slots.size();

    std::vector<std::map<CanonicalCode, Graph>> found(
        static_cast<std::size_t>(std::max(1, worker_count())));

    run_partitioned(total, [&](int w, std::uint64_t begin, std::uint64_t end) {
        auto& local = found[static_cast<std::size_t>(w)];
        EdgeSet edges;
        edges.reserve(slots.size());
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            edges.clear();
            std::uint64_t bits = mask;
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                edges.push_back(slots[static_cast<std::size_t>(b)]);
            }
            Graph g(n, edges);
            if (!is_connected(g)) continue;
            Graph canon = canonical_graph(g);
            local.emplace(emit_graph6(canon), std::move(canon));
        }
    });

    std::map<CanonicalCode, Graph> merged;
    for (auto& local : found) merged.merge(local);
    std::vector<Graph> out;
    out.reserve(merged.size());
    for (auto& [code, g] : merged) out.push_back(std::move(g));
    return out;
}

IngestResult ingest_graph6(std::istream& in, bool strict) {
    IngestResult result;
    std::map<CanonicalCode, Graph> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
        while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
        if (view.empty()) continue;
        try {
            Graph g = parse_graph6(view);
            Graph canon = canonical_graph(g);
            ++result.lines_parsed;
            auto [it, inserted] = seen.emplace(emit_graph6(canon), std::move(canon));
            if (!inserted) ++result.duplicates;
        } catch (const std::invalid_argument& e) {
            if (strict)
                throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
            result.diagnostics.push_back({line_no, e.what()});
        }
    }
    result.graphs.reserve(seen.size());
    for (auto& [code, g] : seen) result.graphs.push_back(std::move(g));
    return result;
}

IngestResult ingest_graph6_file(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    return ingest_graph6(in, strict);
}

std::map<int, CensusClass> classify(const std::vector<Graph>& graphs) {
    std::map<int, CensusClass> classes;
    int n = -1;
    for (const Graph& g : graphs) {
        if (n == -1) n = g.order();
        if (g.order() != n)
            throw std::invalid_argument("classify: mixed graph orders " + std::to_string(n) +
                                        " and " + std::to_string(g.order()));
        int k = static_cast<int>(cut_edges(g).size());
        auto& cls = classes[k];
        cls.n = n;
        cls.k = k;
        cls.members.push_back(g);
    }
    return classes;
}

const RankedMember* RankReport::first() const { return ordered.empty() ? nullptr : &ordered.front(); }
const RankedMember* RankReport::second() const { return ordered.size() < 2 ? nullptr : &ordered[1]; }
const RankedMember* RankReport::third() const { return ordered.size() < 3 ? nullptr : &ordered[2]; }
const RankedMember* RankReport::last() const { return ordered.empty() ? nullptr : &ordered.back(); }
const RankedMember* RankReport::second_last() const {
    return ordered.size() < 2 ? nullptr : &ordered[ordered.size() - 2];
}
const RankedMember* RankReport::third_last() const {
    return ordered.size() < 3 ? nullptr : &ordered[ordered.size() - 3];
}

RankReport rank(const CensusClass& cls) {
    if (cls.members.empty()) throw std::invalid_argument("rank: empty class");
    const std::size_t count = cls.members.size();

    std::vector<RankedMember> members(count);
    run_partitioned(count, [&](int, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const Graph& g = cls.members[static_cast<std::size_t>(i)];
            members[static_cast<std::size_t>(i)] =
                RankedMember{g, emit_graph6(g), extended_moments(g)};
        }
    });

    std::sort(members.begin(), members.end(), [](const RankedMember& a, const RankedMember& b) {
        SOrderResult r = s_compare(a.moments, b.moments);
        if (r.relation == SRelation::precedes) return true;
        if (r.relation == SRelation::succeeds) return false;
        return a.g6 < b.g6;  // deterministic inside =_s groups
    });

    RankReport report;
    report.n = cls.n;
    report.k = cls.k;
    report.ordered = std::move(members);

    std::size_t start = 0;
    for (std::size_t i = 1; i <= report.ordered.size(); ++i) {
        bool boundary = i == report.ordered.size() ||
                        s_compare(report.ordered[start].moments, report.ordered[i].moments)
                                .relation != SRelation::equal;
        if (boundary) {
            if (i - start >= 2) {
                std::vector<std::size_t> group;
                for (std::size_t j = start; j < i; ++j) group.push_back(j);
                report.tie_groups.push_back(std::move(group));
            }
            start = i;
        }
    }
    return report;
}

std::string_view claim_status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::empty_class: return "empty-class";
        case ClaimStatus::not_applicable: return "not-applicable";
        case ClaimStatus::info: return "info";
    }
    return "?";
}

bool VerificationReport::all_pass() const {
    return std::none_of(claims.begin(), claims.end(),
                        [](const ClaimResult& c) { return c.status == ClaimStatus::fail; });
}

namespace {

// strictness of the extreme against its inward neighbour
struct Strictness {
    bool strict = true;
    std::optional<int> pivot;
};

Strictness strict_between(const RankedMember* lo, const RankedMember* hi) {
    Strictness s;
    if (lo == nullptr || hi == nullptr) return s;
    SOrderResult r = s_compare(lo->moments, hi->moments);
    s.strict = r.relation == SRelation::precedes;
    s.pivot = r.pivot;
    return s;
}

ClaimResult check_extreme(const std::string& claim, int n, int k, const Graph& expected,
                          const RankedMember* observed, const Strictness& inward,
                          const Strictness& outward, const std::string& note = {}) {
    ClaimResult c;
    c.claim = claim;
    c.n = n;
    c.k = k;
    c.expected_g6 = canonical_form(expected);
    c.observed_g6 = observed->g6;
    c.note = note;
    bool iso = c.expected_g6 == c.observed_g6;
    bool unique = inward.strict && outward.strict;
    c.pivot = inward.pivot ? inward.pivot : outward.pivot;
    c.status = iso && unique ? ClaimStatus::pass : ClaimStatus::fail;
    if (!iso)
        c.note = note.empty() ? "extreme is a different graph" : note;
    else if (!unique)
        c.note = "tie at the extreme";
    return c;
}

ClaimResult skip_claim(const std::string& claim, int n, int k, ClaimStatus status,
                       const std::string& note) {
    ClaimResult c;
    c.claim = claim;
    c.n = n;
    c.k = k;
    c.status = status;
    c.note = note;
    return c;
}

}  // namespace

VerificationReport verify_theorems(int n, const std::vector<Graph>& graphs) {
    std::vector<Graph> connected;
    connected.reserve(graphs.size());
    for (const Graph& g : graphs)
        if (g.order() == n && is_connected(g)) connected.push_back(g);
    if (connected.empty())
        throw std::invalid_argument("verify_theorems: no connected graphs of order " +
                                    std::to_string(n));

    auto classes = classify(connected);
    VerificationReport report;
    report.n = n;
    for (const auto& [k, cls] : classes) {
        report.feasible_k.push_back(k);
        report.class_sizes[k] = cls.members.size();
    }

    for (const auto& [k, cls] : classes) {
        RankReport rr = rank(cls);
        const std::size_t size = rr.ordered.size();

        // S-order maximum: K_n^k for every feasible k.
        report.claims.push_back(check_extreme(
            "last", n, k, knk(n, k), rr.last(), strict_between(rr.second_last(), rr.last()),
            Strictness{}));

        // S-order second maximum, by k-regime.
        if (size < 2) {
            report.claims.push_back(skip_claim("second-last", n, k, ClaimStatus::not_applicable,
                                               "class has a single member"));
        } else {
            Strictness inward = strict_between(rr.third_last(), rr.second_last());
            Strictness outward = strict_between(rr.second_last(), rr.last());
            if (k == 0) {
                report.claims.push_back(check_extreme("second-last", n, k, g1(n),
                                                      rr.second_last(), inward, outward,
                                                      "expected K_n minus an edge"));
            } else if (k == 1 && n >= 5) {
                report.claims.push_back(check_extreme("second-last", n, k, g2(n),
                                                      rr.second_last(), inward, outward,
                                                      "expected K_n^1 minus a clique edge"));
            } else if (k >= 2 && k <= n - 3) {
                report.claims.push_back(check_extreme("second-last", n, k, g3(n, k),
                                                      rr.second_last(), inward, outward,
                                                      "expected K_n^k with one pendant moved"));
            } else if (k == n - 1) {
                report.claims.push_back(check_extreme("second-last", n, k, star_plus(n),
                                                      rr.second_last(), inward, outward,
                                                      "expected the near-star tree"));
            } else {
                report.claims.push_back(skip_claim("second-last", n, k,
                                                   ClaimStatus::not_applicable,
                                                   "no closed form stated for this k"));
            }
        }

        // S-order minimum: P_n^k for k <= n-3.
        if (k <= n - 3) {
            report.claims.push_back(check_extreme("first", n, k, pnk(n, k), rr.first(),
                                                  strict_between(rr.first(), rr.second()),
                                                  Strictness{}));
        }

        // S-order second minimum: U-hat for 3 <= k <= n-3; observed only for
        // k in {1,2} where no closed form is asserted.
        if (k >= 3 && k <= n - 3) {
            if (size < 2) {
                report.claims.push_back(skip_claim("second", n, k, ClaimStatus::not_applicable,
                                                   "class has a single member"));
            } else {
                report.claims.push_back(check_extreme(
                    "second", n, k, uhat(n, k), rr.second(),
                    strict_between(rr.second(), rr.third()),
                    strict_between(rr.first(), rr.second())));
            }
        } else if ((k == 1 || k == 2) && size >= 2) {
            ClaimResult c;
            c.claim = "second-observed";
            c.n = n;
            c.k = k;
            c.status = ClaimStatus::info;
            c.observed_g6 = rr.second()->g6;
            c.note = "observed second minimum; no closed form asserted";
            report.claims.push_back(c);
        }
    }

    // Girth-restricted minimum over unicyclic graphs: U_n^g.
    for (int g = 3; g <= n; ++g) {
        CensusClass uni;
        uni.n = n;
        uni.k = n - g;
        for (const Graph& h : connected)
            if (h.edge_count() == n && girth(h) == g) uni.members.push_back(h);
        if (uni.members.empty()) {
            report.claims.push_back(skip_claim("girth-first", n, n - g, ClaimStatus::empty_class,
                                               "no unicyclic graphs of girth " +
                                                   std::to_string(g)));
            continue;
        }
        RankReport rr = rank(uni);
        report.claims.push_back(check_extreme(
            "girth-first", n, n - g, ung(n, g), rr.first(),
            strict_between(rr.first(), rr.second()), Strictness{},
            "unicyclic, girth " + std::to_string(g)));
    }

    // k = n-2 is structurally infeasible; the census must agree.
    if (n >= 2) {
        ClaimResult c;
        c.claim = "k-infeasible";
        c.n = n;
        c.k = n - 2;
        bool empty = classes.find(n - 2) == classes.end();
        c.status = empty ? ClaimStatus::pass : ClaimStatus::fail;
        c.note = empty ? "class k=n-2 is empty as required"
                       : "class k=n-2 unexpectedly nonempty";
        report.claims.push_back(c);
    }

    return report;
}

VerificationReport verify_theorems(int n) { return verify_theorems(n, enumerate_connected(n)); }

void write_report_text(std::ostream& out, const VerificationReport& report) {
    out << "census order n=" << report.n << "\n";
    out << "feasible k:";
    for (int k : report.feasible_k) out << ' ' << k;
    out << "\nclass sizes:";
    for (const auto& [k, size] : report.class_sizes) out << " k=" << k << ":" << size;
    out << "\n";
    for (const ClaimResult& c : report.claims) {
        out << c.claim << " n=" << c.n << " k=" << c.k << " "
            << claim_status_name(c.status);
        if (!c.expected_g6.empty()) out << " expected=" << c.expected_g6;
        if (!c.observed_g6.empty()) out << " observed=" << c.observed_g6;
        if (c.pivot) out << " pivot=" << *c.pivot;
        if (!c.note.empty()) out << " (" << c.note << ")";
        out << "\n";
    }
    out << (report.all_pass() ? "ALL CLAIMS PASS" : "CLAIM FAILURES PRESENT") << "\n";
}

void write_report_jsonl(std::ostream& out, const VerificationReport& report) {
    for (const ClaimResult& c : report.claims) {
        nlohmann::ordered_json j;
        j["claim"] = c.claim;
        j["n"] = c.n;
        j["k"] = c.k;
        j["status"] = std::string(claim_status_name(c.status));
        if (!c.expected_g6.empty()) j["expected"] = c.expected_g6;
        if (!c.observed_g6.empty()) j["observed"] = c.observed_g6;
        if (c.pivot) j["pivot"] = *c.pivot;
        if (!c.note.empty()) j["note"] = c.note;
        out << j.dump() << "\n";
    }
}

}  // namespace smorder
