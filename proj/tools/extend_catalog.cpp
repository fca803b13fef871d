// Extends a connected-graph catalog from order n-1 to order n: every
// connected graph on n vertices is some connected (n-1)-vertex graph plus
// one new vertex joined to a nonempty neighbour set (remove any non-cut
// vertex to see this), so augmenting over all nonempty subsets and
// deduplicating by canonical code is complete. Used to regenerate the
// graph6 fixtures that the census ingests for n = 8, 9.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "smorder/census.hpp"
#include "smorder/graph.hpp"
#include "smorder/graph6.hpp"

int main(int argc, char** argv) {
    CLI::App app{"extend a connected-graph catalog by one vertex"};
    int n = 0;
    std::string from, out_path;
    app.add_option("--n", n, "target order (source catalog has order n-1)")->required();
    app.add_option("--from", from, "graph6 catalog of order n-1 (built-in enumeration if omitted)");
    app.add_option("--out", out_path, "output file (stdout if omitted)");
    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<smorder::Graph> base;
        if (!from.empty()) {
            base = smorder::ingest_graph6_file(from, true).graphs;
        } else {
            base = smorder::enumerate_connected(n - 1);
        }

        const int workers = smorder::worker_count();
        std::vector<std::map<std::string, bool>> codes(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < base.size();
                     i += static_cast<std::size_t>(workers)) {
                    const smorder::Graph& h = base[i];
                    const std::uint64_t subsets = std::uint64_t{1} << h.order();
                    for (std::uint64_t s = 1; s < subsets; ++s) {
                        smorder::EdgeSet edges = h.edges();
                        for (int v = 0; v < h.order(); ++v)
                            if ((s >> v) & 1) edges.emplace_back(v, n - 1);
                        smorder::Graph g(n, edges);
                        codes[static_cast<std::size_t>(w)][smorder::canonical_form(g)] = true;
                    }
                }
            });
        }
        for (auto& t : pool) t.join();

        std::map<std::string, bool> merged;
        for (auto& local : codes) merged.merge(local);

        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw std::runtime_error("cannot open output file: " + out_path);
            os = &file;
        }
        for (const auto& [code, unused] : merged) *os << code << "\n";
        std::cerr << "order " << n << ": " << merged.size() << " connected graphs\n";
    } catch (const std::exception& e) {
        std::cerr << "smorder-extend: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
