// smorder: exact spectral moments, S-order comparison, extremal family
// construction, census ranking and theorem-style verification for small
// graphs. Exit codes: 0 success, 1 verification failure, 2 usage or
// parse error.

#include <iostream>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "smorder/census.hpp"
#include "smorder/families.hpp"
#include "smorder/graph.hpp"
#include "smorder/graph6.hpp"
#include "smorder/motifs.hpp"
#include "smorder/spectral.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct GraphInput {
    std::string label;  // graph6 form for reporting
    smorder::Graph graph;
};

// Collects input graphs: a positional graph6 argument, an edge-list file,
// or graph6 lines from stdin when neither is given.
std::vector<GraphInput> gather_inputs(const std::optional<std::string>& g6_arg,
                                      const std::string& edge_list_path) {
    std::vector<GraphInput> inputs;
    if (!edge_list_path.empty()) {
        std::ifstream in(edge_list_path);
        if (!in) throw std::invalid_argument("cannot open edge list file: " + edge_list_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        smorder::Graph g = smorder::parse_edge_list(buffer.str());
        inputs.push_back({smorder::emit_graph6(g), std::move(g)});
        return inputs;
    }
    if (g6_arg) {
        smorder::Graph g = smorder::parse_graph6(*g6_arg);
        inputs.push_back({*g6_arg, std::move(g)});
        return inputs;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        std::string_view view(line);
        if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
        while (!view.empty() && (view.back() == '\r' || view.back() == ' '))
            view.remove_suffix(1);
        if (view.empty()) continue;
        smorder::Graph g = smorder::parse_graph6(view);
        inputs.push_back({std::string(view), std::move(g)});
    }
    if (inputs.empty()) throw std::invalid_argument("no graph given (argument, file or stdin)");
    return inputs;
}

int cmd_moments(const std::optional<std::string>& g6, const std::string& edge_list, int upto,
                const std::string& format) {
    auto inputs = gather_inputs(g6, edge_list);
    bool many = inputs.size() > 1;
    for (const GraphInput& in : inputs) {
        smorder::MomentSequence seq = smorder::moment_sequence(in.graph);
        int last = seq.n - 1;
        if (upto >= 0) last = std::min(last, upto);
        if (format == "json-lines") {
            ordered_json j;
            j["graph"] = in.label;
            j["n"] = seq.n;
            ordered_json values = ordered_json::array();
            for (int k = 0; k <= last; ++k)
                values.push_back(seq.values[static_cast<std::size_t>(k)].to_decimal());
            j["moments"] = values;
            std::cout << j.dump() << "\n";
        } else {
            if (many) std::cout << "# " << in.label << "\n";
            for (int k = 0; k <= last; ++k)
                std::cout << k << " " << seq.values[static_cast<std::size_t>(k)].to_decimal()
                          << "\n";
        }
    }
    return kExitOk;
}

int cmd_compare(const std::string& a6, const std::string& b6, const std::string& format) {
    smorder::Graph a = smorder::parse_graph6(a6);
    smorder::Graph b = smorder::parse_graph6(b6);
    smorder::SOrderResult r = smorder::s_compare(a, b);
    const char* rel = r.relation == smorder::SRelation::precedes   ? "precedes"
                      : r.relation == smorder::SRelation::succeeds ? "succeeds"
                                                                   : "equal";
    std::string left, right;
    if (r.pivot) {
        left = smorder::spectral_moment(a, *r.pivot).to_decimal();
        right = smorder::spectral_moment(b, *r.pivot).to_decimal();
    }
    if (format == "json-lines") {
        ordered_json j;
        j["relation"] = rel;
        if (r.pivot) {
            j["pivot"] = *r.pivot;
            j["left"] = left;
            j["right"] = right;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << rel;
        if (r.pivot) std::cout << " pivot=" << *r.pivot << " left=" << left << " right=" << right;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_count(const std::optional<std::string>& g6, const std::string& edge_list, bool brute,
              const std::string& format) {
    auto inputs = gather_inputs(g6, edge_list);
    bool many = inputs.size() > 1;
    for (const GraphInput& in : inputs) {
        smorder::MotifCounts counts =
            brute ? smorder::count_all(in.graph) : smorder::fast_counts(in.graph);
        if (format == "json-lines") {
            ordered_json j;
            j["graph"] = in.label;
            ordered_json c = ordered_json::object();
            for (smorder::Motif m : smorder::kAllMotifs)
                c[std::string(smorder::motif_name(m))] = counts[m];
            j["counts"] = c;
            std::cout << j.dump() << "\n";
        } else {
            if (many) std::cout << "# " << in.label << "\n";
            for (smorder::Motif m : smorder::kAllMotifs)
                std::cout << smorder::motif_name(m) << " " << counts[m] << "\n";
        }
    }
    return kExitOk;
}

int cmd_construct(const std::string& family, int n, std::optional<int> k,
                  const std::vector<int>& parts, std::optional<int> girth_param) {
    smorder::Graph g;
    if (family == "knk") {
        if (!k) throw std::invalid_argument("knk requires --k");
        g = smorder::knk(n, *k);
    } else if (family == "pnk") {
        if (!k) throw std::invalid_argument("pnk requires --k");
        g = smorder::pnk(n, *k);
    } else if (family == "star-of-cliques") {
        if (parts.empty())
            throw std::invalid_argument("star-of-cliques requires --parts a0,a1,...");
        std::vector<int> rest(parts.begin() + 1, parts.end());
        g = smorder::star_of_cliques(parts.front(), rest);
    } else if (family == "g1") {
        g = smorder::g1(n);
    } else if (family == "g2") {
        g = smorder::g2(n);
    } else if (family == "g3") {
        if (!k) throw std::invalid_argument("g3 requires --k");
        g = smorder::g3(n, *k);
    } else if (family == "star-plus") {
        g = smorder::star_plus(n);
    } else if (family == "uhat") {
        if (!k) throw std::invalid_argument("uhat requires --k");
        g = smorder::uhat(n, *k);
    } else if (family == "ung") {
        if (!girth_param) throw std::invalid_argument("ung requires --g");
        g = smorder::ung(n, *girth_param);
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    std::cout << smorder::emit_graph6(g) << "\n";
    return kExitOk;
}

std::vector<smorder::Graph> census_for(int n, const std::string& from) {
    if (!from.empty()) {
        smorder::IngestResult in = smorder::ingest_graph6_file(from);
        for (const auto& d : in.diagnostics)
            std::cerr << "smorder: " << from << ":" << d.line << ": " << d.message << "\n";
        return std::move(in.graphs);
    }
    if (n > smorder::kEnumerationBound)
        throw std::invalid_argument("census requires --from for n > " +
                                    std::to_string(smorder::kEnumerationBound));
    return smorder::enumerate_connected(n);
}

int cmd_rank(int n, int k, const std::string& from, const std::string& format) {
    std::vector<smorder::Graph> all = census_for(n, from);
    std::vector<smorder::Graph> connected;
    for (const smorder::Graph& g : all)
        if (g.order() == n && smorder::is_connected(g)) connected.push_back(g);
    auto classes = smorder::classify(connected);
    auto it = classes.find(k);
    if (it == classes.end())
        throw std::invalid_argument("class n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                    " is empty");
    smorder::RankReport rr = smorder::rank(it->second);

    auto mark_of = [&](std::size_t i) -> std::string {
        std::size_t count = rr.ordered.size();
        if (i == 0) return "first";
        if (i + 1 == count) return "last";
        if (i == 1) return "second";
        if (i + 2 == count) return "second-last";
        return "";
    };

    if (format == "json-lines") {
        for (std::size_t i = 0; i < rr.ordered.size(); ++i) {
            const smorder::RankedMember& m = rr.ordered[i];
            ordered_json j;
            j["rank"] = i + 1;
            j["graph"] = m.g6;
            ordered_json values = ordered_json::array();
            for (const smorder::BigUint& v : m.moments.sequence.values) values.push_back(v.to_decimal());
            j["moments"] = values;
            std::string mark = mark_of(i);
            if (!mark.empty()) j["mark"] = mark;
            std::cout << j.dump() << "\n";
        }
    } else {
        std::cout << "class n=" << n << " k=" << k << " size=" << rr.ordered.size() << "\n";
        for (std::size_t i = 0; i < rr.ordered.size(); ++i) {
            const smorder::RankedMember& m = rr.ordered[i];
            std::cout << (i + 1) << " " << m.g6 << " moments=";
            for (std::size_t j = 0; j < m.moments.sequence.values.size(); ++j)
                std::cout << (j ? "," : "") << m.moments.sequence.values[j].to_decimal();
            std::string mark = mark_of(i);
            if (!mark.empty()) std::cout << " [" << mark << "]";
            std::cout << "\n";
        }
        if (rr.tie_groups.empty()) {
            std::cout << "ties: none\n";
        } else {
            for (const auto& group : rr.tie_groups) {
                std::cout << "tie:";
                for (std::size_t i : group) std::cout << " " << rr.ordered[i].g6;
                std::cout << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_verify(int n, const std::string& from, const std::string& format) {
    std::vector<smorder::Graph> all = census_for(n, from);
    smorder::VerificationReport report = smorder::verify_theorems(n, all);
    if (format == "json-lines")
        smorder::write_report_jsonl(std::cout, report);
    else
        smorder::write_report_text(std::cout, report);
    return report.all_pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral moments and S-order tools for small graphs"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json-lines"}));
    };

    // moments
    auto* moments = app.add_subcommand("moments", "print spectral moments S_0..S_{n-1}");
    add_format(moments);
    std::string mom_g6, mom_edge_list;
    int mom_upto = -1;
    moments->add_option("graph6", mom_g6, "graph6 string (reads stdin when omitted)");
    moments->add_option("--edge-list", mom_edge_list, "edge list file (n m header)");
    moments->add_option("--upto", mom_upto, "highest moment index to print");

    // compare
    auto* compare = app.add_subcommand("compare", "compare two graphs in the S-order");
    add_format(compare);
    std::string cmp_a, cmp_b;
    compare->add_option("a", cmp_a, "graph6 of the left graph")->required();
    compare->add_option("b", cmp_b, "graph6 of the right graph")->required();

    // count
    auto* count = app.add_subcommand("count", "count the twelve fixed motifs");
    add_format(count);
    std::string cnt_g6, cnt_edge_list;
    bool cnt_brute = false;
    count->add_option("graph6", cnt_g6, "graph6 string (reads stdin when omitted)");
    count->add_option("--edge-list", cnt_edge_list, "edge list file");
    count->add_flag("--brute", cnt_brute, "use the subset enumerator instead of closed forms");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named extremal family graph");
    std::string fam;
    int fam_n = 0;
    std::optional<int> fam_k;
    std::optional<int> fam_g;
    std::vector<int> fam_parts;
    construct->add_option("--family", fam, "knk|pnk|star-of-cliques|g1|g2|g3|star-plus|uhat|ung")
        ->required();
    construct->add_option("--n", fam_n, "graph order");
    construct->add_option("--k", fam_k, "cut edge count");
    construct->add_option("--g", fam_g, "girth (ung)");
    construct->add_option("--parts", fam_parts, "clique sizes a0,a1,...")->delimiter(',');

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "rank one census class in the S-order");
    add_format(rank_cmd);
    int rank_n = 0, rank_k = 0;
    std::string rank_from;
    rank_cmd->add_option("--n", rank_n, "graph order")->required();
    rank_cmd->add_option("--k", rank_k, "cut edge count")->required();
    rank_cmd->add_option("--from", rank_from, "graph6 catalog file (required for n > 7)");

    // verify
    auto* verify = app.add_subcommand("verify", "run every extremal claim on a census");
    add_format(verify);
    int verify_n = 0;
    std::string verify_from;
    verify->add_option("--n", verify_n, "graph order")->required();
    verify->add_option("--from", verify_from, "graph6 catalog file (required for n > 7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        std::optional<std::string> mom_arg =
            moments->count("graph6") ? std::optional<std::string>(mom_g6) : std::nullopt;
        std::optional<std::string> cnt_arg =
            count->count("graph6") ? std::optional<std::string>(cnt_g6) : std::nullopt;
        if (moments->parsed()) return cmd_moments(mom_arg, mom_edge_list, mom_upto, format);
        if (compare->parsed()) return cmd_compare(cmp_a, cmp_b, format);
        if (count->parsed()) return cmd_count(cnt_arg, cnt_edge_list, cnt_brute, format);
        if (construct->parsed()) return cmd_construct(fam, fam_n, fam_k, fam_parts, fam_g);
        if (rank_cmd->parsed()) return cmd_rank(rank_n, rank_k, rank_from, format);
        if (verify->parsed()) return cmd_verify(verify_n, verify_from, format);
    } catch (const std::exception& e) {
        std::cerr << "smorder: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
