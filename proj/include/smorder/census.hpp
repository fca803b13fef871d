#ifndef SMORDER_CENSUS_HPP
#define SMORDER_CENSUS_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smorder/graph.hpp"
#include "smorder/spectral.hpp"

namespace smorder {

// Worker pool size: SMORDER_THREADS when set, hardware concurrency otherwise,
// at least 1.
int worker_count();

// All connected n-vertex graphs up to isomorphism, one canonical
// representative each, sorted by canonical code. Labeled enumeration over
// the 2^C(n,2) edge masks with canonical dedup, partitioned across the
// worker pool; output is identical for any worker count.
// Built-in bound n <= 7; larger orders must be ingested from a file.
std::vector<Graph> enumerate_connected(int n);

inline constexpr int kEnumerationBound = 7;

struct IngestDiagnostic {
    std::size_t line = 0;  // 1-based
    std::string message;
};

struct IngestResult {
    std::vector<Graph> graphs;  // canonical representatives, sorted by code
    std::size_t lines_parsed = 0;
    std::size_t duplicates = 0;
    std::vector<IngestDiagnostic> diagnostics;
};

// Reads graph6 lines, one graph per line. Blank lines and a leading
// ">>graph6<<" banner are ignored. Malformed lines become diagnostics and
// processing continues, unless strict is set (then std::runtime_error).
IngestResult ingest_graph6(std::istream& in, bool strict = false);
IngestResult ingest_graph6_file(const std::string& path, bool strict = false);

// The class G_n^k: connected n-vertex graphs with exactly k cut edges.
struct CensusClass {
    int n = 0;
    int k = 0;
    std::vector<Graph> members;
};

// Partition by bridge count; every member's count is recomputed here.
// Throws std::invalid_argument on mixed orders.
std::map<int, CensusClass> classify(const std::vector<Graph>& graphs);

struct RankedMember {
    Graph graph;
    std::string g6;
    ExtendedMoments moments;  // ranking key: S_0..S_{n-1} plus S_n
};

struct RankReport {
    int n = 0;
    int k = 0;
    std::vector<RankedMember> ordered;                 // ascending S-order
    std::vector<std::vector<std::size_t>> tie_groups;  // =_s groups, size >= 2

    const RankedMember* first() const;
    const RankedMember* second() const;
    const RankedMember* last() const;
    const RankedMember* second_last() const;
    const RankedMember* third_last() const;
    const RankedMember* third() const;
};

// Total S-order of a class. Ties under =_s are broken by canonical code for
// determinism but always surface in tie_groups. Throws on an empty class.
RankReport rank(const CensusClass& cls);

enum class ClaimStatus { pass, fail, empty_class, not_applicable, info };

std::string_view claim_status_name(ClaimStatus s);

struct ClaimResult {
    std::string claim;  // e.g. "last-is-KnK"
    int n = 0;
    int k = 0;
    ClaimStatus status = ClaimStatus::not_applicable;
    std::string expected_g6;
    std::string observed_g6;
    std::optional<int> pivot;  // moment index separating the extreme from its neighbour
    std::string note;
};

struct VerificationReport {
    int n = 0;
    std::vector<int> feasible_k;
    std::map<int, std::size_t> class_sizes;
    std::vector<ClaimResult> claims;

    bool all_pass() const;  // no claim with status fail
};

// Runs every extremal check on a census of order n: S-order maximum and
// second maximum of each class, minimum and second minimum in the stated
// k-ranges, the girth-restricted unicyclic minimum, and the emptiness of
// k = n-2. Uniqueness failures (=_s ties at an extreme) are failures.
VerificationReport verify_theorems(int n, const std::vector<Graph>& graphs);

// Same, over the built-in enumeration (n <= 7).
VerificationReport verify_theorems(int n);

void write_report_text(std::ostream& out, const VerificationReport& report);
void write_report_jsonl(std::ostream& out, const VerificationReport& report);

}  // namespace smorder

#endif
