#ifndef SMORDER_MOTIFS_HPP
#define SMORDER_MOTIFS_HPP

#include <array>
#include <cstdint>
#include <string_view>

#include "smorder/graph.hpp"

namespace smorder {

// The twelve fixed patterns whose subgraph counts determine S_4..S_6.
// U4 is the paw (triangle plus pendant), U5 a 4-cycle plus pendant,
// B4 the diamond (two triangles sharing an edge), B5 the bowtie
// (two triangles sharing a vertex).
enum class Motif : int {
    P2, P3, P4, K13, C3, C4, C5, C6, U4, U5, B4, B5,
};

inline constexpr int kMotifCount = 12;
inline constexpr std::array<Motif, kMotifCount> kAllMotifs = {
    Motif::P2, Motif::P3, Motif::P4, Motif::K13, Motif::C3, Motif::C4,
    Motif::C5, Motif::C6, Motif::U4, Motif::U5, Motif::B4, Motif::B5,
};

std::string_view motif_name(Motif m);
const Graph& motif_pattern(Motif m);

// |Aut| of the pattern, found by brute force over its permutations.
int motif_automorphisms(Motif m);

struct MotifCounts {
    std::array<std::uint64_t, kMotifCount> phi{};

    std::uint64_t& operator[](Motif m) { return phi[static_cast<int>(m)]; }
    std::uint64_t operator[](Motif m) const { return phi[static_cast<int>(m)]; }
    bool operator==(const MotifCounts&) const = default;
};

// Number of (not necessarily induced) subgraphs of g isomorphic to the
// pattern: injective edge-preserving embeddings divided by |Aut|.
// Ground truth; iterates vertex subsets of the pattern's order.
std::uint64_t count_motif(const Graph& g, Motif m);

// Twelve count_motif calls.
MotifCounts count_all(const Graph& g);

// Same values through closed forms (degree sums, per-edge/per-vertex
// triangle counts) plus bounded DFS cycle enumeration for C4/C5/C6/U5.
MotifCounts fast_counts(const Graph& g);

}  // namespace smorder

#endif
