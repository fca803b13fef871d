#ifndef SMORDER_SPECTRAL_HPP
#define SMORDER_SPECTRAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "smorder/bigint.hpp"
#include "smorder/graph.hpp"
#include "smorder/motifs.hpp"

namespace smorder {

// (S_0,...,S_{n-1}) as exact integers. S_0 = n, S_1 = 0, S_2 = 2m,
// S_3 = 6 * #triangles.
struct MomentSequence {
    int n = 0;
    std::vector<BigUint> values;

    bool operator==(const MomentSequence&) const = default;
};

// Trace of A^k in exact integer arithmetic (iterated multiplication,
// never eigenvalues). k = 0 gives n.
BigUint spectral_moment(const Graph& g, int k);

// Moments 0..n-1. Throws std::invalid_argument for the empty graph.
MomentSequence moment_sequence(const Graph& g);

// Closed forms for the low moments; all small enough for u64 at n <= 64.
std::array<std::uint64_t, 4> s_low_formula(const Graph& g);  // (n, 0, 2m, 6t)

std::uint64_t s4_formula(const MotifCounts& c);
std::uint64_t s5_formula(const MotifCounts& c);
std::uint64_t s6_formula(const MotifCounts& c);
std::uint64_t s4_formula(const Graph& g);
std::uint64_t s5_formula(const Graph& g);
std::uint64_t s6_formula(const Graph& g);

enum class SRelation { precedes, equal, succeeds };

struct SOrderResult {
    SRelation relation = SRelation::equal;
    std::optional<int> pivot;  // first differing index; empty iff equal

    bool operator==(const SOrderResult&) const = default;
};

// The sequence plus S_n. Indices 0..n-1 can tie on graphs that are not
// cospectral (smallest case: the order-4 path and star agree on every
// stored moment), while S_0..S_n pins the characteristic polynomial, so
// one extra index settles every non-cospectral pair. Ranking and
// comparison use this; equal here means cospectral.
struct ExtendedMoments {
    MomentSequence sequence;
    BigUint closing;  // S_n

    bool operator==(const ExtendedMoments&) const = default;
};

// Computes S_0..S_n in one pass of matrix powers.
ExtendedMoments extended_moments(const Graph& g);

// Lexicographic comparison, index by index. Graphs of different order
// separate at index 0 since S_0 = n; equal-order graphs are compared on
// S_0..S_n, so a pivot of n is possible and equal means cospectral.
SOrderResult s_compare(const Graph& a, const Graph& b);
SOrderResult s_compare(const ExtendedMoments& a, const ExtendedMoments& b);

// Eigenvalues of the adjacency matrix by cyclic Jacobi sweeps, ascending.
std::vector<double> adjacency_eigenvalues(const Graph& g);

// sum(lambda_i^k) through the eigensolver. Diagnostic only; never feeds
// ordering decisions.
double float_moment_check(const Graph& g, int k);

}  // namespace smorder

#endif
