#include "smorder/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace smorder {

namespace {

using Matrix = std::vector<BigUint>;  // row-major n*n

Matrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    Matrix a(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) a[static_cast<std::size_t>(u) * n + v] = BigUint(1);
    return a;
}

Matrix multiply(int n, const Matrix& a, const Matrix& b) {
    Matrix c(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const BigUint& aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                c[static_cast<std::size_t>(i) * n + j].add_mul(
                    aik, b[static_cast<std::size_t>(k) * n + j]);
            }
        }
    }
    return c;
}

BigUint trace(int n, const Matrix& a) {
    BigUint t;
    for (int i = 0; i < n; ++i) t += a[static_cast<std::size_t>(i) * n + i];
    return t;
}

}  // namespace

BigUint spectral_moment(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("spectral_moment: negative index");
    const int n = g.order();
    if (k == 0) return BigUint(static_cast<std::uint64_t>(n));
    if (n == 0) return BigUint(0);
    Matrix adj = adjacency_matrix(g);
    Matrix power = adj;
    for (int i = 1; i < k; ++i) power = multiply(n, power, adj);
    return trace(n, power);
}

MomentSequence moment_sequence(const Graph& g) {
    return extended_moments(g).sequence;
}

ExtendedMoments extended_moments(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("moment_sequence: empty graph");
    ExtendedMoments out;
    MomentSequence& seq = out.sequence;
    seq.n = n;
    seq.values.reserve(static_cast<std::size_t>(n));
    seq.values.emplace_back(static_cast<std::uint64_t>(n));  // S_0
    if (n == 1) {
        out.closing = BigUint(0);  // S_1 of K_1
        return out;
    }
    Matrix adj = adjacency_matrix(g);
    Matrix power = adj;
    seq.values.push_back(trace(n, power));  // S_1 = 0
    for (int k = 2; k < n; ++k) {
        power = multiply(n, power, adj);
        seq.values.push_back(trace(n, power));
    }
    power = multiply(n, power, adj);
    out.closing = trace(n, power);  // S_n
    return out;
}

std::array<std::uint64_t, 4> s_low_formula(const Graph& g) {
    std::uint64_t triangles = fast_counts(g)[Motif::C3];
    return {static_cast<std::uint64_t>(g.order()), 0,
            2 * static_cast<std::uint64_t>(g.edge_count()), 6 * triangles};
}

std::uint64_t s4_formula(const MotifCounts& c) {
    return 2 * c[Motif::P2] + 4 * c[Motif::P3] + 8 * c[Motif::C4];
}

std::uint64_t s5_formula(const MotifCounts& c) {
    return 30 * c[Motif::C3] + 10 * c[Motif::U4] + 10 * c[Motif::C5];
}

std::uint64_t s6_formula(const MotifCounts& c) {
    return 2 * c[Motif::P2] + 12 * c[Motif::P3] + 6 * c[Motif::P4] + 12 * c[Motif::K13] +
           12 * c[Motif::U5] + 36 * c[Motif::B4] + 24 * c[Motif::B5] + 24 * c[Motif::C3] +
           48 * c[Motif::C4] + 12 * c[Motif::C6];
}

std::uint64_t s4_formula(const Graph& g) { return s4_formula(fast_counts(g)); }
std::uint64_t s5_formula(const Graph& g) { return s5_formula(fast_counts(g)); }
std::uint64_t s6_formula(const Graph& g) { return s6_formula(fast_counts(g)); }

SOrderResult s_compare(const ExtendedMoments& a, const ExtendedMoments& b) {
    if (a.sequence.n != b.sequence.n) {
        // S_0 = n separates different orders immediately
        return a.sequence.n < b.sequence.n ? SOrderResult{SRelation::precedes, 0}
                                           : SOrderResult{SRelation::succeeds, 0};
    }
    const int n = a.sequence.n;
    for (int k = 0; k < n; ++k) {
        const BigUint& x = a.sequence.values[static_cast<std::size_t>(k)];
        const BigUint& y = b.sequence.values[static_cast<std::size_t>(k)];
        if (x < y) return {SRelation::precedes, k};
        if (y < x) return {SRelation::succeeds, k};
    }
    if (a.closing < b.closing) return {SRelation::precedes, n};
    if (b.closing < a.closing) return {SRelation::succeeds, n};
    return {SRelation::equal, std::nullopt};
}

SOrderResult s_compare(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) {
        // index 0 already differs; avoid computing either full sequence
        if (a.order() < b.order()) return {SRelation::precedes, 0};
        return {SRelation::succeeds, 0};
    }
    if (a.order() == 0) return {SRelation::equal, std::nullopt};
    return s_compare(extended_moments(a), extended_moments(b));
}

std::vector<double> adjacency_eigenvalues(const Graph& g) {
    const int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) a[static_cast<std::size_t>(u) * n + v] = 1.0;

    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    // cyclic Jacobi; adjacency matrices are small and symmetric so this
    // converges in a handful of sweeps
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-24) break;
        if (sweep == max_sweeps - 1)
            throw std::runtime_error("adjacency_eigenvalues: Jacobi did not converge");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-18) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double float_moment_check(const Graph& g, int k) {
    double sum = 0.0;
    for (double lambda : adjacency_eigenvalues(g)) sum += std::pow(lambda, k);
    return sum;
}

}  // namespace smorder
