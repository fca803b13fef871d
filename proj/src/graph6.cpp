#include "smorder/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace smorder {

namespace {
constexpr int kOffset = 63;  // printable range starts at '?'

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                          s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}
}  // namespace

Graph parse_graph6(std::string_view text) {
    std::string_view s = strip(text);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    unsigned char header = static_cast<unsigned char>(s[0]);
    if (header == 126) throw std::invalid_argument("graph6: long form (n > 62) not supported");
    if (header < kOffset || header > kOffset + 62)
        throw std::invalid_argument("graph6: malformed header byte");
    int n = header - kOffset;

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nchunks = (nbits + 5) / 6;
    if (s.size() - 1 < nchunks)
        throw std::invalid_argument("graph6: truncated bit payload for n=" + std::to_string(n));
    if (s.size() - 1 > nchunks)
        throw std::invalid_argument("graph6: trailing garbage after payload");

    EdgeSet edges;
    std::size_t bit = 0;
    int chunk = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) {
                unsigned char c = static_cast<unsigned char>(s[1 + bit / 6]);
                if (c < kOffset || c > kOffset + 63)
                    throw std::invalid_argument("graph6: byte out of range in payload");
                chunk = c - kOffset;
            }
            if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // padding bits in the final chunk must be zero
    for (; bit < nchunks * 6; ++bit) {
        if (bit % 6 == 0) {
            unsigned char c = static_cast<unsigned char>(s[1 + bit / 6]);
            if (c < kOffset || c > kOffset + 63)
                throw std::invalid_argument("graph6: byte out of range in payload");
            chunk = c - kOffset;
        }
        if ((chunk >> (5 - bit % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: long form (n > 62) not supported");
    std::string out;
    out.push_back(static_cast<char>(n + kOffset));
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kOffset));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative counts");
    EdgeSet edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw std::invalid_argument("edge list: trailing tokens");
    return Graph(static_cast<int>(n), edges);
}

}  // namespace smorder
