#include "cage_spectra/graph.hpp"

#include "cage_spectra/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace cage_spectra {

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges)
{
    if (order < 0)
        throw DomainError(DomainErrorKind::bad_argument, "negative vertex count");
    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(order));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw DomainError(DomainErrorKind::bad_argument,
                "edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
        if (u == v)
            throw DomainError(DomainErrorKind::bad_argument, "self-loop at vertex " + std::to_string(u));
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw DomainError(DomainErrorKind::bad_argument, "parallel edge");
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::adjacent(int u, int v) const
{
    const auto& list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::optional<int> Graph::regular_degree() const
{
    if (adjacency_.empty())
        return std::nullopt;
    const int k = degree(0);
    for (int v = 1; v < order(); ++v)
        if (degree(v) != k)
            return std::nullopt;
    return k;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

IntMatrix Graph::adjacency_matrix() const
{
    const auto n = adjacency_.size();
    IntMatrix a(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (int v : adjacency_[u])
            a(u, static_cast<std::size_t>(v)) = 1;
    return a;
}

namespace {

constexpr int g6_offset = 63;
constexpr int g6_max = 126;
constexpr long max_graph6_order = 1L << 20;

} // namespace

Graph parse_graph6(std::string_view text)
{
    constexpr std::string_view prefix = ">>graph6<<";
    if (text.substr(0, prefix.size()) == prefix)
        text.remove_prefix(prefix.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error(Graph6ErrorKind::malformed_header, "graph6: empty input");

    for (std::size_t i = 0; i < text.size(); ++i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < g6_offset || c > g6_max)
            throw Graph6Error(Graph6ErrorKind::bad_character,
                "graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) + " is outside 63..126");
    }

    auto value = [&](std::size_t i) { return static_cast<long>(static_cast<unsigned char>(text[i])) - g6_offset; };

    long n = 0;
    std::size_t pos = 0;
    if (value(0) != g6_max - g6_offset) {
        n = value(0);
        pos = 1;
    } else {
        std::size_t width = 3;
        pos = 1;
        if (text.size() > 1 && value(1) == g6_max - g6_offset) {
            width = 6;
            pos = 2;
        }
        if (text.size() < pos + width)
            throw Graph6Error(Graph6ErrorKind::malformed_header, "graph6: truncated vertex-count header");
        for (std::size_t i = 0; i < width; ++i) {
            n = (n << 6) | value(pos + i);
            if (n > max_graph6_order)
                throw Graph6Error(Graph6ErrorKind::malformed_header, "graph6: vertex count too large");
        }
        pos += width;
    }

    const long pairs = n * (n - 1) / 2;
    const long expected = (pairs + 5) / 6;
    const long body = static_cast<long>(text.size() - pos);
    if (body != expected)
        throw Graph6Error(Graph6ErrorKind::wrong_length,
            "graph6: expected " + std::to_string(expected) + " data bytes for n = " + std::to_string(n) + ", got "
                + std::to_string(body));

    std::vector<std::pair<int, int>> edges;
    long t = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
            const long byte = value(pos + static_cast<std::size_t>(t / 6));
            if ((byte >> (5 - t % 6)) & 1)
                edges.emplace_back(i, j);
        }
    }
    for (; t < expected * 6; ++t) {
        const long byte = value(pos + static_cast<std::size_t>(t / 6));
        if ((byte >> (5 - t % 6)) & 1)
            throw Graph6Error(Graph6ErrorKind::nonzero_padding, "graph6: nonzero padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6(std::istream& in)
{
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

std::vector<int> bfs_distances(const Graph& g, int source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int x) { return x < 0; });
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (int start = 0; start < g.order(); ++start) {
        if (side[static_cast<std::size_t>(start)] >= 0)
            continue;
        side[static_cast<std::size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<int> girth(const Graph& g)
{
    int best = std::numeric_limits<int>::max();
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> dist(n);
    std::vector<int> parent(n);
    for (int root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            const int du = dist[static_cast<std::size_t>(u)];
            // No shorter cycle can be closed from deeper layers.
            if (2 * du + 1 >= best)
                break;
            for (int w : g.neighbors(u)) {
                const auto wi = static_cast<std::size_t>(w);
                if (dist[wi] < 0) {
                    dist[wi] = du + 1;
                    parent[wi] = u;
                    queue.push_back(w);
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    best = std::min(best, du + dist[wi] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

std::vector<std::vector<int>> distance_table(const Graph& g)
{
    std::vector<std::vector<int>> table;
    table.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        table.push_back(bfs_distances(g, v));
    return table;
}

IntMatrix DistanceMatrixSet::at(int i) const
{
    if (i >= 0 && i < static_cast<int>(matrices.size()))
        return matrices[static_cast<std::size_t>(i)];
    const std::size_t n = matrices.empty() ? 0 : matrices.front().rows();
    return IntMatrix(n, n);
}

DistanceMatrixSet distance_matrices(const Graph& g)
{
    if (!is_connected(g))
        throw DomainError(DomainErrorKind::bad_argument, "distance matrices need a connected graph");
    const auto table = distance_table(g);
    int diameter = 0;
    for (const auto& row : table)
        diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));

    const auto n = static_cast<std::size_t>(g.order());
    DistanceMatrixSet set;
    set.diameter = diameter;
    set.matrices.assign(static_cast<std::size_t>(diameter) + 1, IntMatrix(n, n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            set.matrices[static_cast<std::size_t>(table[u][v])](u, v) = 1;
    return set;
}

} // namespace cage_spectra
