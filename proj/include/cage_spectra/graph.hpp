#pragma once

#include "cage_spectra/int_matrix.hpp"

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cage_spectra {

/// Undirected simple graph on vertices 0..n-1 with sorted neighbour lists.
class Graph {
public:
    Graph() = default;

    /// Throws DomainError on self-loops, repeated edges or out-of-range
    /// endpoints.
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;

    /// The common degree when the graph is regular.
    std::optional<int> regular_degree() const;

    std::vector<std::pair<int, int>> edges() const;
    IntMatrix adjacency_matrix() const;

private:
    std::vector<std::vector<int>> adjacency_;
    std::size_t edge_count_ = 0;
};

enum class Graph6ErrorKind {
    malformed_header,
    bad_character,
    wrong_length,
    nonzero_padding,
};

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Graph6ErrorKind kind() const noexcept { return kind_; }

private:
    Graph6ErrorKind kind_;
};

/// Decodes one graph6 string (an optional ">>graph6<<" prefix and trailing
/// line break are accepted).
Graph parse_graph6(std::string_view text);

/// Decodes every non-empty line of a graph6 stream.
std::vector<Graph> read_graph6(std::istream& in);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

/// All-pairs distances (row per vertex); -1 where unreachable.
std::vector<std::vector<int>> distance_table(const Graph& g);

/// The i-distance matrices A_0..A_D of a connected graph, D = diameter.
struct DistanceMatrixSet {
    int diameter = 0;
    std::vector<IntMatrix> matrices;

    /// A_i, or the zero matrix when i exceeds the diameter.
    IntMatrix at(int i) const;
};

/// Throws DomainError for a disconnected graph.
DistanceMatrixSet distance_matrices(const Graph& g);

} // namespace cage_spectra
