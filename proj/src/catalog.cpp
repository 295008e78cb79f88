#include "cage_spectra/catalog.hpp"

#include "cage_spectra/errors.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace cage_spectra {

namespace {

// Point-line incidence graph of PG(2,3): vertices 0..12 are the points,
// 13..25 the lines, each a normalised vector of F_3^3 (first nonzero
// coordinate 1); point p lies on line l iff p.l = 0 mod 3.
Graph pg23_incidence()
{
    std::vector<std::array<int, 3>> vectors;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                const std::array<int, 3> v{a, b, c};
                const auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
                if (lead != v.end() && *lead == 1)
                    vectors.push_back(v);
            }
    const int q = static_cast<int>(vectors.size());
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < q; ++p)
        for (int l = 0; l < q; ++l) {
            const auto& x = vectors[static_cast<std::size_t>(p)];
            const auto& y = vectors[static_cast<std::size_t>(l)];
            if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % 3 == 0)
                edges.emplace_back(p, q + l);
        }
    return Graph::from_edges(2 * q, edges);
}

const std::vector<CatalogEntry> entries = {
    {"heawood", "Heawood graph, incidence graph of the Fano plane; the (3,6)-cage", 14, 3, 6},
    {"tutte_coxeter", "Tutte-Coxeter graph (Tutte 8-cage), the (3,8)-cage", 30, 3, 8},
    {"moebius_kantor", "Moebius-Kantor graph, generalized Petersen graph GP(8,3)", 16, 3, 6},
    {"pg23_incidence", "point-line incidence graph of PG(2,3); the (4,6)-cage", 26, 4, 6},
};

Graph build(std::string_view name)
{
    if (name == "heawood")
        return lcf_graph(14, {5, -5});
    if (name == "tutte_coxeter")
        return lcf_graph(30, {-13, -9, 7, -7, 9, 13});
    if (name == "moebius_kantor")
        return lcf_graph(16, {5, -5});
    return pg23_incidence();
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries()
{
    return entries;
}

Graph lcf_graph(int order, const std::vector<int>& shifts)
{
    if (order < 3 || shifts.empty())
        throw DomainError(DomainErrorKind::bad_argument, "LCF notation needs order >= 3 and at least one shift");
    std::set<std::pair<int, int>> edges;
    auto add = [&](int u, int v) { edges.emplace(std::min(u, v), std::max(u, v)); };
    for (int i = 0; i < order; ++i) {
        add(i, (i + 1) % order);
        const int shift = shifts[static_cast<std::size_t>(i) % shifts.size()];
        add(i, ((i + shift) % order + order) % order);
    }
    return Graph::from_edges(order, {edges.begin(), edges.end()});
}

Graph catalog(std::string_view name)
{
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
    if (it == entries.end())
        throw DomainError(DomainErrorKind::bad_argument, "unknown catalog graph '" + std::string(name) + "'");
    Graph g = build(name);
    const auto g_girth = girth(g);
    if (g.order() != it->order || g.regular_degree() != it->degree || g_girth != it->girth)
        throw InternalError("catalog graph '" + std::string(name) + "' does not match its metadata");
    return g;
}

} // namespace cage_spectra
