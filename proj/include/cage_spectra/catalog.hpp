#pragma once

#include "cage_spectra/graph.hpp"

#include <string_view>
#include <vector>

namespace cage_spectra {

struct CatalogEntry {
    std::string_view name;
    std::string_view description;
    int order;
    int degree;
    int girth;
};

/// Embedded graphs, in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

/// Builds an embedded graph and checks it against its (order, degree,
/// girth) metadata. Throws DomainError for an unknown name.
Graph catalog(std::string_view name);

/// Graph from LCF notation: a Hamiltonian cycle 0..n-1 plus chords
/// i -> i + shifts[i mod |shifts|] (mod n).
Graph lcf_graph(int order, const std::vector<int>& shifts);

} // namespace cage_spectra
