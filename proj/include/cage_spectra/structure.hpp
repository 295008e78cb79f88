#pragma once

#include "cage_spectra/graph.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace cage_spectra {

/// Moore bound M(k, g): the least possible order of a k-regular graph of
/// girth g. Requires k >= 2, g >= 3.
mpz_class moore_bound(int k, int g);

/// Outcome of checking a graph against the structure an antipodal
/// (k, 2d)-cage of excess e must have.
struct StructuralVerdict {
    int order = 0;
    std::optional<int> degree;     // set when the graph is regular
    std::optional<int> girth;      // nullopt for forests
    std::optional<int> diameter;   // nullopt when disconnected
    bool bipartite = false;
    mpz_class excess;              // order - M(k, 2d), as measured
    std::optional<int> antipodes_per_vertex; // nullopt when non-uniform
    bool antipodal_cliques_ok = false;
    std::optional<long> clique_count;        // c = 2n / (e + 2), when the cliques check out

    /// Violated structural conditions, by name, in check order.
    std::vector<std::string> failures;
    /// Parameter choices outside the regime the identities were proven for
    /// (recorded only; they do not block the identity checks).
    std::vector<std::string> regime_notes;

    bool passed() const { return failures.empty(); }
};

/// Checks k-regularity, bipartiteness, girth 2d, order M(k,2d)+e, the
/// diameter (d+1, or d when e = 0), e/2 vertices at distance d+1 from every
/// vertex, and that "distance d+1" partitions V into cliques K_{e/2+1}.
/// Never throws for a well-formed graph: problems land in `failures`.
StructuralVerdict structural_check(const Graph& g, int k, int d, int e);

/// Result of an exact matrix identity check.
struct IdentityCheck {
    bool refused = false;
    std::string reason;          // why the check was refused
    mpz_class max_abs_residual;  // max |entry| of lhs - rhs

    bool holds() const { return !refused && max_abs_residual == 0; }
};

/// F_d(A) = k A_d - A A_{d+1}, in exact integer arithmetic. A_{d+1} is the
/// zero matrix when the diameter is d (e = 0).
IdentityCheck verify_distance_identity(const Graph& g, int k, int d, int e);

/// k J = (A + k I)(H_{d-1}(A) + A_{d+1}), in exact integer arithmetic.
IdentityCheck verify_ones_identity(const Graph& g, int k, int d, int e);

struct SpectrumEntry {
    long eigenvalue;
    long multiplicity;
    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Spectrum of c disjoint copies of K_{e/2+1} on n vertices:
/// {e/2 with multiplicity c, -1 with multiplicity n - c}, c = 2n/(e+2).
std::vector<SpectrumEntry> antipodal_spectrum(long n, int e);

struct SpectralCrosscheck {
    bool refused = false;
    std::string reason;
    std::vector<double> eigenvalues;   // ascending
    std::vector<double> targets;       // admissible values of H_{d-1}(theta)
    std::vector<int> target_hits;      // eigenvalue count per target
    int trivial_count = 0;             // eigenvalues equal to +-k
    double max_deviation = 0.0;        // worst min_t |H_{d-1}(theta) - t|
    bool ok = false;
};

inline constexpr double crosscheck_tolerance = 1e-8;

/// Numerically checks that every adjacency eigenvalue theta != +-k has
/// H_{d-1}(theta) in {-e/2, 1} (in {0} when e = 0).
SpectralCrosscheck spectral_crosscheck(const Graph& g, int k, int d, int e);

/// Eigenvalues of a symmetric integer matrix, ascending.
std::vector<double> symmetric_eigenvalues(const IntMatrix& m);

} // namespace cage_spectra
