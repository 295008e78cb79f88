#pragma once

#include "cage_spectra/graph.hpp"
#include "cage_spectra/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cage_spectra {

/// The (D+1)x(D+1) intersection matrix of a bipartite Moore graph of degree
/// k and diameter D:
///
///     0   1
///     k   0   1
///        k-1  0   1
///             .   .   .
///                k-1  0   k
///                    k-1  0
///
/// (B^q)_{0,0} counts closed q-walks at a vertex for q below the girth 2D.
class IntersectionMatrix {
public:
    IntersectionMatrix(int k, int diameter);

    int degree() const { return k_; }
    int diameter() const { return diameter_; }
    const IntMatrix& entries() const { return entries_; }

private:
    int k_;
    int diameter_;
    IntMatrix entries_;
};

/// Requires k >= 3, D >= 2.
IntersectionMatrix build_bd(int k, int diameter);

/// (B^q)_{0,0}, exactly.
mpz_class bd_entry00(const IntersectionMatrix& b, unsigned q);

struct TraceRow {
    unsigned q;
    mpz_class trace;     // tr(A^q)
    mpz_class expected;  // n (B_d^q)_{0,0}
};

struct TraceIdentityReport {
    bool refused = false;
    std::string reason;
    std::vector<TraceRow> rows;
    std::optional<unsigned> first_failure;

    bool holds() const { return !refused && !first_failure; }
};

/// tr(A^q) = n (B_d^q)_{0,0} for q = 0..2d-1. Refuses unless the graph is
/// k-regular, bipartite and of girth 2d.
TraceIdentityReport trace_identity_check(const Graph& g, int k, int d);

struct MinimalPolynomialReport {
    mpz_class residual;          // max |entry| of (B^2 - k^2 I) H_{D-1}(B)
    bool quadratic_factor_vanishes;  // B^2 - k^2 I = 0 on its own
    bool dickson_factor_vanishes;    // H_{D-1}(B) = 0 on its own

    bool annihilates() const { return residual == 0; }
    bool minimal() const { return annihilates() && !quadratic_factor_vanishes && !dickson_factor_vanishes; }
};

MinimalPolynomialReport minimal_polynomial_check(int k, int diameter);

/// (L_d(B_d))_{0,0} where L_d(x) = (x^2 - k^2)(H_{d-1}(x) - H_{d-1}(theta)) / (x - theta),
/// expanded as a polynomial by synthetic division. Extended precision is
/// used for d > 9.
double ld_entry00(int k, int d, double theta);

/// -k (k-1) H_{d-2}(theta), the closed form of ld_entry00.
double ld_entry00_closed_form(int k, int d, double theta);

} // namespace cage_spectra
