#include "cage_spectra/structure.hpp"

#include "cage_spectra/errors.hpp"
#include "cage_spectra/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace cage_spectra {

mpz_class moore_bound(int k, int g)
{
    if (k < 2)
        throw DomainError(DomainErrorKind::degree_too_small, "k = " + std::to_string(k) + " (need k >= 2)");
    if (g < 3)
        throw DomainError(DomainErrorKind::girth_too_small, "g = " + std::to_string(g) + " (need g >= 3)");
    if (k == 2)
        return g;
    // Geometric sums of powers of (k-1).
    mpz_class power;
    const mpz_class base = k - 1;
    if (g % 2 == 1) {
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((g - 1) / 2));
        return 1 + k * (power - 1) / (k - 2);
    }
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(g / 2));
    return 2 * (power - 1) / (k - 2);
}

namespace {

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += ", ";
        out += p;
    }
    return out;
}

} // namespace

StructuralVerdict structural_check(const Graph& g, int k, int d, int e)
{
    StructuralVerdict v;
    v.order = g.order();
    v.degree = g.regular_degree();
    v.girth = girth(g);
    v.bipartite = is_bipartite(g);

    if (d < 3)
        v.failures.push_back("d-below-3");
    if (e < 0)
        v.failures.push_back("excess-negative");
    else if (e % 2 != 0)
        v.failures.push_back("excess-odd");
    if (e > k - 2)
        v.regime_notes.push_back("excess-exceeds-k-minus-2");

    if (v.degree != k)
        v.failures.push_back("not-k-regular");
    if (!v.bipartite)
        v.failures.push_back("not-bipartite");
    if (v.girth != 2 * d)
        v.failures.push_back("girth-mismatch");
    if (k >= 2 && d >= 2) {
        v.excess = mpz_class(g.order()) - moore_bound(k, 2 * d);
        if (v.excess != e)
            v.failures.push_back("order-mismatch");
    }

    if (!is_connected(g) || g.order() == 0) {
        v.failures.push_back("disconnected");
        return v;
    }
    const auto table = distance_table(g);
    int diameter = 0;
    for (const auto& row : table)
        diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
    v.diameter = diameter;
    const int expected_diameter = e == 0 ? d : d + 1;
    if (diameter != expected_diameter)
        v.failures.push_back("diameter-mismatch");

    // Antipodes: vertices at distance d+1.
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::vector<int>> antipodes(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w)
            if (table[u][w] == d + 1)
                antipodes[u].push_back(static_cast<int>(w));
    const auto count0 = antipodes[0].size();
    const bool uniform
        = std::all_of(antipodes.begin(), antipodes.end(), [&](const auto& a) { return a.size() == count0; });
    if (uniform)
        v.antipodes_per_vertex = static_cast<int>(count0);
    if (e >= 0 && e % 2 == 0 && (!uniform || static_cast<int>(count0) != e / 2))
        v.failures.push_back("antipode-count");

    // Closed antipodal classes {u} + antipodes(u) must coincide for every
    // member and have size e/2 + 1.
    bool cliques = uniform && e >= 0 && e % 2 == 0 && static_cast<int>(count0) == e / 2;
    for (std::size_t u = 0; cliques && u < n; ++u) {
        std::set<int> cls(antipodes[u].begin(), antipodes[u].end());
        cls.insert(static_cast<int>(u));
        for (int w : antipodes[u]) {
            std::set<int> other(antipodes[static_cast<std::size_t>(w)].begin(),
                antipodes[static_cast<std::size_t>(w)].end());
            other.insert(w);
            if (other != cls) {
                cliques = false;
                break;
            }
        }
    }
    v.antipodal_cliques_ok = cliques;
    if (!cliques)
        v.failures.push_back("antipodal-cliques");
    else if (e > 0)
        v.clique_count = static_cast<long>(2 * n / static_cast<std::size_t>(e + 2));
    return v;
}

namespace {

struct IdentityInputs {
    IntMatrix adjacency;
    DistanceMatrixSet distances;
};

std::optional<IdentityInputs> prepare(const Graph& g, int k, int d, int e, IdentityCheck& out)
{
    const auto verdict = structural_check(g, k, d, e);
    if (!verdict.passed()) {
        out.refused = true;
        out.reason = "structural check failed: " + join(verdict.failures);
        return std::nullopt;
    }
    return IdentityInputs{g.adjacency_matrix(), distance_matrices(g)};
}

} // namespace

IdentityCheck verify_distance_identity(const Graph& g, int k, int d, int e)
{
    IdentityCheck check;
    const auto inputs = prepare(g, k, d, e, check);
    if (!inputs)
        return check;
    const auto& a = inputs->adjacency;
    const IntMatrix lhs = evaluate(dickson_family(Family::F, k, d), a);
    const IntMatrix rhs = mpz_class(k) * inputs->distances.at(d) - a * inputs->distances.at(d + 1);
    check.max_abs_residual = (lhs - rhs).max_abs_entry();
    return check;
}

IdentityCheck verify_ones_identity(const Graph& g, int k, int d, int e)
{
    IdentityCheck check;
    const auto inputs = prepare(g, k, d, e, check);
    if (!inputs)
        return check;
    const auto& a = inputs->adjacency;
    const auto n = a.rows();
    const IntMatrix lhs = mpz_class(k) * IntMatrix::all_ones(n);
    const IntMatrix factor = a + mpz_class(k) * IntMatrix::identity(n);
    const IntMatrix rhs
        = factor * (evaluate(dickson_family(Family::H, k, d - 1), a) + inputs->distances.at(d + 1));
    check.max_abs_residual = (lhs - rhs).max_abs_entry();
    return check;
}

std::vector<SpectrumEntry> antipodal_spectrum(long n, int e)
{
    if (e < 2 || e % 2 != 0)
        throw DomainError(e % 2 != 0 ? DomainErrorKind::odd_excess : DomainErrorKind::excess_out_of_range,
            "antipodal spectrum needs an even excess e >= 2, got " + std::to_string(e));
    if (n <= 0 || (2 * n) % (e + 2) != 0)
        throw DomainError(DomainErrorKind::bad_argument,
            "e + 2 = " + std::to_string(e + 2) + " does not divide 2n = " + std::to_string(2 * n));
    const long c = 2 * n / (e + 2);
    return {{e / 2, c}, {-1, n - c}};
}

std::vector<double> symmetric_eigenvalues(const IntMatrix& m)
{
    if (m.rows() != m.cols() || !m.is_symmetric())
        throw DomainError(DomainErrorKind::bad_argument, "symmetric eigenvalues need a symmetric matrix");
    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXd dense(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            dense(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("symmetric eigensolver did not converge");
    const auto& values = solver.eigenvalues();
    return {values.data(), values.data() + values.size()};
}

SpectralCrosscheck spectral_crosscheck(const Graph& g, int k, int d, int e)
{
    SpectralCrosscheck report;
    const auto verdict = structural_check(g, k, d, e);
    if (!verdict.passed()) {
        report.refused = true;
        report.reason = "structural check failed: " + join(verdict.failures);
        return report;
    }
    report.targets = e == 0 ? std::vector<double>{0.0} : std::vector<double>{-e / 2.0, 1.0};
    report.target_hits.assign(report.targets.size(), 0);
    report.eigenvalues = symmetric_eigenvalues(g.adjacency_matrix());

    const IntPolynomial h = dickson_family(Family::H, k, d - 1);
    constexpr double trivial_tolerance = 1e-6;
    for (double theta : report.eigenvalues) {
        if (std::abs(theta - k) < trivial_tolerance || std::abs(theta + k) < trivial_tolerance) {
            ++report.trivial_count;
            continue;
        }
        const double value = h.evaluate(theta);
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_index = 0;
        for (std::size_t t = 0; t < report.targets.size(); ++t) {
            const double dev = std::abs(value - report.targets[t]);
            if (dev < best) {
                best = dev;
                best_index = t;
            }
        }
        report.max_deviation = std::max(report.max_deviation, best);
        if (best <= crosscheck_tolerance)
            ++report.target_hits[best_index];
    }
    report.ok = report.max_deviation <= crosscheck_tolerance;
    return report;
}

} // namespace cage_spectra
