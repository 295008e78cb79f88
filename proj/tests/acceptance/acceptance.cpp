// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include "cage_spectra/catalog.hpp"
#include "cage_spectra/errors.hpp"
#include "cage_spectra/feasibility.hpp"
#include "cage_spectra/intersection.hpp"
#include "cage_spectra/multiplicity.hpp"
#include "cage_spectra/precision.hpp"
#include "cage_spectra/roots.hpp"
#include "cage_spectra/structure.hpp"

#include <chrono>
#include <cmath>
#include <array>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

using namespace cage_spectra;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what)
    {
        if (!condition) {
            if (ok)
                detail << what;
            else
                detail << "; " << what;
            ok = false;
        }
    }
};

bool close_rel(double a, double b, double tol)
{
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

int failures = 0;

void criterion(int number, const std::string& name, double limit_seconds, const std::function<void(Check&)>& body)
{
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(elapsed < limit_seconds, "took " + std::to_string(elapsed) + " s");
    if (!c.ok)
        ++failures;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << number << ". " << name << "  (" << std::fixed
              << std::setprecision(3) << elapsed << " s)";
    if (!c.ok)
        std::cout << "  " << c.detail.str();
    std::cout << std::endl;
}

std::string triple(int k, int d, int e)
{
    return "(" + std::to_string(k) + "," + std::to_string(d) + "," + std::to_string(e) + ")";
}

std::string expect_kind(int k, int d, int e, DomainErrorKind kind)
{
    try {
        spectral_feasibility(k, d, e);
    } catch (const DomainError& error) {
        if (error.kind() == kind)
            return {};
        return triple(k, d, e) + " raised " + error.what();
    }
    return triple(k, d, e) + " was not rejected";
}

const std::vector<std::array<int, 3>> dual_triples{{4, 3, 2}, {5, 5, 2}, {6, 5, 4}, {7, 7, 2}, {8, 7, 6}};

} // namespace

int main()
{
    configure_precision();

    criterion(1, "Moore bound regression", 0.1, [](Check& c) {
        c.expect(moore_bound(3, 6) == 14, "M(3,6)");
        c.expect(moore_bound(4, 6) == 26, "M(4,6)");
        c.expect(moore_bound(3, 8) == 30, "M(3,8)");
        for (int k = 3; k <= 10; ++k)
            c.expect(moore_bound(k, 4) == 2 * k, "M(" + std::to_string(k) + ",4)");
    });

    criterion(2, "exact distance identities on Heawood and Tutte-Coxeter", 1.0, [](Check& c) {
        for (auto [name, d] : {std::pair{"heawood", 3}, {"tutte_coxeter", 4}}) {
            const Graph g = catalog(name);
            const auto distance = verify_distance_identity(g, 3, d, 0);
            const auto ones = verify_ones_identity(g, 3, d, 0);
            c.expect(distance.holds(), std::string(name) + " F_d(A) = kA_d - AA_{d+1}");
            c.expect(ones.holds(), std::string(name) + " kJ = (A+kI)(H_{d-1}(A)+A_{d+1})");
        }
    });

    criterion(3, "trace oracle tr(A^q) = n (B_d^q)_00", 1.0, [](Check& c) {
        for (auto [name, d] : {std::pair{"heawood", 3}, {"tutte_coxeter", 4}}) {
            const auto r = trace_identity_check(catalog(name), 3, d);
            c.expect(r.holds(), name);
            c.expect(r.rows.size() == static_cast<std::size_t>(2 * d), std::string(name) + " row count");
        }
    });

    criterion(4, "minimal polynomial (B^2 - k^2 I) H_{D-1}(B) = 0", 1.0, [](Check& c) {
        for (int k = 3; k <= 7; ++k)
            for (int D = 2; D <= 8; ++D)
                c.expect(minimal_polynomial_check(k, D).annihilates(), "k=" + std::to_string(k) + " D=" + std::to_string(D));
    });

    criterion(5, "worked multiplicities at (4,3,2)", 1.0, [](Check& c) {
        const auto r = spectral_feasibility(4, 3, 2);
        const std::vector<long> expected{1, 7, 6, 6, 7, 1};
        const std::vector<double> thetas{-4, -2, -std::sqrt(2.0), std::sqrt(2.0), 2, 4};
        c.expect(r.multiplicities.size() == 6, "six eigenvalues");
        for (std::size_t i = 0; i < r.multiplicities.size() && i < 6; ++i) {
            const auto& m = r.multiplicities[i];
            c.expect(close_rel(static_cast<double>(m.theta), thetas[i], 1e-6), "eigenvalue " + std::to_string(i));
            c.expect(std::abs(static_cast<double>(m.closed_form) - expected[i]) <= 1e-6 * expected[i],
                "multiplicity " + std::to_string(i));
            const auto range = m.enclosure.integer_range();
            c.expect(range && range->first == expected[i] && range->second == expected[i],
                "enclosure " + std::to_string(i) + " " + m.enclosure.to_string(8));
        }
        c.expect(r.n == moore_bound(4, 6) + 2 && r.n == 28, "n = 28");
        c.expect(std::abs(static_cast<double>(r.multiplicity_sum) - 28.0) <= 28e-6, "sum");
        for (const auto& row : r.moments)
            if (row.q <= 5)
                c.expect(row.relative_error <= 1e-6, "moment q=" + std::to_string(row.q));
        c.expect(r.moments.size() >= 6, "moments up to q=5");
        c.expect(r.verdict == Verdict::spectrally_admissible, "verdict");
    });

    criterion(6, "closed form and angle form agree", 5.0, [](Check& c) {
        for (auto [k, d, e] : dual_triples)
            for (int epsilon : {1, -e / 2})
                for (const auto& rec : isolate_roots(k, d, e, epsilon)) {
                    const double closed = multiplicity_closed_form(k, d, e, epsilon, rec.theta_value());
                    const double angle = multiplicity_trig(k, d, e, rec);
                    c.expect(close_rel(closed, angle, 1e-6),
                        triple(k, d, e) + " eps=" + std::to_string(epsilon) + " i=" + std::to_string(rec.index));
                }
    });

    criterion(7, "gap exclusion over k 4..20, d 7,9,11, e 2,4,6", 60.0, [](Check& c) {
        std::vector<int> ks;
        for (int k = 4; k <= 20; ++k)
            ks.push_back(k);
        const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
        int in_regime = 0;
        for (const auto& r : scan(ks, {7, 9, 11}, {2, 4, 6}, jobs)) {
            if (r.e > r.k - 2) {
                c.expect(r.verdict == Verdict::outside_regime, triple(r.k, r.d, r.e) + " should be outside regime");
                continue;
            }
            ++in_regime;
            const std::string t = triple(r.k, r.d, r.e);
            c.expect(r.verdict == Verdict::excluded_by_gap, t + " verdict");
            if (!r.gap) {
                c.expect(false, t + " has no gap report");
                continue;
            }
            c.expect(r.gap->lower > 0 && r.gap->upper < 1, t + " gap inside (0,1)");
            c.expect(!r.gap->contains_integer, t + " gap holds an integer");
            c.expect(r.gap->chain_lead > r.gap->chain_degree && r.gap->chain_degree >= r.gap->chain_excess
                    && r.gap->chain_excess > r.gap->chain_tail && r.gap->chain_ok,
                t + " closing chain");
        }
        c.expect(in_regime == 135, "135 in-regime triples, got " + std::to_string(in_regime));
    });

    criterion(8, "weight monotonicity, symmetry and minimality", 5.0, [](Check& c) {
        for (int k : {4, 6, 8}) {
            for (int j = 0; j < 100; ++j) {
                const double z = -0.99 + 1.98 * j / 99.0;
                c.expect(f_weight(k, z) == f_weight(k, -z), "f even at k=" + std::to_string(k));
            }
            std::vector<double> v;
            for (int j = 0; j < 100; ++j)
                v.push_back(f_weight(k, -0.99 + 1.98 * j / 99.0));
            for (std::size_t j = 1; j + 1 < v.size(); ++j)
                c.expect(v[j - 1] - 2 * v[j] + v[j + 1] <= 0.0, "f concave at k=" + std::to_string(k));
        }
        for (auto [k, d, e] : {std::array{4, 3, 2}, {6, 5, 4}, {8, 7, 6}}) {
            double p1 = 0, p2 = 0, p3 = 0;
            for (int j = 0; j < 50; ++j) {
                const double z = -0.98 + 1.96 * j / 49.0;
                const double g1 = g_weight(Weight::g1, k, d, e, z);
                const double g2 = g_weight(Weight::g2, k, d, e, z);
                const double g3 = g_weight(Weight::g3, k, d, e, z);
                if (j > 0) {
                    c.expect(g1 > p1, "g1 increasing " + triple(k, d, e));
                    c.expect(g2 < p2, "g2 decreasing " + triple(k, d, e));
                    c.expect(g3 > p3, "g3 increasing " + triple(k, d, e));
                }
                p1 = g1;
                p2 = g2;
                p3 = g3;
            }
        }
        for (auto [k, d, e] : dual_triples)
            c.expect(multiplicity_order_checks(k, d, e).symmetry_ok, "symmetry " + triple(k, d, e));
        const auto big = multiplicity_order_checks(7, 7, 2);
        c.expect(!big.mu_minimality_vacuous && big.mu_minimality_ok && big.mu_margin > 0, "mu minimality (7,7,2)");
        c.expect(!big.lambda_minimality_vacuous && big.lambda_minimality_ok && big.lambda_margin > 0,
            "lambda minimality (7,7,2)");
    });

    criterion(9, "negative controls", 1.0, [](Check& c) {
        for (const auto& message : {expect_kind(4, 3, 3, DomainErrorKind::odd_excess),
                 expect_kind(4, 4, 2, DomainErrorKind::even_diameter),
                 expect_kind(3, 3, 2, DomainErrorKind::excess_exceeds_bound)})
            c.expect(message.empty(), message);
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
