#pragma once

#include "cage_spectra/interval.hpp"
#include "cage_spectra/roots.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cage_spectra {

enum class Verdict { spectrally_admissible, excluded_by_integrality, excluded_by_gap, outside_regime };
std::string_view to_string(Verdict verdict);

enum class IntegralityStatus { integral, non_integral, non_positive };
std::string_view to_string(IntegralityStatus status);

inline constexpr double relative_tolerance = 1e-6;
/// Certified enclosures narrower than this, holding one integer, count as integral.
inline constexpr double integrality_width = 1e-6;

/// Multiplicity of one eigenvalue. The trivial eigenvalues +-k carry
/// multiplicity 1 and have no root record.
struct MultiplicityEntry {
    bool trivial = false;
    int epsilon = 0;
    int index = 0;
    Real theta;
    Real closed_form;            // closed-form value at the bracket midpoint
    double trig = 0.0;           // angle form
    Interval enclosure;          // certified, over the final bracket
    IntegralityStatus status = IntegralityStatus::non_integral;
    mpz_class nearest;           // nearest integer to closed_form
    double deviation = 0.0;      // |closed_form - nearest|
};

struct MomentRow {
    unsigned q = 0;
    Real lhs;           // sum m(theta) theta^q + k^q + (-k)^q
    mpz_class rhs;      // n (B_d^q)_{0,0}
    double relative_error = 0.0;
};

enum class GapStatus { excluded, not_excluded, outside_regime };
std::string_view to_string(GapStatus status);

struct GapReport {
    GapStatus status = GapStatus::outside_regime;
    // Certified interval for lambda_2^2 - mu_2^2 from the exact root brackets.
    mpq_class lower;
    mpq_class upper;
    bool contains_integer = true;
    bool inside_unit_interval = false;  // 0 < lower and upper < 1
    // 16 pi^2 (e/2+1) s^(3-d) (2d + (e/2-1) s^(1-d)) / ((d - s^(1-d))^2 (d + (e/2) s^(1-d))^2)
    double analytic_bound = 0.0;
    bool below_analytic_bound = false;  // upper < analytic_bound
    // s^((d-3)/2)(d + (e/2)s^(1-d)) > (k-1)d >= (e+1)d > 4 pi sqrt(e/2+1)
    double chain_lead = 0.0;
    double chain_degree = 0.0;
    double chain_excess = 0.0;
    double chain_tail = 0.0;
    bool chain_ok = false;
};

/// Gap test for d >= 7; d in {3, 5} yields status outside_regime.
GapReport gap_check(int k, int d, int e);

struct OrderRelationsReport {
    double mu_symmetry_error = 0.0;      // max relative |m(mu_i) - m(mu_{d-i})|
    double lambda_symmetry_error = 0.0;
    bool symmetry_ok = false;

    bool mu_minimality_vacuous = true;   // m(mu_2) < m(mu_i), 3 <= i <= d-3
    double mu_margin = 0.0;              // min_i m(mu_i) - m(mu_2)
    bool mu_minimality_ok = false;       // certified by the enclosures
    bool lambda_minimality_vacuous = true;  // m(lambda_1) < m(lambda_i), 2 <= i <= d-2
    double lambda_margin = 0.0;
    bool lambda_minimality_ok = false;

    bool holds() const
    {
        return symmetry_ok && (mu_minimality_vacuous || mu_minimality_ok)
            && (lambda_minimality_vacuous || lambda_minimality_ok);
    }
};

/// lambda_i are the roots for epsilon = -e/2, mu_i those for epsilon = 1.
OrderRelationsReport multiplicity_order_checks(int k, int d, int e);

struct FeasibilityReport {
    int k = 0;
    int d = 0;
    int e = 0;
    mpz_class n;
    std::vector<RootRecord> mu_roots;      // epsilon = 1
    std::vector<RootRecord> lambda_roots;  // epsilon = -e/2
    /// All eigenvalues in ascending order, including -k and k.
    std::vector<MultiplicityEntry> multiplicities;
    double max_integrality_deviation = 0.0;
    Real multiplicity_sum;                 // includes the two trivial ones
    std::vector<MomentRow> moments;
    unsigned worst_moment_q = 0;
    bool moments_ok = false;
    double max_dual_difference = 0.0;      // max relative |trig - closed|
    std::optional<GapReport> gap;          // present when d >= 7
    Verdict verdict = Verdict::outside_regime;
    std::vector<std::string> notes;

    bool all_integral() const;
};

/// Full spectral feasibility analysis. Parameter-domain violations throw a
/// named DomainError. Consistency checks that hold as identities (sum and
/// moments of the multiplicities, agreement of the two multiplicity
/// formulas) throw InternalError on failure. An enclosure that cannot be
/// resolved after refinement throws NumericalError.
///
/// Verdict: excluded-by-gap when the gap test applies and excludes, else
/// excluded-by-integrality when some multiplicity is certified non-positive
/// or non-integral, else spectrally-admissible.
FeasibilityReport spectral_feasibility(int k, int d, int e);

/// Every (k, d, e) of the given lists, ordered by k, then d, then e.
/// Triples outside the parameter domain yield an outside-regime report with
/// the reason in `notes`. `jobs` > 1 evaluates triples on that many threads.
std::vector<FeasibilityReport> scan(
    const std::vector<int>& ks, const std::vector<int>& ds, const std::vector<int>& es, unsigned jobs = 1);

} // namespace cage_spectra
