#include "cage_spectra/feasibility.hpp"

#include "cage_spectra/errors.hpp"
#include "cage_spectra/intersection.hpp"
#include "cage_spectra/multiplicity.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace cage_spectra {

namespace mp = boost::multiprecision;

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::spectrally_admissible:
        return "spectrally-admissible";
    case Verdict::excluded_by_integrality:
        return "excluded-by-integrality";
    case Verdict::excluded_by_gap:
        return "excluded-by-gap";
    case Verdict::outside_regime:
        return "outside-regime";
    }
    return "unknown";
}

std::string_view to_string(IntegralityStatus status)
{
    switch (status) {
    case IntegralityStatus::integral:
        return "integral";
    case IntegralityStatus::non_integral:
        return "non-integral";
    case IntegralityStatus::non_positive:
        return "non-positive";
    }
    return "unknown";
}

std::string_view to_string(GapStatus status)
{
    switch (status) {
    case GapStatus::excluded:
        return "excluded";
    case GapStatus::not_excluded:
        return "not-excluded";
    case GapStatus::outside_regime:
        return "outside-regime";
    }
    return "unknown";
}

bool FeasibilityReport::all_integral() const
{
    return std::all_of(multiplicities.begin(), multiplicities.end(),
        [](const MultiplicityEntry& m) { return m.status == IntegralityStatus::integral; });
}

namespace {

Real relative_difference(const Real& a, const Real& b)
{
    const Real scale = mp::max(Real(mp::abs(a)), Real(mp::abs(b)));
    if (scale == 0)
        return Real(0);
    return Real(mp::abs(a - b) / scale);
}

// Exact square of a rational interval.
std::pair<mpq_class, mpq_class> square(const mpq_class& lo, const mpq_class& hi)
{
    const mpq_class a = lo * lo;
    const mpq_class b = hi * hi;
    if (lo >= 0)
        return {a, b};
    if (hi <= 0)
        return {b, a};
    return {mpq_class(0), std::max(a, b)};
}

bool holds_integer(const mpq_class& lo, const mpq_class& hi)
{
    mpz_class first;
    mpz_class last;
    mpz_cdiv_q(first.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(last.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    return first <= last;
}

GapReport gap_from_roots(int k, int d, int e, const std::vector<RootRecord>& mu, const std::vector<RootRecord>& lambda)
{
    GapReport gap;
    if (d < 7)
        return gap;

    const auto [mu_lo, mu_hi] = square(mu[1].lower, mu[1].upper);
    const auto [la_lo, la_hi] = square(lambda[1].lower, lambda[1].upper);
    gap.lower = la_lo - mu_hi;
    gap.upper = la_hi - mu_lo;
    gap.contains_integer = holds_integer(gap.lower, gap.upper);
    gap.inside_unit_interval = gap.lower > 0 && gap.upper < 1;

    const Real s = mp::sqrt(Real(k - 1));
    const Real half = Real(e) / 2;
    const Real t = mp::pow(s, Real(1 - d));
    const Real pi = real_pi();
    const Real bound = 16 * pi * pi * (half + 1) * mp::pow(s, Real(3 - d)) * (2 * d + (half - 1) * t)
        / (mp::pow(Real(d - t), 2) * mp::pow(Real(d + half * t), 2));
    gap.analytic_bound = static_cast<double>(bound);
    gap.below_analytic_bound = to_real(gap.upper) < bound;

    const Real lead = mp::pow(s, Real(d - 3) / 2) * (d + half * t);
    const Real by_degree = Real(k - 1) * d;
    const Real by_excess = Real(e + 1) * d;
    const Real tail = 4 * pi * mp::sqrt(half + 1);
    gap.chain_lead = static_cast<double>(lead);
    gap.chain_degree = static_cast<double>(by_degree);
    gap.chain_excess = static_cast<double>(by_excess);
    gap.chain_tail = static_cast<double>(tail);
    gap.chain_ok = lead > by_degree && by_degree >= by_excess && by_excess > tail;

    gap.status = gap.contains_integer ? GapStatus::not_excluded : GapStatus::excluded;
    return gap;
}

// Refines a copy of the bracket until the enclosure of the multiplicity
// settles its integrality.
constexpr int refinement_rounds = 8;

void resolve(int k, int d, int e, const RootRecord& r, MultiplicityEntry& entry)
{
    const IntPolynomial p = root_polynomial(k, d, r.epsilon);
    mpq_class lower = r.lower;
    mpq_class upper = r.upper;
    mpq_class width = isolation_width();
    const mpz_class step = mpz_class(1) << 24;
    for (int round = 0; round <= refinement_rounds; ++round) {
        if (round > 0) {
            width /= step;
            refine_bracket(p, lower, upper, width);
        }
        entry.enclosure = multiplicity_enclosure(k, d, e, r.epsilon, Interval(lower, upper));
        const Interval& m = entry.enclosure;
        if (m.upper() <= 0) {
            entry.status = IntegralityStatus::non_positive;
            return;
        }
        if (m.lower() <= 0)
            continue;
        const auto range = m.integer_range();
        if (!range) {
            entry.status = IntegralityStatus::non_integral;
            return;
        }
        if (range->first == range->second && m.width() <= integrality_width) {
            entry.status = IntegralityStatus::integral;
            return;
        }
    }
    throw NumericalError("integrality of the multiplicity at theta = " + entry.enclosure.to_string(12)
        + " undetermined after refinement");
}

MultiplicityEntry trivial_entry(int k)
{
    MultiplicityEntry entry;
    entry.trivial = true;
    entry.theta = Real(k);
    entry.closed_form = Real(1);
    entry.trig = 1.0;
    entry.enclosure = Interval(1L);
    entry.status = IntegralityStatus::integral;
    entry.nearest = 1;
    return entry;
}

} // namespace

GapReport gap_check(int k, int d, int e)
{
    validate_parameters(k, d, e);
    if (d < 7)
        return GapReport{};
    return gap_from_roots(k, d, e, isolate_roots(k, d, e, 1), isolate_roots(k, d, e, -e / 2));
}

OrderRelationsReport multiplicity_order_checks(int k, int d, int e)
{
    validate_parameters(k, d, e);
    OrderRelationsReport report;

    struct Values {
        std::vector<Real> m;
        std::vector<Interval> enclosure;
    };
    auto values = [&](int epsilon) {
        Values v;
        for (const auto& r : isolate_roots(k, d, e, epsilon)) {
            v.m.push_back(multiplicity_closed_form(k, d, e, epsilon, r.theta));
            v.enclosure.push_back(multiplicity_enclosure(k, d, e, epsilon, Interval(r.lower, r.upper)));
        }
        return v;
    };
    const Values mu = values(1);
    const Values lambda = values(-e / 2);

    // Entry j holds index j + 1.
    auto symmetry = [&](const Values& v) {
        Real worst = 0;
        for (std::size_t j = 0; j < v.m.size(); ++j)
            worst = mp::max(worst, relative_difference(v.m[j], v.m[v.m.size() - 1 - j]));
        return static_cast<double>(worst);
    };
    report.mu_symmetry_error = symmetry(mu);
    report.lambda_symmetry_error = symmetry(lambda);
    report.symmetry_ok
        = report.mu_symmetry_error <= relative_tolerance && report.lambda_symmetry_error <= relative_tolerance;

    // m(v_min) < m(v_i) for first <= i <= last.
    auto minimality = [&](const Values& v, int min_index, int first, int last, bool& vacuous, double& margin, bool& ok) {
        vacuous = first > last;
        if (vacuous)
            return;
        const auto lo = static_cast<std::size_t>(min_index - 1);
        Real worst = v.m[static_cast<std::size_t>(first - 1)] - v.m[lo];
        ok = true;
        for (int i = first; i <= last; ++i) {
            const auto j = static_cast<std::size_t>(i - 1);
            worst = mp::min(worst, Real(v.m[j] - v.m[lo]));
            if (!(v.enclosure[j].lower() > v.enclosure[lo].upper()))
                ok = false;
        }
        margin = static_cast<double>(worst);
        ok = ok && margin > 0;
    };
    minimality(mu, 2, 3, d - 3, report.mu_minimality_vacuous, report.mu_margin, report.mu_minimality_ok);
    minimality(lambda, 1, 2, d - 2, report.lambda_minimality_vacuous, report.lambda_margin,
        report.lambda_minimality_ok);
    return report;
}

FeasibilityReport spectral_feasibility(int k, int d, int e)
{
    validate_parameters(k, d, e);
    configure_precision();

    FeasibilityReport report;
    report.k = k;
    report.d = d;
    report.e = e;
    report.n = cage_order(k, d, e);
    report.mu_roots = isolate_roots(k, d, e, 1);
    report.lambda_roots = isolate_roots(k, d, e, -e / 2);

    for (const auto* roots : {&report.mu_roots, &report.lambda_roots})
        for (const auto& r : *roots) {
            if (!r.alpha_sign_ok || !r.alpha_bound_ok)
                throw InternalError("root " + std::to_string(r.index) + " violates its angle bound");
            MultiplicityEntry entry;
            entry.epsilon = r.epsilon;
            entry.index = r.index;
            entry.theta = r.theta;
            entry.closed_form = multiplicity_closed_form(k, d, e, r.epsilon, r.theta);
            entry.trig = multiplicity_trig(k, d, e, r);
            resolve(k, d, e, r, entry);
            const Real rounded = mp::round(entry.closed_form);
            entry.nearest = to_rational(rounded).get_num();
            entry.deviation = static_cast<double>(mp::abs(entry.closed_form - rounded));
            report.max_integrality_deviation = std::max(report.max_integrality_deviation, entry.deviation);
            const Real dual = relative_difference(Real(entry.trig), entry.closed_form);
            report.max_dual_difference = std::max(report.max_dual_difference, static_cast<double>(dual));
            report.multiplicities.push_back(std::move(entry));
        }
    report.multiplicities.push_back(trivial_entry(k));
    report.multiplicities.push_back(trivial_entry(-k));
    std::sort(report.multiplicities.begin(), report.multiplicities.end(),
        [](const MultiplicityEntry& a, const MultiplicityEntry& b) { return a.theta < b.theta; });

    if (report.max_dual_difference > relative_tolerance)
        throw InternalError("closed and angle forms of the multiplicity disagree (relative difference "
            + std::to_string(report.max_dual_difference) + ")");

    report.multiplicity_sum = 0;
    for (const auto& m : report.multiplicities)
        report.multiplicity_sum += m.closed_form;
    const Real n_real = to_real(report.n);
    if (relative_difference(report.multiplicity_sum, n_real) > relative_tolerance)
        throw InternalError("multiplicities do not sum to n");

    // Moments against closed walks counted by the intersection matrix.
    const auto b = build_bd(k, d);
    Real worst = -1;
    for (unsigned q = 0; q < static_cast<unsigned>(2 * d); ++q) {
        MomentRow row;
        row.q = q;
        row.lhs = 0;
        Real scale = 0;
        for (const auto& m : report.multiplicities) {
            const Real term = m.closed_form * mp::pow(m.theta, q);
            row.lhs += term;
            scale += mp::abs(term);
        }
        row.rhs = report.n * bd_entry00(b, q);
        const Real error = mp::abs(row.lhs - to_real(row.rhs)) / mp::max(scale, Real(1));
        row.relative_error = static_cast<double>(error);
        if (error > worst) {
            worst = error;
            report.worst_moment_q = q;
        }
        report.moments.push_back(std::move(row));
    }
    report.moments_ok = worst <= relative_tolerance;
    if (!report.moments_ok)
        throw InternalError("moment identity fails at q = " + std::to_string(report.worst_moment_q));

    if (d >= 7)
        report.gap = gap_from_roots(k, d, e, report.mu_roots, report.lambda_roots);
    else
        report.notes.push_back("gap test needs d >= 7");

    if (report.gap && report.gap->status == GapStatus::excluded)
        report.verdict = Verdict::excluded_by_gap;
    else if (!report.all_integral())
        report.verdict = Verdict::excluded_by_integrality;
    else
        report.verdict = Verdict::spectrally_admissible;
    return report;
}

namespace {

FeasibilityReport scan_one(int k, int d, int e)
{
    try {
        return spectral_feasibility(k, d, e);
    } catch (const DomainError& err) {
        FeasibilityReport report;
        report.k = k;
        report.d = d;
        report.e = e;
        if (k >= 2 && d >= 2 && e >= 0)
            report.n = cage_order(k, d, e);
        report.verdict = Verdict::outside_regime;
        report.notes.emplace_back(err.what());
        return report;
    }
}

} // namespace

std::vector<FeasibilityReport> scan(
    const std::vector<int>& ks, const std::vector<int>& ds, const std::vector<int>& es, unsigned jobs)
{
    struct Triple {
        int k, d, e;
    };
    std::vector<Triple> triples;
    for (int k : ks)
        for (int d : ds)
            for (int e : es)
                triples.push_back({k, d, e});
    std::vector<FeasibilityReport> reports(triples.size());
    if (triples.empty())
        return reports;

    configure_precision();
    // MPFR keeps per-thread caches only when built with thread-local storage.
    if (!mpfr_buildopt_tls_p())
        jobs = 1;
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(triples.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&] {
        for (std::size_t i = next++; i < triples.size(); i = next++) {
            try {
                reports[i] = scan_one(triples[i].k, triples[i].d, triples[i].e);
            } catch (...) {
                std::lock_guard guard(failure_lock);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);
    return reports;
}

} // namespace cage_spectra
