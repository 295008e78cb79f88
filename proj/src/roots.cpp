#include "cage_spectra/roots.hpp"

#include "cage_spectra/errors.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cstdlib>

namespace cage_spectra {

void validate_parameters(int k, int d, int e)
{
    if (e % 2 != 0)
        throw DomainError(DomainErrorKind::odd_excess, "e = " + std::to_string(e) + " is odd");
    if (d % 2 == 0)
        throw DomainError(DomainErrorKind::even_diameter, "d = " + std::to_string(d) + " is even");
    if (d < 3)
        throw DomainError(DomainErrorKind::girth_too_small, "d = " + std::to_string(d) + " (need d >= 3)");
    if (e < 2)
        throw DomainError(DomainErrorKind::excess_out_of_range, "e = " + std::to_string(e) + " (need e >= 2)");
    if (e > k - 2)
        throw DomainError(DomainErrorKind::excess_exceeds_bound,
            "e = " + std::to_string(e) + " exceeds k - 2 = " + std::to_string(k - 2));
}

mpq_class isolation_width()
{
    mpz_class den = 1;
    den <<= 60;
    return mpq_class(1, den);
}

IntPolynomial root_polynomial(int k, int d, int epsilon)
{
    return dickson_family(Family::H, k, d - 1) - IntPolynomial::constant(epsilon);
}

namespace {

Real spread(int k)
{
    configure_precision();
    return boost::multiprecision::sqrt(Real(k - 1));
}

// -2 s cos(phi)
Real theta_of(const Real& s, const Real& phi)
{
    return -2 * s * boost::multiprecision::cos(phi);
}

} // namespace

std::pair<Real, Real> phi_seed(int k, int d, int i, int eta)
{
    if (eta == 0)
        throw DomainError(DomainErrorKind::bad_epsilon, "eta = 0 has no seed interval");
    if (i < 1 || i >= d)
        throw DomainError(DomainErrorKind::bad_index, "root index " + std::to_string(i) + " outside 1.." + std::to_string(d - 1));
    const Real s = spread(k);
    const Real c = std::abs(eta) * boost::multiprecision::pow(s, 1 - d);
    const Real arc = i * real_pi();
    if (eta > 0)
        return {arc / (d + c), arc / d};
    return {arc / d, arc / (d - c)};
}

void refine_bracket(const IntPolynomial& p, mpq_class& lower, mpq_class& upper, const mpq_class& width)
{
    const int sign_lower = sign_at(p, lower);
    if (sign_lower == 0) {
        upper = lower;
        return;
    }
    // A monic integer polynomial has only integer rational roots; bisection
    // from non-dyadic seeds would never land on them.
    if (abs(p.leading_coefficient()) == 1 && upper - lower < 64) {
        mpz_class m;
        mpz_cdiv_q(m.get_mpz_t(), lower.get_num_mpz_t(), lower.get_den_mpz_t());
        for (; m <= upper; ++m)
            if (sign_at(p, mpq_class(m)) == 0) {
                lower = m;
                upper = m;
                return;
            }
    }
    while (upper - lower >= width) {
        mpq_class mid = (lower + upper) / 2;
        const int sign_mid = sign_at(p, mid);
        if (sign_mid == 0) {
            lower = mid;
            upper = mid;
            return;
        }
        if (sign_mid == sign_lower)
            lower = std::move(mid);
        else
            upper = std::move(mid);
    }
}

std::vector<RootRecord> isolate_roots(int k, int d, int e, int epsilon)
{
    validate_parameters(k, d, e);
    if (epsilon != 1 && epsilon != -e / 2)
        throw DomainError(DomainErrorKind::bad_epsilon,
            "epsilon = " + std::to_string(epsilon) + " is neither 1 nor -e/2 = " + std::to_string(-e / 2));

    const IntPolynomial p = root_polynomial(k, d, epsilon);
    const Real s = spread(k);
    const Real pi = real_pi();
    const mpq_class width = isolation_width();

    std::vector<RootRecord> records;
    for (int i = 1; i < d; ++i) {
        RootRecord r;
        r.index = i;
        r.epsilon = epsilon;
        r.eta = ((d + i) % 2 == 0) ? epsilon : -epsilon;

        const auto [phi_lo, phi_hi] = phi_seed(k, d, i, r.eta);
        r.lower = to_rational(theta_of(s, phi_lo));
        r.upper = to_rational(theta_of(s, phi_hi));
        const int sign_lo = sign_at(p, r.lower);
        const int sign_hi = sign_at(p, r.upper);
        if (sign_lo == 0 || sign_hi == 0 || sign_lo == sign_hi)
            throw InternalError("seed interval for root " + std::to_string(i) + " of H_" + std::to_string(d - 1)
                + " - (" + std::to_string(epsilon) + ") at k = " + std::to_string(k) + " has no sign change");
        refine_bracket(p, r.lower, r.upper, width);

        r.theta = to_real(mpq_class((r.lower + r.upper) / 2));
        r.phi = boost::multiprecision::acos(-r.theta / (2 * s));
        r.alpha = i * pi - d * r.phi;
        const Real c = std::abs(r.eta) * boost::multiprecision::pow(s, 1 - d);
        const Real reach = c * boost::multiprecision::min(r.phi, Real(pi - r.phi));
        r.alpha_sign_ok = r.eta > 0 ? r.alpha > 0 : r.alpha < 0;
        r.alpha_bound_ok = boost::multiprecision::abs(r.alpha) < reach;
        records.push_back(std::move(r));
    }

    for (std::size_t j = 1; j < records.size(); ++j)
        if (!(records[j - 1].upper < records[j].lower))
            throw InternalError("isolated root brackets overlap");
    return records;
}

double transcendental_residual(const RootRecord& record, int k, int d)
{
    if (record.eta == 0)
        throw DomainError(DomainErrorKind::bad_epsilon, "eta = 0 (the Moore case) has no transcendental form");
    const Real s = spread(k);
    const Real value = boost::multiprecision::sin(record.alpha)
        - record.eta * boost::multiprecision::pow(s, 1 - d)
            * boost::multiprecision::sin((record.index * real_pi() - record.alpha) / d);
    return static_cast<double>(value);
}

} // namespace cage_spectra
