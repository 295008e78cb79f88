#include "cage_spectra/interval.hpp"

#include "cage_spectra/errors.hpp"

#include <sstream>

namespace cage_spectra {

namespace {

Real fresh()
{
    configure_precision();
    return Real();
}

mpfr_ptr raw(Real& x)
{
    return x.backend().data();
}

mpfr_srcptr raw(const Real& x)
{
    return x.backend().data();
}

} // namespace

Interval::Interval() : lo_(fresh()), hi_(fresh())
{
    mpfr_set_zero(raw(lo_), 1);
    mpfr_set_zero(raw(hi_), 1);
}

Interval::Interval(long value) : lo_(fresh()), hi_(fresh())
{
    mpfr_set_si(raw(lo_), value, MPFR_RNDD);
    mpfr_set_si(raw(hi_), value, MPFR_RNDU);
}

Interval::Interval(const mpz_class& value) : lo_(fresh()), hi_(fresh())
{
    mpfr_set_z(raw(lo_), value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(raw(hi_), value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& value) : Interval(value, value)
{
}

Interval::Interval(const mpq_class& lower, const mpq_class& upper) : lo_(fresh()), hi_(fresh())
{
    if (lower > upper)
        throw DomainError(DomainErrorKind::bad_argument, "interval lower endpoint exceeds upper endpoint");
    mpfr_set_q(raw(lo_), lower.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(raw(hi_), upper.get_mpq_t(), MPFR_RNDU);
}

Real Interval::midpoint() const
{
    Real m = fresh();
    mpfr_add(raw(m), raw(lo_), raw(hi_), MPFR_RNDN);
    mpfr_div_2ui(raw(m), raw(m), 1, MPFR_RNDN);
    return m;
}

Real Interval::width() const
{
    Real w = fresh();
    mpfr_sub(raw(w), raw(hi_), raw(lo_), MPFR_RNDU);
    return w;
}

Real Interval::radius() const
{
    Real r = width();
    mpfr_div_2ui(raw(r), raw(r), 1, MPFR_RNDU);
    return r;
}

bool Interval::contains(const mpz_class& value) const
{
    return mpfr_cmp_z(raw(lo_), value.get_mpz_t()) <= 0 && mpfr_cmp_z(raw(hi_), value.get_mpz_t()) >= 0;
}

bool Interval::contains_zero() const
{
    return mpfr_sgn(raw(lo_)) <= 0 && mpfr_sgn(raw(hi_)) >= 0;
}

bool Interval::strictly_positive() const
{
    return mpfr_sgn(raw(lo_)) > 0;
}

bool Interval::strictly_negative() const
{
    return mpfr_sgn(raw(hi_)) < 0;
}

std::optional<std::pair<mpz_class, mpz_class>> Interval::integer_range() const
{
    mpz_class first;
    mpz_class last;
    mpfr_get_z(first.get_mpz_t(), raw(lo_), MPFR_RNDU);
    mpfr_get_z(last.get_mpz_t(), raw(hi_), MPFR_RNDD);
    if (first > last)
        return std::nullopt;
    return std::make_pair(first, last);
}

Real Interval::magnitude() const
{
    Real a = fresh();
    Real b = fresh();
    mpfr_abs(raw(a), raw(lo_), MPFR_RNDU);
    mpfr_abs(raw(b), raw(hi_), MPFR_RNDU);
    return mpfr_cmp(raw(a), raw(b)) >= 0 ? a : b;
}

Interval Interval::square() const
{
    Interval r;
    if (mpfr_sgn(raw(lo_)) >= 0) {
        mpfr_sqr(raw(r.lo_), raw(lo_), MPFR_RNDD);
        mpfr_sqr(raw(r.hi_), raw(hi_), MPFR_RNDU);
    } else if (mpfr_sgn(raw(hi_)) <= 0) {
        mpfr_sqr(raw(r.lo_), raw(hi_), MPFR_RNDD);
        mpfr_sqr(raw(r.hi_), raw(lo_), MPFR_RNDU);
    } else {
        const Real m = magnitude();
        mpfr_set_zero(raw(r.lo_), 1);
        mpfr_sqr(raw(r.hi_), raw(m), MPFR_RNDU);
    }
    return r;
}

Interval Interval::sqrt() const
{
    if (mpfr_sgn(raw(lo_)) < 0)
        throw NumericalError("square root of an interval reaching below zero: " + to_string());
    Interval r;
    mpfr_sqrt(raw(r.lo_), raw(lo_), MPFR_RNDD);
    mpfr_sqrt(raw(r.hi_), raw(hi_), MPFR_RNDU);
    return r;
}

Interval Interval::pow(unsigned exponent) const
{
    if (exponent == 0)
        return Interval(1L);
    if (exponent % 2 == 1) {
        Interval r;
        mpfr_pow_ui(raw(r.lo_), raw(lo_), exponent, MPFR_RNDD);
        mpfr_pow_ui(raw(r.hi_), raw(hi_), exponent, MPFR_RNDU);
        return r;
    }
    // Even powers are monotone in |x|.
    Interval r;
    if (mpfr_sgn(raw(lo_)) >= 0) {
        mpfr_pow_ui(raw(r.lo_), raw(lo_), exponent, MPFR_RNDD);
        mpfr_pow_ui(raw(r.hi_), raw(hi_), exponent, MPFR_RNDU);
    } else if (mpfr_sgn(raw(hi_)) <= 0) {
        mpfr_pow_ui(raw(r.lo_), raw(hi_), exponent, MPFR_RNDD);
        mpfr_pow_ui(raw(r.hi_), raw(lo_), exponent, MPFR_RNDU);
    } else {
        const Real m = magnitude();
        mpfr_set_zero(raw(r.lo_), 1);
        mpfr_pow_ui(raw(r.hi_), raw(m), exponent, MPFR_RNDU);
    }
    return r;
}

Interval& Interval::operator+=(const Interval& rhs)
{
    mpfr_add(raw(lo_), raw(lo_), raw(rhs.lo_), MPFR_RNDD);
    mpfr_add(raw(hi_), raw(hi_), raw(rhs.hi_), MPFR_RNDU);
    return *this;
}

Interval& Interval::operator-=(const Interval& rhs)
{
    Interval r;
    mpfr_sub(raw(r.lo_), raw(lo_), raw(rhs.hi_), MPFR_RNDD);
    mpfr_sub(raw(r.hi_), raw(hi_), raw(rhs.lo_), MPFR_RNDU);
    return *this = r;
}

Interval& Interval::operator*=(const Interval& rhs)
{
    Real down = fresh();
    Real up = fresh();
    Interval r;
    bool first = true;
    for (const Real* a : {&lo_, &hi_}) {
        for (const Real* b : {&rhs.lo_, &rhs.hi_}) {
            mpfr_mul(raw(down), raw(*a), raw(*b), MPFR_RNDD);
            mpfr_mul(raw(up), raw(*a), raw(*b), MPFR_RNDU);
            if (first || mpfr_cmp(raw(down), raw(r.lo_)) < 0)
                mpfr_set(raw(r.lo_), raw(down), MPFR_RNDD);
            if (first || mpfr_cmp(raw(up), raw(r.hi_)) > 0)
                mpfr_set(raw(r.hi_), raw(up), MPFR_RNDU);
            first = false;
        }
    }
    return *this = r;
}

Interval& Interval::operator/=(const Interval& rhs)
{
    if (rhs.contains_zero())
        throw NumericalError("division by an interval containing zero: " + rhs.to_string());
    Interval reciprocal;
    mpfr_ui_div(raw(reciprocal.lo_), 1, raw(rhs.hi_), MPFR_RNDD);
    mpfr_ui_div(raw(reciprocal.hi_), 1, raw(rhs.lo_), MPFR_RNDU);
    return *this *= reciprocal;
}

Interval operator-(const Interval& a)
{
    Interval r;
    mpfr_neg(raw(r.lo_), raw(a.hi_), MPFR_RNDD);
    mpfr_neg(raw(r.hi_), raw(a.lo_), MPFR_RNDU);
    return r;
}

std::string Interval::to_string(int digits) const
{
    std::ostringstream out;
    out.precision(digits);
    out << '[' << lo_ << ", " << hi_ << ']';
    return out.str();
}

} // namespace cage_spectra
