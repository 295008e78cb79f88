#pragma once

#include "cage_spectra/precision.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cage_spectra {

/// Closed interval [lower, upper] of MPFR floats at the working precision.
///
/// Every operation rounds the lower endpoint toward -inf and the upper
/// endpoint toward +inf, so the result always contains the exact value of
/// the operation applied to any points of the operands.
class Interval {
public:
    Interval();
    explicit Interval(long value);
    explicit Interval(const mpz_class& value);
    explicit Interval(const mpq_class& value);
    Interval(const mpq_class& lower, const mpq_class& upper);

    const Real& lower() const { return lo_; }
    const Real& upper() const { return hi_; }

    Real midpoint() const;
    Real width() const;
    /// Half the width, rounded up.
    Real radius() const;

    bool contains(const mpz_class& value) const;
    bool contains_zero() const;
    bool strictly_positive() const;
    bool strictly_negative() const;

    /// Integers inside the interval, as [first, last]; empty when none.
    std::optional<std::pair<mpz_class, mpz_class>> integer_range() const;

    /// Largest absolute value of any point, rounded up.
    Real magnitude() const;

    Interval square() const;
    Interval sqrt() const;
    Interval pow(unsigned exponent) const;

    Interval& operator+=(const Interval& rhs);
    Interval& operator-=(const Interval& rhs);
    Interval& operator*=(const Interval& rhs);
    /// Throws NumericalError when the divisor contains zero.
    Interval& operator/=(const Interval& rhs);

    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
    friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
    friend Interval operator-(const Interval& a);

    std::string to_string(int digits = 20) const;

private:
    Real lo_;
    Real hi_;
};

} // namespace cage_spectra
