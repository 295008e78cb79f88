#pragma once

#include "cage_spectra/interval.hpp"
#include "cage_spectra/precision.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cage_spectra {

/// Exact rational, always kept in canonical form (reduced, positive
/// denominator) by GMP.
using ExactRational = mpq_class;

/// Builds num/den in canonical form; throws DomainError when den == 0.
ExactRational make_rational(const mpz_class& num, const mpz_class& den);

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored constant term first. The zero polynomial has no stored
/// coefficients and reports degree 0.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);

    static IntPolynomial constant(const mpz_class& c);
    /// The polynomial x.
    static IntPolynomial identity();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    mpz_class coefficient(int i) const;
    mpz_class leading_coefficient() const;

    double evaluate(double x) const;
    Real evaluate(const Real& x) const;
    Interval evaluate(const Interval& x) const;

    /// Same polynomial with x replaced by -x.
    IntPolynomial reflected() const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const mpz_class& scalar);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
    friend IntPolynomial operator*(const mpz_class& s, IntPolynomial a) { return a *= s; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form such as "x^3 - 6*x".
    std::string to_string() const;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

/// Exact Horner evaluation at a rational point.
ExactRational eval_rational(const IntPolynomial& p, const ExactRational& x);

/// Sign (-1, 0, +1) of p(x), computed exactly with integer arithmetic only.
int sign_at(const IntPolynomial& p, const ExactRational& x);

IntPolynomial derivative(const IntPolynomial& p);

/// The three families sharing the three-term recurrence
/// P_{i+1}(x) = x P_i(x) - (k-1) P_{i-1}(x).
///
///   G_0 = 1, G_1 = x + 1                  (recurrence from i = 1)
///   F_0 = 1, F_1 = x, F_2 = x^2 - k       (recurrence from i = 2)
///   H_0 = 1, H_1 = x                      (recurrence from i = 1)
///
/// For the H family the negative indices extend as H_{-1} = 0 and
/// H_{-2} = -1/(k-1); those are not constructible here since no formula in
/// this library evaluates them.
enum class Family { G, F, H };

char family_letter(Family family);
/// Parses "G", "F" or "H" (case-insensitive); throws DomainError otherwise.
Family parse_family(const std::string& text);

/// Member i of the family for degree parameter k. Requires k >= 3, i >= 0.
IntPolynomial dickson_family(Family family, int k, int i);

/// Members 0..max_index, built with one pass of the recurrence.
std::vector<IntPolynomial> dickson_sequence(Family family, int k, int max_index);

/// (-s)^(d-1) sin(d phi) / sin(phi) with s = sqrt(k-1); this equals
/// H_{d-1}(-2 s cos phi). Requires phi strictly inside (0, pi).
double h_closed_form(int k, int d, double phi);

/// The d-1 roots 2 sqrt(k-1) cos(i pi / d), i = 1..d-1, in ascending order.
std::vector<double> h_roots_closed_form(int k, int d);

} // namespace cage_spectra
