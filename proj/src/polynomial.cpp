#include "cage_spectra/polynomial.hpp"

#include "cage_spectra/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cage_spectra {

ExactRational make_rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw DomainError(DomainErrorKind::bad_argument, "rational with zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c)
{
    return IntPolynomial({c});
}

IntPolynomial IntPolynomial::identity()
{
    return IntPolynomial({0, 1});
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

mpz_class IntPolynomial::coefficient(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPolynomial::leading_coefficient() const
{
    return coeffs_.empty() ? mpz_class(0) : coeffs_.back();
}

namespace {

template <typename T, typename Convert>
T horner(const std::vector<mpz_class>& coeffs, const T& x, T zero, Convert convert)
{
    if (coeffs.empty())
        return zero;
    T acc = convert(coeffs.back());
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
        acc *= x;
        acc += convert(*it);
    }
    return acc;
}

} // namespace

double IntPolynomial::evaluate(double x) const
{
    return horner(coeffs_, x, 0.0, [](const mpz_class& c) { return c.get_d(); });
}

Real IntPolynomial::evaluate(const Real& x) const
{
    configure_precision();
    return horner(coeffs_, x, Real(0), [](const mpz_class& c) { return to_real(c); });
}

Interval IntPolynomial::evaluate(const Interval& x) const
{
    return horner(coeffs_, x, Interval(), [](const mpz_class& c) { return Interval(c); });
}

IntPolynomial IntPolynomial::reflected() const
{
    IntPolynomial r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2)
        r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        mpz_class magnitude = abs(c);
        if (first) {
            if (c < 0)
                out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << magnitude;
            continue;
        }
        if (magnitude != 1)
            out << magnitude << '*';
        out << 'x';
        if (i > 1)
            out << '^' << i;
    }
    return out.str();
}

ExactRational eval_rational(const IntPolynomial& p, const ExactRational& x)
{
    const auto& c = p.coefficients();
    ExactRational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int sign_at(const IntPolynomial& p, const ExactRational& x)
{
    // With x = a/b, b > 0: sign p(x) = sign of sum c_i a^i b^(n-i).
    const auto& c = p.coefficients();
    if (c.empty())
        return 0;
    const mpz_class& a = x.get_num();
    const mpz_class& b = x.get_den();
    mpz_class acc = c.back();
    mpz_class b_power = 1;
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
        b_power *= b;
        acc *= a;
        acc += *it * b_power;
    }
    return sgn(acc);
}

IntPolynomial derivative(const IntPolynomial& p)
{
    const auto& c = p.coefficients();
    if (c.size() <= 1)
        return {};
    std::vector<mpz_class> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = c[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(out));
}

char family_letter(Family family)
{
    switch (family) {
    case Family::G:
        return 'G';
    case Family::F:
        return 'F';
    case Family::H:
        return 'H';
    }
    return '?';
}

Family parse_family(const std::string& text)
{
    if (text.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(text[0]))) {
        case 'G':
            return Family::G;
        case 'F':
            return Family::F;
        case 'H':
            return Family::H;
        default:
            break;
        }
    }
    throw DomainError(DomainErrorKind::bad_argument, "unknown polynomial family '" + text + "' (expected G, F or H)");
}

std::vector<IntPolynomial> dickson_sequence(Family family, int k, int max_index)
{
    if (k < 3)
        throw DomainError(DomainErrorKind::degree_too_small, "k = " + std::to_string(k) + " (need k >= 3)");
    if (max_index < 0)
        throw DomainError(DomainErrorKind::bad_index, "index " + std::to_string(max_index) + " (need i >= 0)");

    std::vector<IntPolynomial> seq;
    seq.reserve(static_cast<std::size_t>(max_index) + 1);
    const IntPolynomial x = IntPolynomial::identity();
    switch (family) {
    case Family::G:
        seq = {IntPolynomial::constant(1), IntPolynomial({1, 1})};
        break;
    case Family::F:
        seq = {IntPolynomial::constant(1), x, IntPolynomial({-k, 0, 1})};
        break;
    case Family::H:
        seq = {IntPolynomial::constant(1), x};
        break;
    }
    const mpz_class shift = k - 1;
    while (static_cast<int>(seq.size()) <= max_index) {
        const auto n = seq.size();
        seq.push_back(x * seq[n - 1] - shift * seq[n - 2]);
    }
    seq.resize(static_cast<std::size_t>(max_index) + 1);
    return seq;
}

IntPolynomial dickson_family(Family family, int k, int i)
{
    return dickson_sequence(family, k, i).back();
}

double h_closed_form(int k, int d, double phi)
{
    if (k < 3)
        throw DomainError(DomainErrorKind::degree_too_small, "k = " + std::to_string(k) + " (need k >= 3)");
    if (d < 2)
        throw DomainError(DomainErrorKind::girth_too_small, "d = " + std::to_string(d) + " (need d >= 2)");
    if (!(phi > 0.0 && phi < std::numbers::pi))
        throw DomainError(DomainErrorKind::bad_argument, "phi must lie strictly inside (0, pi)");
    const double s = std::sqrt(static_cast<double>(k - 1));
    return std::pow(-s, d - 1) * std::sin(d * phi) / std::sin(phi);
}

std::vector<double> h_roots_closed_form(int k, int d)
{
    if (k < 3)
        throw DomainError(DomainErrorKind::degree_too_small, "k = " + std::to_string(k) + " (need k >= 3)");
    if (d < 2)
        throw DomainError(DomainErrorKind::girth_too_small, "d = " + std::to_string(d) + " (need d >= 2)");
    const double s = std::sqrt(static_cast<double>(k - 1));
    std::vector<double> roots;
    for (int i = 1; i < d; ++i)
        roots.push_back(2.0 * s * std::cos(i * std::numbers::pi / d));
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace cage_spectra
