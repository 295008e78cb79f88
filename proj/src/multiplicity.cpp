#include "cage_spectra/multiplicity.hpp"

#include "cage_spectra/errors.hpp"
#include "cage_spectra/polynomial.hpp"
#include "cage_spectra/structure.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>

namespace cage_spectra {

mpz_class cage_order(int k, int d, int e)
{
    return moore_bound(k, 2 * d) + e;
}

namespace {

void check_epsilon(int e, int epsilon)
{
    if (epsilon != 1 && epsilon != -e / 2)
        throw DomainError(DomainErrorKind::bad_epsilon,
            "epsilon = " + std::to_string(epsilon) + " is neither 1 nor -e/2 = " + std::to_string(-e / 2));
}

// C = 2 epsilon (2 epsilon + e/2 - 1), an integer since e is even.
long prefactor(int e, int epsilon)
{
    return 2L * epsilon * (2L * epsilon + e / 2 - 1);
}

struct Pieces {
    IntPolynomial lower;       // H_{d-2}
    IntPolynomial derivative;  // H'_{d-1}
};

Pieces pieces(int k, int d)
{
    const auto seq = dickson_sequence(Family::H, k, d - 1);
    return {seq[static_cast<std::size_t>(d - 2)], cage_spectra::derivative(seq[static_cast<std::size_t>(d - 1)])};
}

template <typename T>
T to_t(const mpz_class& z);

template <>
double to_t<double>(const mpz_class& z)
{
    return z.get_d();
}

template <>
Real to_t<Real>(const mpz_class& z)
{
    return to_real(z);
}

template <typename T>
T closed_form(int k, int d, int e, int epsilon, const T& theta)
{
    validate_parameters(k, d, e);
    check_epsilon(e, epsilon);
    const auto p = pieces(k, d);
    const T slope = p.derivative.evaluate(theta);
    const T gap = T(k) * T(k) - theta * theta;
    using std::abs;
    if (abs(slope) < conditioning_floor || abs(gap) < conditioning_floor)
        throw NumericalError("multiplicity formula is ill-conditioned at theta = " + std::to_string(static_cast<double>(theta)));
    const T numerator = to_t<T>(cage_order(k, d, e)) * T(e) * T(k) * T(k - 1) * p.lower.evaluate(theta);
    return numerator / (T(prefactor(e, epsilon)) * slope * gap);
}

} // namespace

double multiplicity_closed_form(int k, int d, int e, int epsilon, double theta)
{
    if (d > 9) {
        configure_precision();
        return static_cast<double>(closed_form<Real>(k, d, e, epsilon, Real(theta)));
    }
    return closed_form<double>(k, d, e, epsilon, theta);
}

Real multiplicity_closed_form(int k, int d, int e, int epsilon, const Real& theta)
{
    return closed_form<Real>(k, d, e, epsilon, theta);
}

Interval multiplicity_enclosure(int k, int d, int e, int epsilon, const Interval& theta)
{
    validate_parameters(k, d, e);
    check_epsilon(e, epsilon);
    const auto p = pieces(k, d);
    const Interval kk(static_cast<long>(k) * k);
    const Interval numerator = Interval(cage_order(k, d, e)) * Interval(static_cast<long>(e) * k * (k - 1))
        * p.lower.evaluate(theta);
    const Interval denominator
        = Interval(prefactor(e, epsilon)) * p.derivative.evaluate(theta) * (kk - theta.square());
    return numerator / denominator;
}

namespace {

template <typename T>
T f_impl(int k, const T& z)
{
    const T four_s2 = T(4 * (k - 1));
    return four_s2 * (1 - z * z) / (T(k) * T(k) - four_s2 * z * z);
}

template <typename T>
T g_impl(Weight which, int k, int d, int e, const T& z)
{
    using std::pow;
    using std::sqrt;
    using boost::multiprecision::pow;
    using boost::multiprecision::sqrt;
    const T s = sqrt(T(k - 1));
    const T scale = which == Weight::g1 ? T(1) : T(e / 2);
    const T c = scale * pow(s, T(1 - d));
    const T radicand = 1 - c * c * (1 - z * z);
    if (!(radicand > 0))
        throw DomainError(DomainErrorKind::excess_exceeds_bound, "weight radicand is not positive; parameters outside the regime");
    const T r = sqrt(radicand);
    const T lin = which == Weight::g2 ? T(-c * z) : T(c * z);
    return T(k) * T(k - 1) * (r + lin) / (T(d) * r + lin);
}

void check_unit(double z)
{
    if (!(std::abs(z) < 1.0))
        throw DomainError(DomainErrorKind::bad_argument, "weight argument z must satisfy |z| < 1");
}

void check_weight_parameters(Weight which, int k, int d, int e)
{
    if (k < 3)
        throw DomainError(DomainErrorKind::degree_too_small, "k = " + std::to_string(k) + " (need k >= 3)");
    if (d < 2)
        throw DomainError(DomainErrorKind::girth_too_small, "d = " + std::to_string(d) + " (need d >= 2)");
    if (which != Weight::g1 && (e < 2 || e % 2 != 0))
        throw DomainError(e % 2 != 0 ? DomainErrorKind::odd_excess : DomainErrorKind::excess_out_of_range,
            "g2 and g3 need an even excess e >= 2");
}

template <typename T>
T trig_impl(int k, int d, int e, const RootRecord& record, const T& z)
{
    const T n = to_t<T>(cage_order(k, d, e));
    const T s2 = T(k - 1);
    const T half = T(e / 2);
    const T f = f_impl<T>(k, z);
    const int expected_eta = ((d + record.index) % 2 == 0) ? record.epsilon : -record.epsilon;
    if (record.eta != expected_eta)
        throw InternalError("root record eta does not match epsilon (-1)^(d+i)");
    if (record.epsilon == 1)
        return n * T(e) / (4 * s2 * (half + 1)) * f * g_impl<T>(Weight::g1, k, d, e, T(record.eta * z));
    if (record.epsilon != -e / 2)
        throw InternalError("root record epsilon is neither 1 nor -e/2");
    const Weight which = record.index % 2 == 1 ? Weight::g2 : Weight::g3;
    // g2 belongs to negative eta, g3 to positive.
    if ((which == Weight::g2) != (record.eta < 0))
        throw InternalError("weight branch disagrees with the sign of eta");
    return n / (2 * s2 * (half + 1)) * f * g_impl<T>(which, k, d, e, z);
}

} // namespace

double f_weight(int k, double z)
{
    if (k < 3)
        throw DomainError(DomainErrorKind::degree_too_small, "k = " + std::to_string(k) + " (need k >= 3)");
    check_unit(z);
    return f_impl<double>(k, z);
}

double g_weight(Weight which, int k, int d, int e, double z)
{
    check_weight_parameters(which, k, d, e);
    check_unit(z);
    return g_impl<double>(which, k, d, e, z);
}

double multiplicity_trig(int k, int d, int e, const RootRecord& record)
{
    validate_parameters(k, d, e);
    const Real z = boost::multiprecision::cos(record.phi);
    if (d > 9)
        return static_cast<double>(trig_impl<Real>(k, d, e, record, z));
    return trig_impl<double>(k, d, e, record, static_cast<double>(z));
}

} // namespace cage_spectra
