#include "cage_spectra/intersection.hpp"

#include "cage_spectra/errors.hpp"
#include "cage_spectra/polynomial.hpp"
#include "cage_spectra/precision.hpp"

namespace cage_spectra {

IntersectionMatrix::IntersectionMatrix(int k, int diameter) : k_(k), diameter_(diameter)
{
    if (k < 3)
        throw DomainError(DomainErrorKind::degree_too_small, "k = " + std::to_string(k) + " (need k >= 3)");
    if (diameter < 2)
        throw DomainError(DomainErrorKind::girth_too_small, "D = " + std::to_string(diameter) + " (need D >= 2)");
    const auto size = static_cast<std::size_t>(diameter) + 1;
    const auto last = static_cast<std::size_t>(diameter);
    entries_ = IntMatrix(size, size);
    entries_(0, 1) = 1;
    entries_(1, 0) = k;
    for (std::size_t i = 1; i < last; ++i)
        entries_(i, i + 1) = 1;
    for (std::size_t i = 2; i <= last; ++i)
        entries_(i, i - 1) = k - 1;
    entries_(last - 1, last) = k;
}

IntersectionMatrix build_bd(int k, int diameter)
{
    return IntersectionMatrix(k, diameter);
}

mpz_class bd_entry00(const IntersectionMatrix& b, unsigned q)
{
    // Row vector e_0^T B^q, built one multiplication at a time.
    const auto& m = b.entries();
    const auto size = m.rows();
    std::vector<mpz_class> row(size);
    row[0] = 1;
    std::vector<mpz_class> next(size);
    for (unsigned step = 0; step < q; ++step) {
        for (std::size_t j = 0; j < size; ++j) {
            next[j] = 0;
            for (std::size_t i = 0; i < size; ++i)
                if (row[i] != 0 && m(i, j) != 0)
                    next[j] += row[i] * m(i, j);
        }
        row.swap(next);
    }
    return row[0];
}

TraceIdentityReport trace_identity_check(const Graph& g, int k, int d)
{
    TraceIdentityReport report;
    if (g.regular_degree() != k)
        report.reason = "graph is not " + std::to_string(k) + "-regular";
    else if (!is_bipartite(g))
        report.reason = "graph is not bipartite";
    else if (girth(g) != 2 * d)
        report.reason = "girth is not " + std::to_string(2 * d);
    if (!report.reason.empty()) {
        report.refused = true;
        return report;
    }

    const auto b = build_bd(k, d);
    const IntMatrix a = g.adjacency_matrix();
    const mpz_class n = g.order();
    IntMatrix power = IntMatrix::identity(a.rows());
    for (unsigned q = 0; q < static_cast<unsigned>(2 * d); ++q) {
        if (q > 0)
            power = power * a;
        TraceRow row{q, power.trace(), n * bd_entry00(b, q)};
        if (row.trace != row.expected && !report.first_failure)
            report.first_failure = q;
        report.rows.push_back(std::move(row));
    }
    return report;
}

MinimalPolynomialReport minimal_polynomial_check(int k, int diameter)
{
    const auto b = build_bd(k, diameter);
    const auto& m = b.entries();
    const auto size = m.rows();
    const IntMatrix quadratic = m * m - mpz_class(k) * mpz_class(k) * IntMatrix::identity(size);
    const IntMatrix dickson = evaluate(dickson_family(Family::H, k, diameter - 1), m);
    MinimalPolynomialReport report;
    report.residual = (quadratic * dickson).max_abs_entry();
    report.quadratic_factor_vanishes = quadratic.is_zero();
    report.dickson_factor_vanishes = dickson.is_zero();
    return report;
}

namespace {

template <typename T>
T convert(const mpz_class& z);

template <>
double convert<double>(const mpz_class& z)
{
    return z.get_d();
}

template <>
Real convert<Real>(const mpz_class& z)
{
    return to_real(z);
}

template <typename T>
T ld_entry00_impl(int k, int d, const T& theta)
{
    const auto h = dickson_family(Family::H, k, d - 1);
    const auto& c = h.coefficients();
    // Synthetic division of H(x) - H(theta) by (x - theta); the remainder is
    // zero by construction and dropped.
    const std::size_t n = c.size() - 1;
    std::vector<T> quotient(n, T(0));
    T carry = convert<T>(c[n]);
    for (std::size_t i = n; i-- > 0;) {
        quotient[i] = carry;
        carry = carry * theta + convert<T>(c[i]);
    }
    // Multiply by x^2 - k^2.
    const T k2 = T(k) * T(k);
    std::vector<T> l(n + 2, T(0));
    for (std::size_t i = 0; i < n; ++i) {
        l[i + 2] += quotient[i];
        l[i] -= k2 * quotient[i];
    }

    // (L(B))_{0,0} = e_0^T L(B) e_0 via Horner on the vector L(B) e_0.
    const auto b = build_bd(k, d);
    const auto& m = b.entries();
    const std::size_t size = m.rows();
    std::vector<T> acc(size, T(0));
    std::vector<T> next(size, T(0));
    for (std::size_t p = l.size(); p-- > 0;) {
        for (std::size_t i = 0; i < size; ++i) {
            T sum = T(0);
            for (std::size_t j = 0; j < size; ++j)
                if (m(i, j) != 0)
                    sum += convert<T>(m(i, j)) * acc[j];
            next[i] = sum;
        }
        next[0] += l[p];
        acc.swap(next);
    }
    return acc[0];
}

} // namespace

double ld_entry00(int k, int d, double theta)
{
    if (d > 9) {
        configure_precision();
        return static_cast<double>(ld_entry00_impl<Real>(k, d, Real(theta)));
    }
    return ld_entry00_impl<double>(k, d, theta);
}

double ld_entry00_closed_form(int k, int d, double theta)
{
    if (d < 2)
        throw DomainError(DomainErrorKind::girth_too_small, "d = " + std::to_string(d) + " (need d >= 2)");
    const double h = dickson_family(Family::H, k, d - 2).evaluate(theta);
    return -static_cast<double>(k) * (k - 1) * h;
}

} // namespace cage_spectra
