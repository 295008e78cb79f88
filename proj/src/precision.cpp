#include "cage_spectra/precision.hpp"

#include "cage_spectra/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

namespace cage_spectra {

unsigned parse_precision_bits(const char* text)
{
    if (text == nullptr || *text == '\0')
        return default_precision_bits;
    std::string s(text);
    std::size_t used = 0;
    unsigned long bits = 0;
    try {
        bits = std::stoul(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || bits < 64 || bits > 65536)
        throw DomainError(DomainErrorKind::bad_argument,
            std::string(precision_env_var) + " must be an integer number of bits in [64, 65536], got '" + s
                + "'");
    return static_cast<unsigned>(bits);
}

unsigned working_precision_bits()
{
    static const unsigned bits = parse_precision_bits(std::getenv(precision_env_var));
    return bits;
}

void configure_precision()
{
    static std::once_flag flag;
    std::call_once(flag, [] {
        const auto bits = working_precision_bits();
        const auto digits10 = static_cast<unsigned>(std::ceil(bits * std::log10(2.0)));
        Real::default_precision(digits10);
    });
}

Real to_real(const mpq_class& q)
{
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real to_real(const mpz_class& z)
{
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

mpq_class to_rational(const Real& x)
{
    if (!boost::multiprecision::isfinite(x))
        throw NumericalError("cannot convert a non-finite value to a rational");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x.backend().data());
    return q;
}

Real real_pi()
{
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

} // namespace cage_spectra
