#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace cage_spectra {

/// Variable-precision binary float used for extended-precision evaluations.
using Real = boost::multiprecision::mpfr_float;

/// Name of the environment variable selecting the working precision in bits.
inline constexpr const char* precision_env_var = "CAGE_SPECTRA_PRECISION";
inline constexpr unsigned default_precision_bits = 128;

/// Parses a precision setting; throws DomainError unless it is an integer in
/// [64, 65536].
unsigned parse_precision_bits(const char* text);

/// Working precision in bits. Read from the environment once; later calls
/// return the cached value.
unsigned working_precision_bits();

/// Applies the working precision to `Real` defaults. Idempotent and safe to
/// call from several threads; must run before `Real` values are created.
void configure_precision();

Real to_real(const mpq_class& q);
Real to_real(const mpz_class& z);
mpq_class to_rational(const Real& x);

/// pi at the working precision.
Real real_pi();

} // namespace cage_spectra
