#pragma once

#include "cage_spectra/polynomial.hpp"
#include "cage_spectra/precision.hpp"

#include <gmpxx.h>

#include <vector>

namespace cage_spectra {

/// Throws a named DomainError unless e is even, d is odd and >= 3, and
/// 2 <= e <= k - 2. Checked in that order.
void validate_parameters(int k, int d, int e);

/// A root theta of H_{d-1}(x) - epsilon written as theta = -2 s cos(phi),
/// phi = (i pi - alpha) / d, s = sqrt(k - 1).
struct RootRecord {
    int index = 0;    // i, 1..d-1, in ascending order of theta
    int epsilon = 0;  // 1 or -e/2
    int eta = 0;      // epsilon * (-1)^(d+i)
    Real theta;       // midpoint of the bracket
    Real phi;
    Real alpha;
    mpq_class lower;  // exact bracket containing theta
    mpq_class upper;

    bool alpha_sign_ok = false;   // sign(alpha) = sign(eta)
    bool alpha_bound_ok = false;  // |alpha| < |eta| s^(1-d) min(phi, pi - phi)

    double theta_value() const { return static_cast<double>(theta); }
};

/// Bracket width below which isolation stops: 2^-60.
mpq_class isolation_width();

/// H_{d-1}(x) - epsilon, exact.
IntPolynomial root_polynomial(int k, int d, int epsilon);

/// The open phi-interval that holds phi_i for a root with the given eta:
/// (i pi / (d + c), i pi / d) for eta > 0 and (i pi / d, i pi / (d - c)) for
/// eta < 0, where c = |eta| s^(1-d).
std::pair<Real, Real> phi_seed(int k, int d, int i, int eta);

/// All d-1 roots of H_{d-1}(x) - epsilon, epsilon in {1, -e/2}. Each root is
/// located by exact rational bisection on the integer polynomial, starting
/// from the image of its phi seed interval. A seed without a sign change is
/// an InternalError.
std::vector<RootRecord> isolate_roots(int k, int d, int e, int epsilon);

/// Bisects [lower, upper] (which must carry a sign change of p) until its
/// width is below `width`. Collapses to a point on an exact rational root.
void refine_bracket(const IntPolynomial& p, mpq_class& lower, mpq_class& upper, const mpq_class& width);

/// sin(alpha) - eta s^(1-d) sin((i pi - alpha) / d). Rejects eta = 0.
double transcendental_residual(const RootRecord& record, int k, int d);

} // namespace cage_spectra
