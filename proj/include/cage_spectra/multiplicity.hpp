#pragma once

#include "cage_spectra/interval.hpp"
#include "cage_spectra/precision.hpp"
#include "cage_spectra/roots.hpp"

#include <gmpxx.h>

namespace cage_spectra {

/// n = M(k, 2d) + e.
mpz_class cage_order(int k, int d, int e);

/// Below this, |H'_{d-1}(theta)| or |k^2 - theta^2| counts as ill-conditioned.
inline constexpr double conditioning_floor = 1e-12;

/// Multiplicity of a root theta of H_{d-1} - epsilon in an antipodal cage
/// of excess e:
///
///   m = n e k (k-1) H_{d-2}(theta) / (C H'_{d-1}(theta) (k^2 - theta^2))
///
/// with C = 2 epsilon (2 epsilon + e/2 - 1). Evaluated in binary64, or in
/// extended precision when d > 9. Throws NumericalError when ill-conditioned.
double multiplicity_closed_form(int k, int d, int e, int epsilon, double theta);
Real multiplicity_closed_form(int k, int d, int e, int epsilon, const Real& theta);

/// The same formula over an interval of theta with outward rounding.
Interval multiplicity_enclosure(int k, int d, int e, int epsilon, const Interval& theta);

/// f(z) = 4 s^2 (1 - z^2) / (k^2 - 4 s^2 z^2). Requires |z| < 1.
double f_weight(int k, double z);

enum class Weight { g1, g2, g3 };

/// g1(z) = k(k-1)(r + c z) / (d r + c z), r = sqrt(1 - c^2 (1 - z^2)),
/// with c = s^(1-d). g2 and g3 use c = (e/2) s^(1-d), g2 with -c z and g3
/// with +c z. Requires |z| < 1; a non-positive radicand is a DomainError.
double g_weight(Weight which, int k, int d, int e, double z);

/// Multiplicity from the angle of the record:
///   epsilon = 1:     n e / (4 s^2 (e/2 + 1)) f(z) g1(eta z)
///   epsilon = -e/2:  n / (2 s^2 (e/2 + 1)) f(z) g2(z)  (i odd)
///                    n / (2 s^2 (e/2 + 1)) f(z) g3(z)  (i even)
/// where z = cos(phi). A record whose eta disagrees with the branch is an
/// InternalError.
double multiplicity_trig(int k, int d, int e, const RootRecord& record);

} // namespace cage_spectra
