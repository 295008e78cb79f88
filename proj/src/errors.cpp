#include "cage_spectra/errors.hpp"

namespace cage_spectra {

std::string_view to_string(DomainErrorKind kind)
{
    switch (kind) {
    case DomainErrorKind::degree_too_small:
        return "degree-too-small";
    case DomainErrorKind::girth_too_small:
        return "girth-too-small";
    case DomainErrorKind::odd_excess:
        return "odd-excess";
    case DomainErrorKind::excess_out_of_range:
        return "excess-out-of-range";
    case DomainErrorKind::excess_exceeds_bound:
        return "excess-exceeds-k-minus-2";
    case DomainErrorKind::even_diameter:
        return "even-d";
    case DomainErrorKind::bad_epsilon:
        return "bad-epsilon";
    case DomainErrorKind::bad_index:
        return "bad-index";
    case DomainErrorKind::bad_argument:
        return "bad-argument";
    }
    return "unknown";
}

} // namespace cage_spectra
