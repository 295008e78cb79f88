#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cage_spectra {

/// Named reasons a parameter tuple falls outside the supported regime.
enum class DomainErrorKind {
    degree_too_small,     // k below the smallest supported degree
    girth_too_small,      // g (or d) below the supported range
    odd_excess,           // e must be even for the bipartite cage regime
    excess_out_of_range,  // e < 2 where a nontrivial antipodal partition is needed
    excess_exceeds_bound, // e > k - 2
    even_diameter,        // d must be odd for antipodal bipartite cages
    bad_epsilon,          // epsilon not in {1, -e/2}
    bad_index,            // polynomial family index out of range
    bad_argument,         // any other out-of-domain argument
};

std::string_view to_string(DomainErrorKind kind);

class DomainError : public std::invalid_argument {
public:
    DomainError(DomainErrorKind kind, const std::string& what)
        : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    DomainErrorKind kind() const noexcept { return kind_; }

private:
    DomainErrorKind kind_;
};

/// Raised when a certified computation cannot reach a verdict, e.g. a
/// denominator enclosure straddles zero.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An invariant that must hold by construction was violated.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cage_spectra
