#pragma once

#include "cage_spectra/feasibility.hpp"
#include "cage_spectra/structure.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cage_spectra {

/// Digits kept when a float is written to any report.
inline constexpr int report_digits = 12;

/// x rounded to 12 significant digits, so that its shortest decimal form
/// has at most that many digits.
double round_significant(double x, int digits = report_digits);
std::string format_float(double x, int digits = report_digits);

/// Integer as a JSON number when it fits in 64 bits, else as a string.
nlohmann::json json_integer(const mpz_class& z);

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

nlohmann::json to_json(const FeasibilityReport& report);
std::string to_text(const FeasibilityReport& report);

inline constexpr const char* feasibility_csv_header = "k,d,e,n,verdict,gap_lo,gap_hi,max_integrality_deviation";
std::string to_csv_row(const FeasibilityReport& report);

/// One graph run through the structural check, both matrix identities and
/// the spectral cross-check.
struct VerifyOutcome {
    std::string source;
    int k = 0;
    int d = 0;
    int e = 0;
    StructuralVerdict structural;
    IdentityCheck distance_identity;  // F_d(A) = k A_d - A A_{d+1}
    IdentityCheck ones_identity;      // k J = (A + k I)(H_{d-1}(A) + A_{d+1})
    SpectralCrosscheck spectral;

    bool passed() const
    {
        return structural.passed() && distance_identity.holds() && ones_identity.holds() && spectral.ok;
    }
};

VerifyOutcome verify_graph(const Graph& g, std::string source, int k, int d, int e);

nlohmann::json to_json(const VerifyOutcome& outcome);
std::string to_text(const VerifyOutcome& outcome);

inline constexpr const char* verify_csv_header
    = "source,k,d,e,structural,distance_identity,ones_identity,spectral,verdict";
std::string to_csv_row(const VerifyOutcome& outcome);

} // namespace cage_spectra
