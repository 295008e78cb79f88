#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cage_spectra {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,  // a verification failed, or a computation could not finish
    exit_usage = 2,    // bad command line, unreadable input, parameters out of domain
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "4..20", "7,9,11" or a mix such as "3,5..7". A descending range
/// "a..b" with a > b is empty. Throws DomainError on malformed text.
std::vector<int> parse_int_list(const std::string& text);

} // namespace cage_spectra
