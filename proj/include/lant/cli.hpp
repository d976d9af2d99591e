#pragma once

#include <iosfwd>
#include <string>

#include "lant/core.hpp"

namespace lant::cli {

/// Parses a candidate specification: "primes", "naturals", an inline
/// comma list, or @file with one integer per line. Values are sorted;
/// duplicates are an error.
CandidatePrimeVector parse_candidates(const std::string& spec, Index n);

/// Entry point behind the lant executable. Returns 0 on success, 1 on a
/// domain error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lant::cli
