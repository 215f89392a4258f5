#pragma once

// Self-check entry point: lattice laws against set-level enumeration, and
// invariant-factor canonicalization against exhaustive order censuses.

#include <string>
#include <vector>

#include "brpinch/ints.hpp"
#include "brpinch/oracle.hpp"

namespace brpinch::cli {

struct SelfcheckOutcome {
    bool pass = true;
    std::vector<std::string> failures;
    Int lattice_pairs = 0;
    int census_samples = 0;
};

/// Cross-validates the gcd/lcm subgroup model and the invariant-factor
/// merge against the enumeration oracle. Deterministic (fixed seed).
SelfcheckOutcome run_selfcheck(Int max_order, int census_samples, const oracle::Caps& caps);

}  // namespace brpinch::cli
