#pragma once

#include <cstdint>

namespace brpinch {

/// Integer type for all orders, degrees and exponent bounds. Operations
/// that could leave the representable range throw Error(overflow) rather
/// than wrap; configs never need values anywhere near the limit, so an
/// explicit failure is the correct outcome for absurd inputs.
using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

Int gcd_of(Int a, Int b);
Int lcm_of(Int a, Int b);  // overflow-checked

/// True when x == base^k for some k >= 0. base == 1 accepts only x == 1.
bool is_power_of(Int x, Int base);

/// Largest divisor of m coprime to p (p >= 2).
Int prime_to_part(Int m, Int p);

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(Int n);

}  // namespace brpinch
