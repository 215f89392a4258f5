#include "brpinch/ints.hpp"

#include <numeric>

#include "brpinch/errors.hpp"

namespace brpinch {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer addition out of range");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer multiplication out of range");
    return r;
}

Int gcd_of(Int a, Int b) {
    return std::gcd(a, b);
}

Int lcm_of(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

bool is_power_of(Int x, Int base) {
    if (x < 1) return false;
    if (base == 1) return x == 1;
    while (x % base == 0) x /= base;
    return x == 1;
}

Int prime_to_part(Int m, Int p) {
    while (m % p == 0) m /= p;
    return m;
}

namespace {

using U128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(U128(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = static_cast<std::uint64_t>(n - 1);
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for every 64-bit integer.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, static_cast<std::uint64_t>(n));
        if (x == 1 || x == static_cast<std::uint64_t>(n) - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, static_cast<std::uint64_t>(n));
            if (x == static_cast<std::uint64_t>(n) - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace brpinch
