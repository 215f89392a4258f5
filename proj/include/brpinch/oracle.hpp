#pragma once

// Brute-force verification layer: explicit subgroup enumeration inside
// Z/N and exhaustive element-order censuses. Shares nothing with the qz
// module beyond integer gcd/lcm, so an agreement between the two routes
// is meaningful.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brpinch/ints.hpp"
#include "brpinch/pinch.hpp"
#include "brpinch/theorems.hpp"

namespace brpinch::oracle {

struct Caps {
    Int ambient_modulus = 1'000'000;  // largest Z/N we will enumerate in
    Int census_order = 10'000;        // largest group we will census

    /// BRAUER_PINCH_ORACLE_CAP overrides both caps when set.
    static Caps from_env();
};

/// The unique subgroup of order n inside Z/N (fractions with denominator N),
/// stored elementwise.
struct EnumeratedSubgroup {
    Int modulus = 1;
    std::vector<Int> elements;  // sorted residues, closed under addition

    Int order() const { return static_cast<Int>(elements.size()); }
    bool contains(Int residue) const;

    bool operator==(const EnumeratedSubgroup&) const = default;
};

EnumeratedSubgroup enumerate_subgroup(Int n, Int ambient_modulus);
EnumeratedSubgroup intersect(const EnumeratedSubgroup& a, const EnumeratedSubgroup& b);
/// Subgroup generated by the union; for subgroups this is the elementwise
/// sum set.
EnumeratedSubgroup generated_join(const EnumeratedSubgroup& a, const EnumeratedSubgroup& b);

struct LatticeFailure {
    Int a = 0;
    Int b = 0;
    std::string what;
};

struct LatticeResult {
    bool pass = true;
    std::optional<LatticeFailure> failure;
    Int pairs_checked = 0;
};

/// For all 1 <= a, b <= max_order: the set intersection of the enumerated
/// subgroups equals the enumerated subgroup of order gcd(a,b), and the
/// generated join equals the one of order lcm(a,b).
LatticeResult check_lattice_laws(Int max_order, const Caps& caps = {});

/// Exhaustive element-order census of a direct product of cyclic groups.
/// Equal censuses characterize isomorphic finite abelian groups.
std::map<Int, Int> census_invariant_factors(std::span<const Int> cyclic_orders, const Caps& caps = {});

enum class VerifyStatus { pass, fail, skipped };

const char* verify_status_name(VerifyStatus s);

struct VerifyResult {
    VerifyStatus status = VerifyStatus::pass;
    std::vector<std::string> discrepancies;  // fail details
    std::string skip_reason;
    std::vector<std::string> notes;
};

/// Recomputes the exact parts of a report with set arithmetic inside Z/N
/// and compares orders and invariant factors. Applicable when the base
/// field is local or finite and everything fits under the caps.
VerifyResult verify_report(const pinch::PinchingConfig& config, const theorems::BrauerReport& report,
                           const Caps& caps = {});

}  // namespace brpinch::oracle
