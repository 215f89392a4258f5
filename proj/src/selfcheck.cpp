#include "brpinch/selfcheck.hpp"

#include <random>

#include "brpinch/qz.hpp"

namespace brpinch::cli {

SelfcheckOutcome run_selfcheck(Int max_order, int census_samples, const oracle::Caps& caps) {
    SelfcheckOutcome out;

    // Lattice laws: the enumeration must satisfy the gcd/lcm model, and the
    // qz operations must agree with the enumeration on every pair.
    oracle::LatticeResult lattice = oracle::check_lattice_laws(max_order, caps);
    out.lattice_pairs = lattice.pairs_checked;
    if (!lattice.pass) {
        out.pass = false;
        out.failures.push_back("lattice enumeration failed at a=" + std::to_string(lattice.failure->a) +
                               ", b=" + std::to_string(lattice.failure->b) + ": " + lattice.failure->what);
    }
    for (Int a = 1; a <= max_order && out.pass; ++a) {
        for (Int b = 1; b <= max_order; ++b) {
            Int n = lcm_of(a, b);
            auto meet = qz::intersect(qz::cyclic(a), qz::cyclic(b));
            auto joined = qz::join(qz::cyclic(a), qz::cyclic(b));
            auto enum_meet = oracle::intersect(oracle::enumerate_subgroup(a, n),
                                               oracle::enumerate_subgroup(b, n));
            auto enum_join = oracle::generated_join(oracle::enumerate_subgroup(a, n),
                                                    oracle::enumerate_subgroup(b, n));
            if (meet.order() != enum_meet.order() || joined.order() != enum_join.order()) {
                out.pass = false;
                out.failures.push_back("qz lattice mismatch at a=" + std::to_string(a) +
                                       ", b=" + std::to_string(b));
                break;
            }
        }
    }

    // Invariant factors: random factor lists, canonical form vs census.
    std::mt19937_64 rng(0x5eed5eedULL);
    for (int s = 0; s < census_samples; ++s) {
        std::vector<Int> orders;
        Int total = 1;
        int parts = static_cast<int>(rng() % 4) + 1;
        for (int i = 0; i < parts; ++i) {
            Int n = static_cast<Int>(rng() % 20) + 1;
            if (total * n > caps.census_order) break;
            total *= n;
            orders.push_back(n);
        }
        auto canonical = qz::AbGroup::of_cyclic_orders(orders);
        auto expected = oracle::census_invariant_factors(orders, caps);
        auto got = oracle::census_invariant_factors(canonical.invariant_factors(), caps);
        ++out.census_samples;
        if (expected != got) {
            out.pass = false;
            std::string list;
            for (Int n : orders) list += std::to_string(n) + " ";
            out.failures.push_back("census mismatch for factor list [ " + list + "] vs canonical " +
                                   canonical.display());
        }
    }

    return out;
}

}  // namespace brpinch::cli
