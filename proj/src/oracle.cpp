#include "brpinch/oracle.hpp"

#include <algorithm>
#include <cstdlib>

#include "brpinch/errors.hpp"

namespace brpinch::oracle {

Caps Caps::from_env() {
    Caps caps;
    if (const char* s = std::getenv("BRAUER_PINCH_ORACLE_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v >= 1) {
            caps.ambient_modulus = static_cast<Int>(v);
            caps.census_order = static_cast<Int>(v);
        }
    }
    return caps;
}

bool EnumeratedSubgroup::contains(Int residue) const {
    return std::binary_search(elements.begin(), elements.end(), residue);
}

EnumeratedSubgroup enumerate_subgroup(Int n, Int ambient_modulus) {
    if (n < 1 || ambient_modulus < 1)
        throw Error(Errc::invalid_argument, "subgroup order and modulus must be positive");
    if (ambient_modulus % n != 0)
        throw Error(Errc::invalid_argument, std::to_string(n) + " does not divide the ambient modulus " +
                                                std::to_string(ambient_modulus));
    EnumeratedSubgroup g;
    g.modulus = ambient_modulus;
    g.elements.reserve(static_cast<std::size_t>(n));
    Int step = ambient_modulus / n;
    for (Int k = 0; k < n; ++k) g.elements.push_back(k * step);
    return g;
}

EnumeratedSubgroup intersect(const EnumeratedSubgroup& a, const EnumeratedSubgroup& b) {
    if (a.modulus != b.modulus)
        throw Error(Errc::invalid_argument, "intersection requires a common ambient modulus");
    EnumeratedSubgroup g;
    g.modulus = a.modulus;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                          std::back_inserter(g.elements));
    return g;
}

EnumeratedSubgroup generated_join(const EnumeratedSubgroup& a, const EnumeratedSubgroup& b) {
    if (a.modulus != b.modulus)
        throw Error(Errc::invalid_argument, "join requires a common ambient modulus");
    std::vector<char> seen(static_cast<std::size_t>(a.modulus), 0);
    for (Int x : a.elements)
        for (Int y : b.elements) {
            Int s = x + y;
            if (s >= a.modulus) s -= a.modulus;
            seen[static_cast<std::size_t>(s)] = 1;
        }
    EnumeratedSubgroup g;
    g.modulus = a.modulus;
    for (Int r = 0; r < a.modulus; ++r)
        if (seen[static_cast<std::size_t>(r)]) g.elements.push_back(r);
    return g;
}

LatticeResult check_lattice_laws(Int max_order, const Caps& caps) {
    if (max_order < 1) throw Error(Errc::invalid_argument, "max order must be positive");
    LatticeResult result;
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;

    for (Int a = 1; a <= max_order; ++a) {
        for (Int b = 1; b <= max_order; ++b) {
            Int N = lcm_of(a, b);
            if (N > caps.ambient_modulus)
                throw Error(Errc::oracle_too_large, "ambient modulus " + std::to_string(N) +
                                                        " exceeds the enumeration cap");
            EnumeratedSubgroup A = enumerate_subgroup(a, N);
            EnumeratedSubgroup B = enumerate_subgroup(b, N);

            EnumeratedSubgroup inter = intersect(A, B);
            if (!(inter == enumerate_subgroup(gcd_of(a, b), N))) {
                result.pass = false;
                result.failure = {a, b, "set intersection is not the subgroup of order gcd(a,b)"};
                return result;
            }

            // Elementwise sums of two subgroups form the generated join.
            if (stamp.size() < static_cast<std::size_t>(N)) stamp.resize(static_cast<std::size_t>(N), 0);
            ++epoch;
            Int count = 0;
            for (Int x : A.elements)
                for (Int y : B.elements) {
                    Int s = x + y;
                    if (s >= N) s -= N;
                    if (stamp[static_cast<std::size_t>(s)] != epoch) {
                        stamp[static_cast<std::size_t>(s)] = epoch;
                        ++count;
                    }
                }
            EnumeratedSubgroup expected_join = enumerate_subgroup(lcm_of(a, b), N);
            bool join_ok = count == expected_join.order();
            for (Int e : expected_join.elements)
                join_ok = join_ok && stamp[static_cast<std::size_t>(e)] == epoch;
            if (!join_ok) {
                result.pass = false;
                result.failure = {a, b, "generated join is not the subgroup of order lcm(a,b)"};
                return result;
            }
            ++result.pairs_checked;
        }
    }
    return result;
}

std::map<Int, Int> census_invariant_factors(std::span<const Int> cyclic_orders, const Caps& caps) {
    Int total = 1;
    for (Int n : cyclic_orders) {
        if (n < 1) throw Error(Errc::invalid_argument, "cyclic orders must be positive");
        total = checked_mul(total, n);
        if (total > caps.census_order)
            throw Error(Errc::oracle_too_large,
                        "group order exceeds the census cap " + std::to_string(caps.census_order));
    }
    std::map<Int, Int> census;
    std::vector<Int> tuple(cyclic_orders.size(), 0);
    for (Int count = 0; count < total; ++count) {
        Int order = 1;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            Int n = cyclic_orders[i];
            Int coord_order = n / gcd_of(tuple[i], n);  // gcd(0, n) = n
            order = lcm_of(order, coord_order);
        }
        ++census[order];
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (++tuple[i] < cyclic_orders[i]) break;
            tuple[i] = 0;
        }
    }
    return census;
}

const char* verify_status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::pass: return "pass";
        case VerifyStatus::fail: return "fail";
        case VerifyStatus::skipped: return "skipped";
    }
    return "skipped";
}

namespace {

struct Checker {
    VerifyResult result;

    void mismatch(const std::string& what, const std::string& expected, const std::string& got) {
        result.status = VerifyStatus::fail;
        result.discrepancies.push_back(what + ": expected " + expected + ", report has " + got);
    }

    void compare(const std::string& what, Int expected, const qz::AbGroup& got) {
        if (!got.order().is_finite()) {
            mismatch(what + " order", std::to_string(expected), got.order().str());
            return;
        }
        if (got.order().value() != expected)
            mismatch(what + " order", std::to_string(expected), std::to_string(got.order().value()));
    }
};

}  // namespace

VerifyResult verify_report(const pinch::PinchingConfig& config, const theorems::BrauerReport& report,
                           const Caps& caps) {
    VerifyResult skip;
    skip.status = VerifyStatus::skipped;

    const auto& cover = config.cover;
    bool local = cover.base_field.is_local();
    bool finite = cover.base_field.kind() == fields::FieldSpec::Kind::finite_field;
    if (!local && !finite) {
        skip.skip_reason = "base field outside the exact regime (local or finite)";
        return skip;
    }
    if (!cover.amitsur.is_known()) {
        skip.skip_reason = "cover Amitsur order undetermined";
        return skip;
    }
    for (const auto& p : config.points)
        if (p.fibers.empty()) {
            skip.skip_reason = "configuration has a point without fibers";
            return skip;
        }

    Int m = cover.amitsur.order();
    Int N = m;
    try {
        for (const auto& p : config.points) {
            N = lcm_of(N, p.residue.total_degree());
            for (const auto& f : p.fibers) N = lcm_of(N, f.total_degree());
        }
    } catch (const Error&) {
        skip.skip_reason = "ambient modulus overflows the enumeration range";
        return skip;
    }
    if (N > caps.ambient_modulus) {
        skip.skip_reason = "ambient modulus " + std::to_string(N) + " exceeds the enumeration cap";
        return skip;
    }

    Checker c;

    // Per-point fiber intersections by set arithmetic. Over a finite base
    // every residue-field Brauer group is trivial.
    std::vector<Int> factor_orders;
    for (const auto& p : config.points) {
        EnumeratedSubgroup acc = enumerate_subgroup(local ? p.fibers.front().total_degree() : 1, N);
        for (std::size_t i = 1; i < p.fibers.size(); ++i)
            acc = intersect(acc, enumerate_subgroup(local ? p.fibers[i].total_degree() : 1, N));
        factor_orders.push_back(acc.order());
    }

    Int product_order = 1;
    Int product_exponent = 1;
    for (Int f : factor_orders) {
        product_order = checked_mul(product_order, f);
        product_exponent = lcm_of(product_exponent, f);
    }

    if (!report.intersection_product.is_known()) {
        c.mismatch("intersectionProduct", "an exact invariant-factor form",
                   report.intersection_product.display());
    } else {
        c.compare("intersectionProduct", product_order, report.intersection_product);
        const auto& factors = report.intersection_product.invariant_factors();
        Int exponent = factors.empty() ? 1 : factors.back();
        if (exponent != product_exponent)
            c.mismatch("intersectionProduct exponent", std::to_string(product_exponent),
                       std::to_string(exponent));
        if (product_order <= caps.census_order) {
            std::vector<Int> nontrivial;
            for (Int f : factor_orders)
                if (f > 1) nontrivial.push_back(f);
            if (census_invariant_factors(nontrivial, caps) != census_invariant_factors(factors, caps))
                c.mismatch("intersectionProduct census", "the census of the enumerated factors",
                           "a different element-order census");
        } else {
            c.result.notes.push_back("invariant-factor census skipped (order " +
                                     std::to_string(product_order) + " exceeds the census cap)");
        }
    }

    // Pinched Amitsur subgroup: intersect inside Z/N.
    EnumeratedSubgroup pinched = enumerate_subgroup(m, N);
    for (const auto& p : config.points)
        pinched = intersect(pinched, enumerate_subgroup(local ? p.residue.total_degree() : 1, N));
    if (!report.amitsur_pinched.is_known())
        c.mismatch("amitsurPinched", "an exact order", report.amitsur_pinched.display());
    else if (report.amitsur_pinched.order() != pinched.order())
        c.mismatch("amitsurPinched order", std::to_string(pinched.order()),
                   std::to_string(report.amitsur_pinched.order()));

    Int quotient_order = m / pinched.order();
    c.compare("amitsurQuotient", quotient_order, report.amitsur_quotient);

    // |ker phi1*| = |quotient| * |coker of the injection| = product order.
    if (!config.points.empty() || quotient_order > 1)
        c.compare("kerPhi1", product_order, report.ker_phi1);

    // Index bookkeeping, set-level: gcd(a, b) = order of the intersection.
    std::optional<Int> cover_idx;
    if (cover.closed_point_degrees) {
        Int g = 0;
        for (Int d : *cover.closed_point_degrees) g = gcd_of(g, d);
        cover_idx = g;
    } else {
        cover_idx = cover.declared_index;
    }
    if (cover_idx && report.index.cover && *report.index.cover != *cover_idx)
        c.mismatch("index.cover", std::to_string(*cover_idx), std::to_string(*report.index.cover));

    if (cover_idx && !config.points.empty()) {
        Int locus = 0;
        for (const auto& p : config.points) locus = gcd_of(locus, p.residue.total_degree());
        Int nn = lcm_of(*cover_idx, locus);
        Int constraint =
            intersect(enumerate_subgroup(*cover_idx, nn), enumerate_subgroup(locus, nn)).order();
        if (report.index.constraint_divisor && *report.index.constraint_divisor != constraint)
            c.mismatch("index.constraintDivisor", std::to_string(constraint),
                       std::to_string(*report.index.constraint_divisor));
        if (report.index.rl_order && *report.index.rl_order != constraint)
            c.mismatch("index.rlOrder", std::to_string(constraint), std::to_string(*report.index.rl_order));
        if (report.index.rl_order && report.amitsur_pinched.is_known() &&
            report.amitsur_pinched.order() != *report.index.rl_order)
            c.mismatch("amitsurPinched vs rlOrder", std::to_string(*report.index.rl_order),
                       std::to_string(report.amitsur_pinched.order()));
    }

    if (pinch::is_universal_homeomorphism(config)) {
        if (!report.coker_phi_a.is_trivial())
            c.mismatch("cokerPhiA", "0", report.coker_phi_a.display());
        if (!report.h2_mu.is_trivial()) c.mismatch("h2Mu", "0", report.h2_mu.display());
    }

    return c.result;
}

}  // namespace brpinch::oracle
