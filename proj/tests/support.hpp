#pragma once

// Shared helpers for tests: reproducible random pinching configurations
// whose degrees all divide a smooth modulus so the enumeration oracle
// always applies.

#include <random>
#include <vector>

#include "brpinch/pinch.hpp"

namespace testsupport {

using namespace brpinch;
using fields::ExtensionSpec;
using fields::FieldSpec;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    Int uniform(Int lo, Int hi) {
        return static_cast<Int>(std::uniform_int_distribution<long long>(lo, hi)(eng));
    }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<Int>(v.size()) - 1))];
    }
    bool flip() { return uniform(0, 1) == 1; }
};

// Divisors of 27720 = 2^3 * 3^2 * 5 * 7 * 11 that are <= 30; any lcm of
// these stays <= 27720, far under the oracle caps.
inline const std::vector<Int>& degree_pool() {
    static const std::vector<Int> pool = [] {
        std::vector<Int> v;
        for (Int d = 1; d <= 30; ++d)
            if (27720 % d == 0) v.push_back(d);
        return v;
    }();
    return pool;
}

inline ExtensionSpec make_extension(Rng& rng, const FieldSpec& base, Int degree) {
    if (base.char_exponent() == 1) return ExtensionSpec(base, degree, degree);
    // Pick a random legal inseparable part.
    Int p = base.char_exponent();
    std::vector<Int> inseps{1};
    Int q = p;
    while (degree % q == 0) {
        inseps.push_back(q);
        q *= p;
    }
    Int insep = rng.pick(inseps);
    return ExtensionSpec(base, degree, degree / insep);
}

struct ConfigOptions {
    bool smooth_normalization = false;  // forces amitsur order == cover index
    Int max_points = 4;
    Int max_fibers = 3;
};

// A random local-base configuration that satisfies every validation rule:
// the restricted Amitsur class lands in each fiber intersection because
// fiber degrees are chosen as multiples of the per-point image order.
inline pinch::PinchingConfig random_local_config(Rng& rng, const ConfigOptions& opt = {}) {
    FieldSpec base = rng.flip() ? FieldSpec::padic(5) : FieldSpec::local_function(2);
    Int m = rng.pick(degree_pool());

    pinch::CoverData cover{base,
                           qz::QmodZSubgroup::cyclic(m),
                           qz::AbGroup::unknown(std::nullopt, "not supplied"),
                           std::nullopt,
                           std::nullopt,
                           std::nullopt,
                           opt.smooth_normalization ? pinch::CoverKind::smooth_curve
                                                    : pinch::CoverKind::general,
                           std::nullopt,
                           opt.smooth_normalization};
    if (opt.smooth_normalization)
        cover.closed_point_degrees = std::vector<Int>{m, 2 * m};  // index = amitsur order

    pinch::PinchingConfig config{std::move(cover), {}};
    Int points = rng.uniform(1, opt.max_points);
    for (Int i = 0; i < points; ++i) {
        Int d = rng.pick(degree_pool());
        ExtensionSpec residue = make_extension(rng, base, d);
        FieldSpec kappa = fields::residue_field(residue);
        Int image_order = m / gcd_of(m, d);

        std::vector<Int> candidates;
        for (Int c : degree_pool())
            if (c % image_order == 0) candidates.push_back(c);

        std::vector<ExtensionSpec> fibers;
        Int nfibers = rng.uniform(1, opt.max_fibers);
        for (Int f = 0; f < nfibers; ++f)
            fibers.push_back(make_extension(rng, kappa, rng.pick(candidates)));
        config.points.push_back({"y" + std::to_string(i), std::move(residue), std::move(fibers)});
    }
    return config;
}

// A universal-homeomorphism configuration over a local function field:
// singleton purely inseparable fibers of 2-power degree.
inline pinch::PinchingConfig random_uht_config(Rng& rng, bool residue_iso) {
    FieldSpec base = FieldSpec::local_function(2);
    std::vector<Int> twopowers{1, 2, 4, 8};
    Int m = residue_iso ? rng.pick(std::vector<Int>{1, 2, 3}) : rng.pick(twopowers);

    pinch::CoverData cover{base,
                           qz::QmodZSubgroup::cyclic(m),
                           qz::AbGroup::unknown(std::nullopt, "not supplied"),
                           qz::AbGroup::of_cyclic_orders({rng.uniform(1, 9)}),
                           std::nullopt,
                           std::nullopt,
                           pinch::CoverKind::general,
                           std::nullopt,
                           false};

    pinch::PinchingConfig config{std::move(cover), {}};
    Int points = residue_iso ? 1 : rng.uniform(1, 3);
    for (Int i = 0; i < points; ++i) {
        // The image of the Amitsur class must land in the fiber group.
        Int d = residue_iso ? m * rng.uniform(1, 4) : rng.pick(degree_pool());
        ExtensionSpec residue = make_extension(rng, base, d);
        FieldSpec kappa = fields::residue_field(residue);
        Int image_order = m / gcd_of(m, d);
        Int fiber_degree = 1;
        if (!residue_iso) {
            fiber_degree = rng.pick(twopowers);
            while (fiber_degree % image_order != 0) fiber_degree *= 2;
        }
        config.points.push_back(
            {"y" + std::to_string(i), std::move(residue), {ExtensionSpec(kappa, fiber_degree, 1)}});
    }
    return config;
}

}  // namespace testsupport
