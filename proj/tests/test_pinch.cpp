#include <doctest.h>

#include "brpinch/errors.hpp"
#include "brpinch/pinch.hpp"
#include "support.hpp"

using namespace brpinch;
using fields::ExtensionSpec;
using fields::FieldSpec;
using pinch::CoverKind;
using pinch::PinchingConfig;
using pinch::PinchPoint;

namespace {

PinchPoint point(const FieldSpec& base, Int residue_degree, std::vector<Int> fiber_degrees,
                 std::string label = "y") {
    ExtensionSpec residue(base, residue_degree, residue_degree);
    FieldSpec kappa = fields::residue_field(residue);
    std::vector<ExtensionSpec> fibers;
    for (Int d : fiber_degrees) fibers.emplace_back(kappa, d, d);
    return {std::move(label), std::move(residue), std::move(fibers)};
}

pinch::CoverData plain_cover(const FieldSpec& base, Int amitsur_order) {
    return {base,
            qz::QmodZSubgroup::cyclic(amitsur_order),
            qz::AbGroup::unknown(std::nullopt, "not supplied"),
            std::nullopt,
            std::nullopt,
            std::nullopt,
            CoverKind::general,
            std::nullopt,
            false};
}

}  // namespace

TEST_CASE("index arithmetic") {
    CHECK(pinch::index_from_degrees(std::vector<Int>{2, 3}) == 1);
    CHECK(pinch::index_from_degrees(std::vector<Int>{4, 6}) == 2);
    CHECK(pinch::index_from_degrees(std::vector<Int>{5}) == 5);
    CHECK_THROWS_AS(pinch::index_from_degrees(std::vector<Int>{}), Error);

    FieldSpec k = FieldSpec::padic(5);
    CHECK(pinch::fiber_index(point(k, 1, {2, 2})) == 2);
    CHECK(pinch::fiber_index(point(k, 1, {2, 3})) == 1);
    CHECK(pinch::fiber_index(point(k, 1, {8})) == 8);

    std::vector<PinchPoint> pts{point(k, 2, {2}), point(k, 4, {2})};
    CHECK(pinch::locus_index(pts) == 2);
    CHECK(pinch::locus_index(std::vector<PinchPoint>{point(k, 1, {2})}) == 1);
    CHECK(pinch::locus_index(std::vector<PinchPoint>{point(k, 6, {2}), point(k, 9, {3})}) == 3);
    CHECK_THROWS_AS(pinch::locus_index(std::vector<PinchPoint>{}), Error);
}

TEST_CASE("annihilator bound") {
    FieldSpec k = FieldSpec::padic(5);
    PinchingConfig c{plain_cover(k, 1), {point(k, 1, {2, 4}), point(k, 1, {3})}};
    CHECK(pinch::annihilator_bound(c) == 6);  // lcm(2, 3)
    c.points = {point(k, 1, {2, 4}), point(k, 1, {4, 8})};
    CHECK(pinch::annihilator_bound(c) == 4);
    c.points = {point(k, 1, {1})};
    CHECK(pinch::annihilator_bound(c) == 1);
    c.points.clear();
    CHECK_THROWS_AS(pinch::annihilator_bound(c), Error);
}

TEST_CASE("pinched index constraint") {
    FieldSpec k = FieldSpec::padic(5);
    PinchingConfig c{plain_cover(k, 2), {point(k, 6, {2})}};
    c.cover.closed_point_degrees = std::vector<Int>{4, 12};
    CHECK(pinch::pinched_index_constraint(c) == 2);  // gcd(4, 6)
    c.cover.closed_point_degrees = std::vector<Int>{1};
    c.cover.amitsur = qz::QmodZSubgroup::cyclic(1);
    CHECK(pinch::pinched_index_constraint(c) == 1);
    c.cover.closed_point_degrees = std::nullopt;
    CHECK_THROWS_AS(pinch::pinched_index_constraint(c), Error);
}

TEST_CASE("structure predicates") {
    FieldSpec k = FieldSpec::local_function(2);
    ExtensionSpec residue(k, 2, 1);
    FieldSpec kappa = fields::residue_field(residue);

    PinchingConfig uht{plain_cover(k, 1), {{"y", residue, {ExtensionSpec(kappa, 4, 1)}}}};
    CHECK(pinch::is_universal_homeomorphism(uht));
    CHECK(!pinch::is_residue_iso(uht));

    PinchingConfig iso{plain_cover(k, 1), {{"y", residue, {ExtensionSpec(kappa, 1, 1)}}}};
    CHECK(pinch::is_residue_iso(iso));

    PinchingConfig multi{plain_cover(k, 1),
                         {{"y", residue, {ExtensionSpec(kappa, 2, 1), ExtensionSpec(kappa, 2, 1)}}}};
    CHECK(!pinch::is_universal_homeomorphism(multi));

    PinchingConfig separable{plain_cover(k, 1), {{"y", residue, {ExtensionSpec(kappa, 2, 2)}}}};
    CHECK(!pinch::is_universal_homeomorphism(separable));

    PinchingConfig empty{plain_cover(k, 1), {}};
    CHECK(pinch::is_universal_homeomorphism(empty));
    CHECK(pinch::is_residue_iso(empty));
}

TEST_CASE("validate flags each violation class") {
    FieldSpec k = FieldSpec::padic(5);

    auto has = [](const std::vector<pinch::Violation>& vs, const char* code) {
        for (const auto& v : vs)
            if (v.code == code) return true;
        return false;
    };

    // Well-formed config -> empty list.
    PinchingConfig good{plain_cover(k, 2), {point(k, 2, {2, 4})}};
    CHECK(pinch::validate(good).empty());

    // Severi-Brauer class/amitsur mismatch.
    PinchingConfig sb = good;
    sb.cover.kind = CoverKind::severi_brauer;
    sb.cover.class_order = 2;
    sb.cover.amitsur = qz::QmodZSubgroup::cyclic(3);
    sb.cover.br_a = qz::AbGroup::trivial();
    sb.points = {point(k, 2, {2})};
    CHECK(has(pinch::validate(sb), "severi-brauer-amitsur-mismatch"));

    // CH0-trivial forcing rules.
    PinchingConfig ch0 = good;
    ch0.cover.kind = CoverKind::ch0_trivial;
    CHECK(has(pinch::validate(ch0), "ch0-trivial-amitsur-mismatch"));
    CHECK(has(pinch::validate(ch0), "ch0-trivial-bra-mismatch"));

    // Fiber over the wrong base field.
    PinchingConfig bad_fiber = good;
    bad_fiber.points = {{"y", ExtensionSpec(k, 2, 2), {ExtensionSpec(k, 2, 2)}}};
    // (residue field of a degree-2 extension is still p-adic, so build one
    // over a different field instead)
    bad_fiber.points[0].fibers = {ExtensionSpec(FieldSpec::padic(7), 2, 2)};
    CHECK(has(pinch::validate(bad_fiber), "fiber-base-mismatch"));

    // Residue extension over the wrong base.
    PinchingConfig bad_residue = good;
    bad_residue.points = {point(FieldSpec::padic(7), 2, {2})};
    CHECK(has(pinch::validate(bad_residue), "residue-base-mismatch"));

    // Empty fiber list.
    PinchingConfig no_fibers = good;
    no_fibers.points = {{"y", ExtensionSpec(k, 2, 2), {}}};
    CHECK(has(pinch::validate(no_fibers), "empty-fiber-set"));

    // Declared index disagreeing with the degree list.
    PinchingConfig bad_index = good;
    bad_index.cover.closed_point_degrees = std::vector<Int>{4, 6};
    bad_index.cover.declared_index = 4;
    CHECK(has(pinch::validate(bad_index), "index-mismatch"));

    // Amitsur order not dividing the index.
    PinchingConfig bad_amitsur = good;
    bad_amitsur.cover.declared_index = 3;
    CHECK(has(pinch::validate(bad_amitsur), "amitsur-order-exceeds-index"));

    // Amitsur subgroup larger than Br of the base.
    PinchingConfig finite_base{plain_cover(FieldSpec::finite(2), 2),
                               {point(FieldSpec::finite(2), 2, {2})}};
    CHECK(has(pinch::validate(finite_base), "amitsur-not-subgroup-of-base-brauer"));

    // Smooth cover over a local field: Amitsur order must equal the index.
    PinchingConfig smooth = good;
    smooth.cover.smooth_normalization = true;
    smooth.cover.closed_point_degrees = std::vector<Int>{4};
    CHECK(has(pinch::validate(smooth), "smooth-cover-amitsur-index-mismatch"));

    // The restricted Amitsur class must land inside the fiber intersection.
    PinchingConfig escape{plain_cover(k, 2), {point(k, 1, {1})}};
    CHECK(has(pinch::validate(escape), "amitsur-image-escapes-intersection"));

    // Q/Z is not a legal Amitsur subgroup.
    PinchingConfig full = good;
    full.cover.amitsur = qz::QmodZSubgroup::full();
    CHECK(has(pinch::validate(full), "amitsur-not-finite"));
}

TEST_CASE("validated random configs are accepted everywhere") {
    testsupport::Rng rng(101);
    for (int i = 0; i < 100; ++i) {
        auto config = testsupport::random_local_config(rng);
        CHECK(pinch::validate(config).empty());
    }
}

TEST_CASE("index divisibility properties") {
    testsupport::Rng rng(202);
    testsupport::ConfigOptions opt;
    opt.smooth_normalization = true;  // guarantees index data
    for (int i = 0; i < 100; ++i) {
        auto config = testsupport::random_local_config(rng, opt);
        Int bound = pinch::annihilator_bound(config);
        for (const auto& p : config.points) {
            Int fi = pinch::fiber_index(p);
            for (const auto& f : p.fibers) CHECK(f.total_degree() % fi == 0);
            CHECK(bound % fi == 0);
        }
        Int li = pinch::locus_index(config.points);
        for (const auto& p : config.points) CHECK(p.residue.total_degree() % li == 0);
        Int constraint = pinch::pinched_index_constraint(config);
        CHECK(*pinch::cover_index(config.cover) % constraint == 0);
        CHECK(li % constraint == 0);
    }
}
