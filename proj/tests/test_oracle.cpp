#include <doctest.h>

#include "brpinch/errors.hpp"
#include "brpinch/oracle.hpp"
#include "brpinch/theorems.hpp"
#include "support.hpp"

using namespace brpinch;
using oracle::EnumeratedSubgroup;

TEST_CASE("enumerate_subgroup") {
    auto g = oracle::enumerate_subgroup(2, 12);
    CHECK(g.elements == std::vector<Int>{0, 6});
    CHECK(oracle::enumerate_subgroup(1, 12).elements == std::vector<Int>{0});
    CHECK(oracle::enumerate_subgroup(12, 12).order() == 12);
    CHECK_THROWS_AS(oracle::enumerate_subgroup(5, 12), Error);
}

TEST_CASE("set-level meet and join") {
    Int n = 12;
    auto a = oracle::enumerate_subgroup(4, n);
    auto b = oracle::enumerate_subgroup(6, n);
    auto meet = oracle::intersect(a, b);
    CHECK(meet.elements == std::vector<Int>{0, 6});  // order 2 = gcd(4, 6)
    auto join = oracle::generated_join(a, b);
    CHECK(join.order() == 12);  // lcm(4, 6)
    CHECK(join == oracle::enumerate_subgroup(12, n));
}

TEST_CASE("lattice law sweep") {
    auto r = oracle::check_lattice_laws(50);
    CHECK(r.pass);
    CHECK(r.pairs_checked == 2500);
}

TEST_CASE("order censuses distinguish non-isomorphic groups") {
    auto c23 = oracle::census_invariant_factors(std::vector<Int>{2, 3});
    std::map<Int, Int> expected{{1, 1}, {2, 1}, {3, 2}, {6, 2}};
    CHECK(c23 == expected);
    CHECK(c23 == oracle::census_invariant_factors(std::vector<Int>{6}));

    auto c22 = oracle::census_invariant_factors(std::vector<Int>{2, 2});
    std::map<Int, Int> expected22{{1, 1}, {2, 3}};
    CHECK(c22 == expected22);
    CHECK(c22 != oracle::census_invariant_factors(std::vector<Int>{4}));

    std::map<Int, Int> trivial{{1, 1}};
    CHECK(oracle::census_invariant_factors(std::vector<Int>{}) == trivial);

    // Reordering the factor list cannot change the census.
    CHECK(oracle::census_invariant_factors(std::vector<Int>{4, 3, 10}) ==
          oracle::census_invariant_factors(std::vector<Int>{10, 4, 3}));

    oracle::Caps caps;
    caps.census_order = 10;
    CHECK_THROWS_AS(oracle::census_invariant_factors(std::vector<Int>{4, 5}, caps), Error);
}

TEST_CASE("verify_report certifies exact configs") {
    testsupport::Rng rng(5);
    for (int i = 0; i < 60; ++i) {
        auto config = testsupport::random_local_config(rng);
        auto report = theorems::analyze(config);
        auto vr = oracle::verify_report(config, report);
        CHECK(vr.status == oracle::VerifyStatus::pass);
        if (vr.status != oracle::VerifyStatus::pass)
            for (const auto& d : vr.discrepancies) MESSAGE(d);
    }
}

TEST_CASE("verify_report spots a doctored report") {
    testsupport::Rng rng(6);
    auto config = testsupport::random_local_config(rng);
    auto report = theorems::analyze(config);
    report.amitsur_pinched = qz::cyclic(theorems::amitsur_pinched(config).order() * 7);
    auto vr = oracle::verify_report(config, report);
    CHECK(vr.status == oracle::VerifyStatus::fail);
    CHECK(!vr.discrepancies.empty());
}

TEST_CASE("verify_report skips outside the exact regime") {
    fields::FieldSpec kc = fields::FieldSpec::abstract(2);
    fields::ExtensionSpec residue(kc, 1, 1);
    pinch::PinchingConfig config{
        {kc, qz::cyclic(1), qz::AbGroup::trivial(), std::nullopt, std::nullopt, Int{1},
         pinch::CoverKind::regular_curve, std::nullopt, false},
        {{"P", residue, {fields::ExtensionSpec(fields::residue_field(residue), 2, 1)}}}};
    auto report = theorems::analyze(config);
    auto vr = oracle::verify_report(config, report);
    CHECK(vr.status == oracle::VerifyStatus::skipped);
    CHECK(!vr.skip_reason.empty());
}

TEST_CASE("verify_report respects the ambient cap") {
    testsupport::Rng rng(8);
    auto config = testsupport::random_local_config(rng);
    auto report = theorems::analyze(config);
    oracle::Caps caps;
    caps.ambient_modulus = 1;
    auto vr = oracle::verify_report(config, report, caps);
    // Configs with any nontrivial degree no longer fit.
    bool fits = true;
    for (const auto& p : config.points) {
        fits = fits && p.residue.total_degree() == 1;
        for (const auto& f : p.fibers) fits = fits && f.total_degree() == 1;
    }
    if (!fits) CHECK(vr.status == oracle::VerifyStatus::skipped);
}

TEST_CASE("roquette config spot check") {
    // Cover index 4, locus degree 6: the pinched group has order 2, read off
    // set-theoretically as |(1/4)Z/Z meet (1/6)Z/Z| inside Z/12.
    Int n = 12;
    auto meet = oracle::intersect(oracle::enumerate_subgroup(4, n), oracle::enumerate_subgroup(6, n));
    CHECK(meet.order() == 2);
}
