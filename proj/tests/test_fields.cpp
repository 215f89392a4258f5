#include <doctest.h>

#include <random>

#include "brpinch/errors.hpp"
#include "brpinch/fields.hpp"

using namespace brpinch;
using fields::ExtensionSpec;
using fields::FieldSpec;
using qz::AbGroup;
using qz::QmodZSubgroup;

TEST_CASE("brauer group by field kind") {
    CHECK(fields::brauer_group(FieldSpec::padic(5)) == AbGroup::full_qmodz());
    CHECK(fields::brauer_group(FieldSpec::local_function(3)) == AbGroup::full_qmodz());
    CHECK(fields::brauer_group(FieldSpec::finite(2)).is_trivial());
    CHECK(fields::brauer_group(FieldSpec::real_closed()) == AbGroup::known({2}));
    CHECK(fields::brauer_group(FieldSpec::separably_closed()).is_trivial());
    CHECK(fields::brauer_group(FieldSpec::algebraically_closed()).is_trivial());
    CHECK(fields::brauer_group(FieldSpec::abstract(2)).kind() == AbGroup::Kind::symbolic_br);
    CHECK(fields::brauer_group(FieldSpec::abstract_perfect(3)).kind() == AbGroup::Kind::symbolic_br);
}

TEST_CASE("relative brauer group") {
    CHECK(fields::relative_brauer(ExtensionSpec(FieldSpec::padic(3), 2, 2)) == qz::cyclic(2));
    CHECK(fields::relative_brauer(ExtensionSpec(FieldSpec::abstract(2), 1, 1)).is_trivial());
    CHECK(fields::relative_brauer(ExtensionSpec(FieldSpec::abstract(5), 6, 6)) ==
          QmodZSubgroup::unknown_bounded(6));
    CHECK(fields::relative_brauer(ExtensionSpec(FieldSpec::finite(2), 4, 4)).is_trivial());
    CHECK(fields::relative_brauer(ExtensionSpec(FieldSpec::real_closed(), 2, 2)) == qz::cyclic(2));
    CHECK(fields::relative_brauer(ExtensionSpec(FieldSpec::real_closed(), 1, 1)).is_trivial());
    CHECK(fields::relative_brauer(ExtensionSpec(FieldSpec::abstract_perfect(3), 3, 3)) ==
          QmodZSubgroup::unknown_bounded(3));
    // Purely inseparable over an imperfect base: p-power torsion bound.
    auto t = fields::relative_brauer(ExtensionSpec(FieldSpec::abstract(2), 2, 1));
    CHECK(t == QmodZSubgroup::unknown_bounded(2));
    CHECK(!t.note().empty());
}

TEST_CASE("brauer torsion") {
    CHECK(fields::brauer_torsion(FieldSpec::local_function(2), 4) == qz::cyclic(4));
    CHECK(fields::brauer_torsion(FieldSpec::finite(2), 8).is_trivial());
    CHECK(fields::brauer_torsion(FieldSpec::abstract_perfect(3), 9).is_trivial());
    // Perfect base: the whole p-part of the torsion level vanishes.
    CHECK(fields::brauer_torsion(FieldSpec::abstract_perfect(3), 6) == QmodZSubgroup::unknown_bounded(2));
    CHECK(fields::brauer_torsion(FieldSpec::abstract(2), 4) == QmodZSubgroup::unknown_bounded(4));
    CHECK(fields::brauer_torsion(FieldSpec::real_closed(), 6) == qz::cyclic(2));
    CHECK(fields::brauer_torsion(FieldSpec::padic(5), 12) == qz::cyclic(12));
}

TEST_CASE("relative h3") {
    CHECK(fields::relative_h3(ExtensionSpec(FieldSpec::padic(7), 3, 3)).is_trivial());
    CHECK(fields::relative_h3(ExtensionSpec(FieldSpec::abstract(2), 1, 1)).is_trivial());
    CHECK(fields::relative_h3(ExtensionSpec(FieldSpec::abstract(2), 4, 4)) ==
          QmodZSubgroup::unknown_bounded(4));
    CHECK(fields::relative_h3(ExtensionSpec(FieldSpec::local_function(5), 10, 10)).is_trivial());
    CHECK(fields::relative_h3(ExtensionSpec(FieldSpec::real_closed(), 2, 2)).is_trivial());
}

TEST_CASE("extension invariants enforced at construction") {
    CHECK_THROWS_AS(ExtensionSpec(FieldSpec::padic(5), 6, 4), Error);   // 4 does not divide 6
    CHECK_THROWS_AS(ExtensionSpec(FieldSpec::padic(5), 4, 2), Error);   // inseparable part in char 0
    CHECK_THROWS_AS(ExtensionSpec(FieldSpec::local_function(2), 6, 2), Error);  // 3 not a power of 2
    CHECK_THROWS_AS(ExtensionSpec(FieldSpec::finite(2), 4, 2), Error);  // perfect base
    CHECK_THROWS_AS(ExtensionSpec(FieldSpec::abstract_perfect(2), 2, 1), Error);
    CHECK_THROWS_AS(ExtensionSpec(FieldSpec::real_closed(), 3, 3), Error);
    CHECK_THROWS_AS(ExtensionSpec(FieldSpec::padic(5), 0, 1), Error);

    ExtensionSpec ok(FieldSpec::local_function(2), 12, 3);
    CHECK(ok.inseparable_degree() == 4);
    CHECK(!ok.purely_inseparable());
    CHECK(ExtensionSpec(FieldSpec::local_function(2), 4, 1).purely_inseparable());
}

TEST_CASE("field kind constraints") {
    CHECK_THROWS_AS(FieldSpec::padic(4), Error);
    CHECK_THROWS_AS(FieldSpec::finite(1), Error);
    CHECK_THROWS_AS(FieldSpec::abstract(6), Error);
    CHECK(FieldSpec::abstract(1).is_perfect());
    CHECK(!FieldSpec::abstract(2).is_perfect());
    CHECK(FieldSpec::local_function(2).char_exponent() == 2);
    CHECK(FieldSpec::padic(2).char_exponent() == 1);
}

TEST_CASE("residue field derivation") {
    CHECK(fields::residue_field(ExtensionSpec(FieldSpec::padic(5), 3, 3)) == FieldSpec::padic(5));
    CHECK(fields::residue_field(ExtensionSpec(FieldSpec::local_function(2), 4, 1)) ==
          FieldSpec::local_function(2));
    CHECK(fields::residue_field(ExtensionSpec(FieldSpec::real_closed(), 2, 2)) ==
          FieldSpec::algebraically_closed());
    CHECK(fields::residue_field(ExtensionSpec(FieldSpec::abstract(3), 9, 3)) == FieldSpec::abstract(3));
}

TEST_CASE("brauer torsion order divides the torsion level") {
    std::mt19937_64 rng(9);
    std::vector<FieldSpec> kinds{FieldSpec::padic(3),   FieldSpec::local_function(2),
                                 FieldSpec::finite(5),  FieldSpec::real_closed(),
                                 FieldSpec::abstract(2), FieldSpec::abstract_perfect(3)};
    for (int i = 0; i < 200; ++i) {
        const FieldSpec& f = kinds[rng() % kinds.size()];
        Int m = static_cast<Int>(rng() % 60) + 1;
        auto t = fields::brauer_torsion(f, m);
        CHECK(m % *t.exponent_bound() == 0);
    }
}

TEST_CASE("relative brauer order law on random extensions") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 400; ++i) {
        Int n = static_cast<Int>(rng() % 500) + 1;
        // p-adic base: order equals the degree.
        CHECK(fields::relative_brauer(ExtensionSpec(FieldSpec::padic(5), n, n)).order() == n);
        // Local function field base with the largest inseparable split.
        Int insep = 1;
        while ((n / insep) % 2 == 0) insep *= 2;
        Int sep = n / insep;
        if (n % insep == 0 && sep * insep == n) {
            auto g = fields::relative_brauer(ExtensionSpec(FieldSpec::local_function(2), n, sep));
            CHECK(g.order() == n);
        }
        // Abstract base: the bound divides the degree.
        auto u = fields::relative_brauer(ExtensionSpec(FieldSpec::abstract(1), n, n));
        CHECK(n % *u.exponent_bound() == 0);
    }
}
