#include "brpinch/theorems.hpp"

#include <algorithm>

#include "brpinch/errors.hpp"

namespace brpinch::theorems {

using pinch::PinchingConfig;
using qz::AbGroup;
using qz::QmodZSubgroup;

std::vector<QmodZSubgroup> point_intersections(const PinchingConfig& config) {
    std::vector<QmodZSubgroup> out;
    out.reserve(config.points.size());
    for (const auto& p : config.points) out.push_back(pinch::fiber_brauer_intersection(p));
    return out;
}

qz::AbGroup intersection_product(const PinchingConfig& config) {
    std::vector<AbGroup> factors;
    for (const auto& g : point_intersections(config)) factors.push_back(qz::to_group(g));
    return qz::product(factors);
}

QmodZSubgroup amitsur_pinched(const PinchingConfig& config) {
    QmodZSubgroup acc = config.cover.amitsur;
    for (const auto& p : config.points) acc = qz::intersect(acc, fields::relative_brauer(p.residue));
    return acc;
}

namespace {

// The restricted Amitsur classes must land inside the per-point fiber
// intersections; configurations violating this describe no variety.
void check_injection_constraint(const PinchingConfig& config) {
    const auto& cover = config.cover;
    bool exact_restriction = cover.base_field.is_local() ||
                             cover.base_field.kind() == fields::FieldSpec::Kind::real_closed ||
                             cover.base_field.has_trivial_brauer();
    if (!cover.amitsur.is_known() || !exact_restriction) return;
    Int m = cover.amitsur.order();
    for (const auto& p : config.points) {
        Int image_order = m / gcd_of(m, p.residue.total_degree());
        QmodZSubgroup factor = pinch::fiber_brauer_intersection(p);
        if (factor.exponent_bound() && *factor.exponent_bound() % image_order != 0)
            throw Error(Errc::inconsistent_configuration,
                        "point '" + p.label + "': the restricted Amitsur class (order " +
                            std::to_string(image_order) +
                            ") cannot inject into the fiber intersection (exponent " +
                            std::to_string(*factor.exponent_bound()) + ")");
    }
}

}  // namespace

KernelData kernel_phi1(const PinchingConfig& config) {
    check_injection_constraint(config);
    QmodZSubgroup pinched = amitsur_pinched(config);
    QmodZSubgroup quotient = qz::quotient_subgroup(config.cover.amitsur, pinched);
    AbGroup ip = intersection_product(config);
    AbGroup coker = qz::coker_of_injection(quotient, ip);
    KernelData out;
    out.amitsur_quotient = qz::to_group(quotient);
    out.coker_injection = coker;
    out.ker_phi1 = qz::extension(out.amitsur_quotient, coker);
    out.split = config.cover.kind == pinch::CoverKind::ch0_trivial;
    return out;
}

qz::AbGroup h2_mu(const PinchingConfig& config) {
    if (pinch::is_universal_homeomorphism(config)) return AbGroup::trivial();

    std::vector<AbGroup> h3_factors;
    for (const auto& p : config.points) {
        QmodZSubgroup acc = QmodZSubgroup::full();
        for (const auto& f : p.fibers) acc = qz::intersect(acc, fields::relative_h3(f));
        h3_factors.push_back(qz::to_group(acc));
    }
    AbGroup h3_part = qz::product(h3_factors);
    // The complementary layer is a product of cokernels of restriction maps
    // between residue-field Brauer groups; nothing in scope determines it.
    AbGroup coker_part = AbGroup::unknown(
        std::nullopt, "product of cokernels of residue-field restriction maps; divisible over local fields");
    return qz::extension(coker_part, h3_part);
}

qz::AbGroup coker_phia(const PinchingConfig& config) {
    if (config.cover.br_a.is_trivial()) return AbGroup::trivial();  // quotient of the trivial group
    AbGroup h2 = h2_mu(config);
    if (h2.is_trivial()) return AbGroup::trivial();
    return AbGroup::unknown(h2.exponent_bound(), "embeds into the obstruction group; undetermined");
}

qz::AbGroup br1_pinched(const PinchingConfig& config) {
    if (config.cover.kind == pinch::CoverKind::ch0_trivial)
        return qz::product({fields::brauer_group(config.cover.base_field), intersection_product(config)});

    KernelData k = kernel_phi1(config);
    AbGroup coker = coker_phia(config);
    AbGroup cover_part = config.cover.br1
                             ? *config.cover.br1
                             : AbGroup::unknown(std::nullopt, "cover group not supplied");
    if (!coker.is_trivial())
        cover_part = AbGroup::unknown(cover_part.exponent_bound(),
                                      "kernel of the map from the cover group onto the Br_a cokernel");
    return qz::extension(k.ker_phi1, cover_part);
}

ChainResult seminormalization_chain(std::span<const PinchingConfig> steps) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const PinchingConfig& s = steps[i];
        if (s.points.size() != 1 || !pinch::is_residue_iso(s))
            throw Error(Errc::invalid_chain,
                        "step " + std::to_string(i + 1) +
                            " is not a single-point pinching with an isomorphic residue fiber");
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        KernelData k = kernel_phi1(steps[i]);
        AbGroup coker = coker_phia(steps[i]);
        if (!k.ker_phi1.is_trivial() || !coker.is_trivial())
            return {false, steps.size(),
                    "step " + std::to_string(i + 1) + " failed to be an isomorphism"};
    }
    return {true, steps.size(),
            "pullback is an isomorphism across " + std::to_string(steps.size()) + " step(s)"};
}

bool roquette_applicable(const PinchingConfig& config) {
    const auto& cover = config.cover;
    if (!cover.base_field.is_local() || !cover.smooth_normalization) return false;
    if (!pinch::cover_index(cover)) return false;
    if (config.points.empty())
        return cover.kind == pinch::CoverKind::smooth_curve && cover.amitsur.is_known();
    return true;
}

RoquetteResult roquette_lichtenbaum(const PinchingConfig& config) {
    const auto& cover = config.cover;
    if (!cover.base_field.is_local())
        throw Error(Errc::theorem_not_applicable, "requires a non-archimedean local base field");
    if (!cover.smooth_normalization)
        throw Error(Errc::theorem_not_applicable, "requires a smooth normalization");
    auto ci = pinch::cover_index(cover);
    if (!ci)
        throw Error(Errc::incomplete_configuration,
                    "cover index data (closedPointDegrees or index) is required");

    if (config.points.empty()) {
        if (cover.kind != pinch::CoverKind::smooth_curve || !cover.amitsur.is_known())
            throw Error(Errc::theorem_not_applicable,
                        "without pinch points this applies to a smooth curve with known Amitsur order");
        if (cover.amitsur.order() != *ci)
            throw Error(Errc::inconsistent_configuration,
                        "a smooth curve over a local field has Amitsur order equal to its index");
        return {*ci, true};
    }

    Int order = gcd_of(*ci, pinch::locus_index(config.points));
    if (cover.amitsur.is_known()) {
        if (cover.amitsur.order() != *ci)
            throw Error(Errc::inconsistent_configuration,
                        "a smooth cover over a local field has Amitsur order equal to the cover index");
        QmodZSubgroup pinched = amitsur_pinched(config);
        if (pinched.is_known() && pinched.order() != order)
            throw Error(Errc::inconsistent_configuration,
                        "pinched Amitsur order disagrees with gcd(cover index, locus index)");
    }
    return {order, true};
}

namespace {

void add_caveat(std::vector<std::string>& caveats, const std::string& field, const AbGroup& g) {
    switch (g.kind()) {
        case AbGroup::Kind::unknown:
            caveats.push_back(field + ": " +
                              (g.note().empty() ? "structure undetermined beyond order/exponent data"
                                                : g.note()));
            return;
        case AbGroup::Kind::symbolic_br:
            caveats.push_back(field + ": depends on " + g.display() + ", which has no evaluation rule");
            return;
        case AbGroup::Kind::extension:
            caveats.push_back(field + ": extension not known to split; order/exponent bookkeeping only");
            add_caveat(caveats, field + " (sub)", g.sub());
            add_caveat(caveats, field + " (quot)", g.quot());
            return;
        case AbGroup::Kind::direct_sum:
            for (const AbGroup& s : g.summands())
                if (s.kind() != AbGroup::Kind::known && s.kind() != AbGroup::Kind::full_qmodz)
                    add_caveat(caveats, field, s);
            return;
        default:
            return;
    }
}

}  // namespace

BrauerReport analyze(const PinchingConfig& config) {
    {
        auto violations = pinch::validate(config);
        if (!violations.empty()) {
            std::string msg = "configuration rejected:";
            for (const auto& v : violations) msg += " [" + v.code + "] " + v.message + ";";
            throw Error(Errc::config_error, msg);
        }
    }

    const auto& cover = config.cover;
    BrauerReport r;
    r.intersection_product = intersection_product(config);
    r.amitsur_pinched = amitsur_pinched(config);
    KernelData k = kernel_phi1(config);
    r.amitsur_quotient = k.amitsur_quotient;
    r.ker_phi1 = k.ker_phi1;
    r.h2_mu = h2_mu(config);
    r.coker_phi_a = coker_phia(config);
    r.br1_pinched = br1_pinched(config);

    r.index.cover = pinch::cover_index(cover);
    if (!config.points.empty()) {
        r.index.locus = pinch::locus_index(config.points);
        if (r.index.cover) r.index.constraint_divisor = gcd_of(*r.index.cover, *r.index.locus);
    }
    if (roquette_applicable(config)) {
        RoquetteResult rl = roquette_lichtenbaum(config);
        r.index.rl_order = rl.order;
        r.index.rl_equals_index = rl.equals_index;
    }

    bool uht = pinch::is_universal_homeomorphism(config);
    bool riso = pinch::is_residue_iso(config);
    bool insep_fiber = false;
    for (const auto& p : config.points)
        for (const auto& f : p.fibers)
            insep_fiber = insep_fiber || (f.purely_inseparable() && f.total_degree() > 1);

    auto tag = [&r](const char* t, std::string detail) {
        r.applied_theorems.push_back({t, std::move(detail)});
    };
    if (config.points.empty()) {
        tag("no-pinching", "empty pinch locus: every invariant equals the cover's");
    } else {
        tag("amitsur-intersection",
            "the pinched Amitsur subgroup is the intersection of the cover Amitsur subgroup with the "
            "relative Brauer groups of the pinch residues");
        if (cover.base_field.is_local())
            tag("relative-brauer-local",
                "over a local field the relative Brauer group of a degree-n extension is cyclic of order n");
        tag("kernel-extension",
            "the pullback kernel is an extension of the cokernel of the quotient injection by the "
            "Amitsur quotient");
        tag("annihilator-bound",
            "the intersection product is annihilated by the lcm of the fiber indices (" +
                std::to_string(pinch::annihilator_bound(config)) + ")");
        if (r.index.constraint_divisor)
            tag("index-divisibility",
                "the pinched index divides gcd(cover index, locus index) = " +
                    std::to_string(*r.index.constraint_divisor));
    }
    if (cover.kind == pinch::CoverKind::ch0_trivial)
        tag("split-section",
            "a CH0-trivial cover splits the pullback sequence: Br_1 of the pinched variety is Br(base) "
            "plus the intersection product");
    if (cover.kind == pinch::CoverKind::severi_brauer)
        tag("severi-brauer-class",
            "the Amitsur subgroup of a Severi-Brauer cover is generated by its class and Br_a vanishes");
    if (insep_fiber)
        tag("purely-inseparable-torsion",
            "a purely inseparable fiber of degree p^d contributes the p^d-torsion of the residue-field "
            "Brauer group");
    if (uht && !config.points.empty())
        tag("universal-homeomorphism",
            "singleton purely inseparable fibers: the obstruction group vanishes and the pullback is "
            "surjective");
    if (riso && !config.points.empty())
        tag("seminormalization-step",
            "residue fields are unchanged, so the pullback on algebraic Brauer groups is an isomorphism");
    if (r.index.rl_order)
        tag("index-gcd", "the pinched Amitsur order equals gcd(cover index, locus index) = " +
                             std::to_string(*r.index.rl_order) + ", which is the pinched index");

    add_caveat(r.caveats, "intersectionProduct", r.intersection_product);
    if (!r.amitsur_pinched.is_known())
        r.caveats.push_back("amitsurPinched: " + (r.amitsur_pinched.note().empty()
                                                      ? std::string("order undetermined; exponent bound only")
                                                      : r.amitsur_pinched.note()));
    add_caveat(r.caveats, "amitsurQuotient", r.amitsur_quotient);
    add_caveat(r.caveats, "kerPhi1", r.ker_phi1);
    add_caveat(r.caveats, "cokerPhiA", r.coker_phi_a);
    add_caveat(r.caveats, "h2Mu", r.h2_mu);
    add_caveat(r.caveats, "br1Pinched", r.br1_pinched);

    return r;
}

}  // namespace brpinch::theorems
