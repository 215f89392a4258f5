#include "brpinch/pinch.hpp"

#include "brpinch/errors.hpp"

namespace brpinch::pinch {

const char* cover_kind_name(CoverKind k) {
    switch (k) {
        case CoverKind::ch0_trivial: return "ch0-trivial";
        case CoverKind::severi_brauer: return "severi-brauer";
        case CoverKind::smooth_curve: return "smooth-curve";
        case CoverKind::regular_curve: return "regular-curve";
        case CoverKind::general: return "general";
    }
    return "general";
}

Int index_from_degrees(std::span<const Int> degrees) {
    if (degrees.empty())
        throw Error(Errc::invalid_argument, "index undefined without closed-point degrees");
    Int g = 0;
    for (Int d : degrees) {
        if (d < 1) throw Error(Errc::invalid_argument, "closed-point degrees must be positive");
        g = gcd_of(g, d);
    }
    return g;
}

Int fiber_index(const PinchPoint& p) {
    Int g = 0;
    for (const auto& f : p.fibers) g = gcd_of(g, f.total_degree());
    return g == 0 ? 1 : g;
}

Int locus_index(std::span<const PinchPoint> points) {
    if (points.empty()) throw Error(Errc::invalid_argument, "locus index undefined for an empty locus");
    Int g = 0;
    for (const auto& p : points) g = gcd_of(g, p.residue.total_degree());
    return g;
}

Int annihilator_bound(const PinchingConfig& config) {
    if (config.points.empty())
        throw Error(Errc::invalid_argument, "annihilator bound undefined for an empty locus");
    Int l = 1;
    for (const auto& p : config.points) l = lcm_of(l, fiber_index(p));
    return l;
}

std::optional<Int> cover_index(const CoverData& cover) {
    if (cover.closed_point_degrees) return index_from_degrees(*cover.closed_point_degrees);
    return cover.declared_index;
}

Int pinched_index_constraint(const PinchingConfig& config) {
    auto ci = cover_index(config.cover);
    if (!ci)
        throw Error(Errc::incomplete_configuration,
                    "cover index data (closedPointDegrees or index) is required");
    if (config.points.empty())
        throw Error(Errc::invalid_argument, "index constraint undefined for an empty locus");
    return gcd_of(*ci, locus_index(config.points));
}

bool is_universal_homeomorphism(const PinchingConfig& config) {
    for (const auto& p : config.points)
        if (p.fibers.size() != 1 || !p.fibers.front().purely_inseparable()) return false;
    return true;
}

bool is_residue_iso(const PinchingConfig& config) {
    if (!is_universal_homeomorphism(config)) return false;
    for (const auto& p : config.points)
        if (p.fibers.front().total_degree() != 1) return false;
    return true;
}

qz::QmodZSubgroup fiber_brauer_intersection(const PinchPoint& p) {
    qz::QmodZSubgroup acc = qz::QmodZSubgroup::full();
    for (const auto& f : p.fibers) acc = qz::intersect(acc, fields::relative_brauer(f));
    return acc;
}

namespace {

void expect(std::vector<Violation>& out, bool ok, const char* code, std::string message) {
    if (!ok) out.push_back({code, std::move(message)});
}

}  // namespace

std::vector<Violation> validate(const PinchingConfig& config) {
    std::vector<Violation> v;
    const CoverData& cover = config.cover;

    expect(v, !cover.amitsur.is_full(), "amitsur-not-finite",
           "the Amitsur subgroup has finite exponent; Q/Z is not a legal value");

    // The Amitsur subgroup lives inside Br(base).
    if (cover.amitsur.is_known()) {
        Int m = cover.amitsur.order();
        qz::AbGroup bk = fields::brauer_group(cover.base_field);
        if (bk.exponent_bound())
            expect(v, *bk.exponent_bound() % m == 0, "amitsur-not-subgroup-of-base-brauer",
                   "Amitsur order " + std::to_string(m) + " exceeds Br(" + cover.base_field.display() + ")");
    }

    switch (cover.kind) {
        case CoverKind::ch0_trivial:
            expect(v, cover.amitsur.is_trivial(), "ch0-trivial-amitsur-mismatch",
                   "a CH0-trivial cover has trivial Amitsur subgroup");
            expect(v, cover.br_a.is_trivial(), "ch0-trivial-bra-mismatch",
                   "a CH0-trivial cover has trivial Br_a");
            if (cover.br1)
                expect(v, *cover.br1 == fields::brauer_group(cover.base_field), "ch0-trivial-br1-mismatch",
                       "a CH0-trivial cover has Br_1 equal to Br of the base field");
            break;
        case CoverKind::severi_brauer: {
            if (!cover.class_order) {
                v.push_back({"severi-brauer-class-missing", "a Severi-Brauer cover needs its class order"});
                break;
            }
            expect(v, cover.amitsur.is_known() && cover.amitsur.order() == *cover.class_order,
                   "severi-brauer-amitsur-mismatch",
                   "the Amitsur subgroup of a Severi-Brauer cover is generated by its class");
            expect(v, cover.br_a.is_trivial(), "severi-brauer-bra-mismatch",
                   "a Severi-Brauer cover has trivial Br_a");
            break;
        }
        default:
            break;
    }

    if (cover.closed_point_degrees) {
        bool positive = true;
        for (Int d : *cover.closed_point_degrees) positive = positive && d >= 1;
        expect(v, !cover.closed_point_degrees->empty() && positive, "closed-point-degrees-invalid",
               "closedPointDegrees must be a nonempty list of positive integers");
        if (cover.declared_index && positive && !cover.closed_point_degrees->empty())
            expect(v, index_from_degrees(*cover.closed_point_degrees) == *cover.declared_index,
                   "index-mismatch", "declared index does not equal the gcd of closedPointDegrees");
    }

    std::optional<Int> ci = cover.closed_point_degrees && !cover.closed_point_degrees->empty()
                                ? std::optional<Int>(index_from_degrees(*cover.closed_point_degrees))
                                : cover.declared_index;
    if (ci) {
        expect(v, *ci >= 1, "index-invalid", "the index must be a positive integer");
        if (cover.amitsur.is_known())
            expect(v, *ci % cover.amitsur.order() == 0, "amitsur-order-exceeds-index",
                   "the Amitsur subgroup is annihilated by the index");
        if (cover.kind == CoverKind::ch0_trivial)
            expect(v, *ci == 1, "ch0-trivial-index-mismatch", "a CH0-trivial cover has index 1");
        if (cover.kind == CoverKind::severi_brauer && cover.class_order) {
            expect(v, *ci % *cover.class_order == 0, "severi-brauer-index-mismatch",
                   "the class order of a Severi-Brauer cover divides its index");
            if (cover.base_field.is_local())
                expect(v, *ci == *cover.class_order, "severi-brauer-index-mismatch",
                       "over a local base the index of a Severi-Brauer cover equals its class order");
        }
        if (cover.base_field.is_local() && cover.smooth_normalization && cover.amitsur.is_known())
            expect(v, cover.amitsur.order() == *ci, "smooth-cover-amitsur-index-mismatch",
                   "for a smooth cover over a local field the Amitsur order equals the cover index");
    }

    for (const auto& p : config.points) {
        expect(v, p.residue.base() == cover.base_field, "residue-base-mismatch",
               "point '" + p.label + "': residue extension is not over the base field");
        expect(v, !p.fibers.empty(), "empty-fiber-set",
               "point '" + p.label + "': the fiber over a pinch point is nonempty");
        fields::FieldSpec kappa = fields::residue_field(p.residue);
        for (const auto& f : p.fibers)
            expect(v, f.base() == kappa, "fiber-base-mismatch",
                   "point '" + p.label + "': fiber extension is not over the residue field");
    }

    // Restriction constraint: the image of the cover Amitsur subgroup in
    // Br(residue) must land inside the fiber intersection. Checkable in the
    // regimes where restriction scales the invariant by the residue degree.
    bool exact_restriction = cover.base_field.is_local() ||
                             cover.base_field.kind() == fields::FieldSpec::Kind::real_closed ||
                             cover.base_field.has_trivial_brauer();
    if (cover.amitsur.is_known() && exact_restriction) {
        Int m = cover.amitsur.order();
        for (const auto& p : config.points) {
            if (p.fibers.empty() || p.residue.base() != cover.base_field) continue;
            Int image_order = m / gcd_of(m, p.residue.total_degree());
            qz::QmodZSubgroup factor = fiber_brauer_intersection(p);
            if (factor.exponent_bound())
                expect(v, *factor.exponent_bound() % image_order == 0,
                       "amitsur-image-escapes-intersection",
                       "point '" + p.label + "': the restricted Amitsur class has order " +
                           std::to_string(image_order) +
                           " but the fiber intersection only admits exponent " +
                           std::to_string(*factor.exponent_bound()));
        }
    }

    return v;
}

}  // namespace brpinch::pinch
