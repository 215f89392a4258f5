#pragma once

// Data model for a pinching configuration: a cover with its Brauer data,
// and the residue-field picture over each pinch point. Index arithmetic
// and structural validation live here; the formula engine is in theorems.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brpinch/fields.hpp"
#include "brpinch/qz.hpp"

namespace brpinch::pinch {

/// One pinch point: the residue extension of the base field, and the
/// residue extensions of the (finitely many) cover points above it.
struct PinchPoint {
    std::string label;
    fields::ExtensionSpec residue;              // over the base field
    std::vector<fields::ExtensionSpec> fibers;  // over the residue field

    bool operator==(const PinchPoint&) const = default;
};

enum class CoverKind : unsigned char { ch0_trivial, severi_brauer, smooth_curve, regular_curve, general };

const char* cover_kind_name(CoverKind k);

struct CoverData {
    fields::FieldSpec base_field;
    qz::QmodZSubgroup amitsur;  // kernel of Br(base) -> Br(cover)
    qz::AbGroup br_a;           // cokernel of Br(base) -> Br_1(cover)
    std::optional<qz::AbGroup> br1;
    std::optional<std::vector<Int>> closed_point_degrees;
    std::optional<Int> declared_index;
    CoverKind kind = CoverKind::general;
    std::optional<Int> class_order;  // severi_brauer only
    bool smooth_normalization = false;

    bool operator==(const CoverData&) const = default;
};

struct PinchingConfig {
    CoverData cover;
    std::vector<PinchPoint> points;  // empty list = no pinching

    bool operator==(const PinchingConfig&) const = default;
};

struct Violation {
    std::string code;
    std::string message;
};

/// gcd of closed-point degrees; the index of the scheme they live on.
Int index_from_degrees(std::span<const Int> degrees);
/// gcd of the fiber degrees over one point.
Int fiber_index(const PinchPoint& p);
/// gcd of the residue degrees over all points.
Int locus_index(std::span<const PinchPoint> points);
/// lcm of the fiber indices; annihilates every intersection factor.
Int annihilator_bound(const PinchingConfig& config);
/// gcd(cover index, locus index); the pinched index divides this.
Int pinched_index_constraint(const PinchingConfig& config);

std::optional<Int> cover_index(const CoverData& cover);

/// Every point has a single fiber and that fiber is purely inseparable.
bool is_universal_homeomorphism(const PinchingConfig& config);
/// Universal homeomorphism with every fiber of degree 1.
bool is_residue_iso(const PinchingConfig& config);

/// Intersection of the relative Brauer groups of the fibers over one point.
qz::QmodZSubgroup fiber_brauer_intersection(const PinchPoint& p);

/// Structural validation; never throws. An empty result means the config
/// is accepted by every theorems-module operation.
std::vector<Violation> validate(const PinchingConfig& config);

}  // namespace brpinch::pinch
