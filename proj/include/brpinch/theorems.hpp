#pragma once

// The formula engine: turns a validated pinching configuration into group
// descriptors for the algebraic Brauer group of the pinched variety, the
// Amitsur subgroup, the kernel/cokernel of the pullback, and index facts.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brpinch/pinch.hpp"
#include "brpinch/qz.hpp"

namespace brpinch::theorems {

struct KernelData {
    qz::AbGroup ker_phi1;
    qz::AbGroup amitsur_quotient;  // cover Amitsur / pinched Amitsur
    qz::AbGroup coker_injection;   // cokernel of the quotient's embedding
    bool split = false;            // split onto the intersection product
};

struct IndexFacts {
    std::optional<Int> cover;
    std::optional<Int> locus;
    std::optional<Int> constraint_divisor;
    std::optional<Int> rl_order;
    std::optional<bool> rl_equals_index;

    bool operator==(const IndexFacts&) const = default;
};

struct AppliedTheorem {
    std::string tag;
    std::string detail;

    bool operator==(const AppliedTheorem&) const = default;
};

struct BrauerReport {
    qz::AbGroup intersection_product;
    qz::QmodZSubgroup amitsur_pinched = qz::QmodZSubgroup::cyclic(1);
    qz::AbGroup amitsur_quotient;
    qz::AbGroup ker_phi1;
    qz::AbGroup coker_phi_a;
    qz::AbGroup h2_mu;
    qz::AbGroup br1_pinched;
    IndexFacts index;
    std::vector<AppliedTheorem> applied_theorems;
    std::vector<std::string> caveats;

    bool operator==(const BrauerReport&) const = default;
};

struct RoquetteResult {
    Int order;
    bool equals_index;  // the computed order is asserted equal to the index
};

struct ChainResult {
    bool ok;
    std::size_t steps;
    std::string message;
};

/// Per-point intersection of the relative Brauer groups of the fibers.
std::vector<qz::QmodZSubgroup> point_intersections(const pinch::PinchingConfig& config);
/// Product over points of the per-point intersections.
qz::AbGroup intersection_product(const pinch::PinchingConfig& config);
/// Cover Amitsur subgroup intersected with the relative Brauer groups of
/// the pinch residues; equals the Amitsur subgroup of the pinched variety.
qz::QmodZSubgroup amitsur_pinched(const pinch::PinchingConfig& config);
/// Kernel of the pullback on algebraic Brauer groups, as an extension of
/// the cokernel of the quotient injection by the Amitsur quotient.
KernelData kernel_phi1(const pinch::PinchingConfig& config);
/// The obstruction group receiving the cokernel of the Br_a pullback;
/// vanishes for universal homeomorphisms.
qz::AbGroup h2_mu(const pinch::PinchingConfig& config);
qz::AbGroup coker_phia(const pinch::PinchingConfig& config);
/// Algebraic Brauer group of the pinched variety, exact where a splitting
/// or vanishing rule applies, extension bookkeeping otherwise.
qz::AbGroup br1_pinched(const pinch::PinchingConfig& config);
/// Checks that a chain of residue-isomorphic one-point pinchings induces
/// an isomorphism on the algebraic Brauer group at every step.
ChainResult seminormalization_chain(std::span<const pinch::PinchingConfig> steps);
/// Order of the pinched Amitsur subgroup over a local base with a smooth
/// cover: gcd of cover index and locus index, which equals the index.
RoquetteResult roquette_lichtenbaum(const pinch::PinchingConfig& config);
bool roquette_applicable(const pinch::PinchingConfig& config);

/// Full report; requires validate(config) to be empty.
BrauerReport analyze(const pinch::PinchingConfig& config);

}  // namespace brpinch::theorems
