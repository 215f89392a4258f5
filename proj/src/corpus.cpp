#include "brpinch/corpus.hpp"

#include <array>
#include <ostream>

#include "brpinch/report.hpp"

namespace brpinch::cli {

// Expected reports live in a generated file (corpus_expected.inc) so they
// can be refreshed with `brpinch corpus --dump` when formulas change.
namespace corpus_data {
#include "corpus_expected.inc"
}

namespace {

// A projective line over a p-adic field, pinched at one rational point whose
// fiber is a pair of conjugate quadratic points: the split decomposition
// contributes one Z/2 summand.
constexpr std::string_view kPinchedLine = R"({
  "schemaVersion": 1,
  "field": {"kind": "p-adic", "p": 5},
  "cover": {
    "coverKind": "ch0-trivial",
    "br1": {"type": "base-brauer"},
    "closedPointDegrees": [1],
    "smoothNormalization": true
  },
  "points": [
    {"label": "y", "residueDegree": 1, "fibers": [{"degree": 2}, {"degree": 2}]}
  ]
})";

// A conic without rational points over a p-adic field, with a quadratic
// point crushed onto a rational point. The pinched curve gains index 1 and
// its Amitsur subgroup dies; the pullback kernel is the class group Z/2.
constexpr std::string_view kPinchedConic = R"({
  "schemaVersion": 1,
  "field": {"kind": "p-adic", "p": 3},
  "cover": {
    "coverKind": "severi-brauer",
    "classOrder": 2,
    "br1": {"type": "q-mod-z"},
    "closedPointDegrees": [2],
    "smoothNormalization": true
  },
  "points": [
    {"label": "y", "residueDegree": 1, "fibers": [{"degree": 2}]}
  ]
})";

// A regular curve with a rational point over an imperfect abstract field,
// pinched along one purely inseparable quadratic point: the kernel is the
// 2-torsion of the base Brauer group, known only by its exponent bound.
constexpr std::string_view kWoundCurve = R"({
  "schemaVersion": 1,
  "field": {"kind": "abstract", "p": 2},
  "cover": {
    "coverKind": "regular-curve",
    "amitsurOrder": 1,
    "index": 1,
    "smoothNormalization": false
  },
  "points": [
    {"label": "P-inf", "residueDegree": 1, "fibers": [{"degree": 2, "separableDegree": 1}]}
  ]
})";

// Regular completions of forms of the affine line over a local function
// field: one purely inseparable fiber of degree 2^d splits off an exact
// Z/2^d summand next to Br of the base.
constexpr std::string_view kInsepLineD1 = R"({
  "schemaVersion": 1,
  "field": {"kind": "local-function", "p": 2},
  "cover": {
    "coverKind": "ch0-trivial",
    "br1": {"type": "base-brauer"},
    "closedPointDegrees": [1],
    "smoothNormalization": true
  },
  "points": [
    {"label": "P", "residueDegree": 1, "fibers": [{"degree": 2, "separableDegree": 1}]}
  ]
})";

constexpr std::string_view kInsepLineD2 = R"({
  "schemaVersion": 1,
  "field": {"kind": "local-function", "p": 2},
  "cover": {
    "coverKind": "ch0-trivial",
    "br1": {"type": "base-brauer"},
    "closedPointDegrees": [1],
    "smoothNormalization": true
  },
  "points": [
    {"label": "P", "residueDegree": 1, "fibers": [{"degree": 4, "separableDegree": 1}]}
  ]
})";

constexpr std::string_view kInsepLineD3 = R"({
  "schemaVersion": 1,
  "field": {"kind": "local-function", "p": 2},
  "cover": {
    "coverKind": "ch0-trivial",
    "br1": {"type": "base-brauer"},
    "closedPointDegrees": [1],
    "smoothNormalization": true
  },
  "points": [
    {"label": "P", "residueDegree": 1, "fibers": [{"degree": 8, "separableDegree": 1}]}
  ]
})";

// Index arithmetic: a smooth cover of index 4 pinched along a degree-6
// point; the pinched Amitsur subgroup has order gcd(4, 6) = 2.
constexpr std::string_view kIndexGcd = R"({
  "schemaVersion": 1,
  "field": {"kind": "p-adic", "p": 3},
  "cover": {
    "coverKind": "smooth-curve",
    "amitsurOrder": 4,
    "closedPointDegrees": [4, 12],
    "smoothNormalization": true
  },
  "points": [
    {"label": "y", "residueDegree": 6, "fibers": [{"degree": 2}, {"degree": 2}]}
  ]
})";

// One seminormalization step: the residue field does not change, so the
// pullback is an isomorphism and the cover group passes through.
constexpr std::string_view kSeminormalStep = R"({
  "schemaVersion": 1,
  "field": {"kind": "p-adic", "p": 5},
  "cover": {
    "coverKind": "regular-curve",
    "amitsurOrder": 2,
    "brAOrder": 1,
    "br1": {"type": "cyclic", "order": 3},
    "closedPointDegrees": [2, 4],
    "smoothNormalization": false
  },
  "points": [
    {"label": "x", "residueDegree": 2, "fibers": [{"degree": 1}]}
  ]
})";

// Empty pinch locus: the regression baseline where every invariant equals
// the cover's.
constexpr std::string_view kEmptyLocus = R"({
  "schemaVersion": 1,
  "field": {"kind": "p-adic", "p": 2},
  "cover": {
    "coverKind": "smooth-curve",
    "amitsurOrder": 3,
    "closedPointDegrees": [3, 6],
    "smoothNormalization": true
  },
  "points": []
})";

constexpr std::array<CorpusEntry, 9> kEntries{{
    {"pinched-line", kPinchedLine, corpus_data::kPinchedLineExpected},
    {"pinched-conic", kPinchedConic, corpus_data::kPinchedConicExpected},
    {"wound-curve", kWoundCurve, corpus_data::kWoundCurveExpected},
    {"insep-line-d1", kInsepLineD1, corpus_data::kInsepLineD1Expected},
    {"insep-line-d2", kInsepLineD2, corpus_data::kInsepLineD2Expected},
    {"insep-line-d3", kInsepLineD3, corpus_data::kInsepLineD3Expected},
    {"index-gcd", kIndexGcd, corpus_data::kIndexGcdExpected},
    {"seminormal-step", kSeminormalStep, corpus_data::kSeminormalStepExpected},
    {"empty-locus", kEmptyLocus, corpus_data::kEmptyLocusExpected},
}};

}  // namespace

std::span<const CorpusEntry> corpus_entries() {
    return kEntries;
}

std::string corpus_actual_report(const CorpusEntry& entry) {
    pinch::PinchingConfig config = parse_config(entry.config_json);
    theorems::BrauerReport report = theorems::analyze(config);
    oracle::VerifyResult vr = oracle::verify_report(config, report, oracle::Caps::from_env());
    return report_json(config, report, OracleOutcome::from(vr));
}

CorpusOutcome run_corpus(std::ostream* diagnostics) {
    CorpusOutcome outcome;
    for (const CorpusEntry& entry : corpus_entries()) {
        std::string actual = corpus_actual_report(entry);
        if (actual == entry.expected_report_json) {
            if (diagnostics) *diagnostics << "ok " << entry.name << "\n";
            continue;
        }
        outcome.pass = false;
        outcome.mismatched.emplace_back(entry.name);
        if (diagnostics) {
            *diagnostics << "mismatch " << entry.name << "\n--- expected ---\n"
                         << entry.expected_report_json << "\n--- actual ---\n"
                         << actual << "\n";
        }
    }
    return outcome;
}

}  // namespace brpinch::cli
