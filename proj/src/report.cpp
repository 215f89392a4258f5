#include "brpinch/report.hpp"

#include <sstream>

namespace brpinch::cli {

OracleOutcome OracleOutcome::from(const oracle::VerifyResult& r) {
    OracleOutcome o;
    switch (r.status) {
        case oracle::VerifyStatus::pass:
            o.kind = Kind::pass;
            break;
        case oracle::VerifyStatus::fail: {
            o.kind = Kind::fail;
            std::string d;
            for (const auto& s : r.discrepancies) {
                if (!d.empty()) d += "; ";
                d += s;
            }
            o.detail = d;
            break;
        }
        case oracle::VerifyStatus::skipped:
            o.kind = Kind::skipped;
            o.detail = r.skip_reason;
            break;
    }
    return o;
}

std::string OracleOutcome::str() const {
    switch (kind) {
        case Kind::not_run: return "not-run";
        case Kind::pass: return "pass";
        case Kind::fail: return detail.empty() ? "fail" : "fail: " + detail;
        case Kind::skipped: return detail.empty() ? "skipped" : "skipped: " + detail;
    }
    return "not-run";
}

namespace {

Json group_json(const qz::AbGroup& g) {
    Json j;
    j["display"] = g.display();
    if (g.order().is_finite())
        j["order"] = g.order().value();
    else if (g.order().is_infinite())
        j["order"] = "infinite";
    if (g.exponent_bound()) j["exponentDivides"] = *g.exponent_bound();
    if (!g.note().empty()) j["note"] = g.note();
    return j;
}

Json subgroup_json(const qz::QmodZSubgroup& g) {
    Json j;
    j["display"] = g.display();
    if (g.is_known()) j["order"] = g.order();
    if (g.exponent_bound()) j["exponentDivides"] = *g.exponent_bound();
    if (!g.note().empty()) j["note"] = g.note();
    return j;
}

}  // namespace

Json report_document(const pinch::PinchingConfig& config, const theorems::BrauerReport& report,
                     const OracleOutcome& oracle_outcome) {
    Json j;
    j["schemaVersion"] = 1;
    j["input"] = config_echo(config);

    Json results;
    results["intersectionProduct"] = group_json(report.intersection_product);
    results["amitsurPinched"] = subgroup_json(report.amitsur_pinched);
    results["amitsurQuotient"] = group_json(report.amitsur_quotient);
    results["kerPhi1"] = group_json(report.ker_phi1);
    results["cokerPhiA"] = group_json(report.coker_phi_a);
    results["h2Mu"] = group_json(report.h2_mu);
    results["br1Pinched"] = group_json(report.br1_pinched);
    j["results"] = std::move(results);

    Json index;
    if (report.index.cover) index["cover"] = *report.index.cover;
    if (report.index.locus) index["locus"] = *report.index.locus;
    if (report.index.constraint_divisor) index["constraintDivisor"] = *report.index.constraint_divisor;
    if (report.index.rl_order) index["rlOrder"] = *report.index.rl_order;
    if (report.index.rl_equals_index) index["rlEqualsIndex"] = *report.index.rl_equals_index;
    j["index"] = std::move(index);

    Json applied = Json::array();
    for (const auto& t : report.applied_theorems) applied.push_back(t.tag + ": " + t.detail);
    j["appliedTheorems"] = std::move(applied);

    j["caveats"] = report.caveats;
    j["oracle"] = oracle_outcome.str();
    return j;
}

std::string report_json(const pinch::PinchingConfig& config, const theorems::BrauerReport& report,
                        const OracleOutcome& oracle_outcome) {
    return report_document(config, report, oracle_outcome).dump(2);
}

std::string report_text(const pinch::PinchingConfig& config, const theorems::BrauerReport& report,
                        const OracleOutcome& oracle_outcome) {
    std::ostringstream out;
    const auto& cover = config.cover;

    auto row = [&out](const std::string& name, const std::string& value) {
        out << "  " << name;
        for (std::size_t i = name.size(); i < 22; ++i) out << ' ';
        out << value << "\n";
    };

    out << "configuration\n";
    row("base field", cover.base_field.display());
    std::string ck = pinch::cover_kind_name(cover.kind);
    if (cover.class_order) ck += ", class order " + std::to_string(*cover.class_order);
    if (cover.smooth_normalization) ck += ", smooth normalization";
    row("cover", ck);
    row("cover Amitsur", cover.amitsur.display());
    if (cover.br1) row("cover Br1", cover.br1->display());
    if (config.points.empty()) {
        row("pinch locus", "empty");
    } else {
        for (const auto& p : config.points) {
            std::string fibers;
            for (std::size_t i = 0; i < p.fibers.size(); ++i) {
                if (i) fibers += ", ";
                fibers += "deg " + std::to_string(p.fibers[i].total_degree());
                if (p.fibers[i].inseparable_degree() > 1)
                    fibers += " (insep " + std::to_string(p.fibers[i].inseparable_degree()) + ")";
            }
            row("point " + p.label,
                "residue degree " + std::to_string(p.residue.total_degree()) + "; fibers " + fibers);
        }
    }

    out << "results\n";
    row("intersection product", report.intersection_product.display());
    row("Amitsur (pinched)", report.amitsur_pinched.display());
    row("Amitsur quotient", report.amitsur_quotient.display());
    row("ker phi1*", report.ker_phi1.display());
    row("coker phia*", report.coker_phi_a.display());
    row("H2(mu)", report.h2_mu.display());
    row("Br1 (pinched)", report.br1_pinched.display());

    out << "index\n";
    row("cover", report.index.cover ? std::to_string(*report.index.cover) : "n/a");
    row("locus", report.index.locus ? std::to_string(*report.index.locus) : "n/a");
    row("constraint divisor",
        report.index.constraint_divisor ? std::to_string(*report.index.constraint_divisor) : "n/a");
    if (report.index.rl_order)
        row("pinched Amitsur order",
            std::to_string(*report.index.rl_order) +
                (report.index.rl_equals_index.value_or(false) ? " (= pinched index)" : ""));

    out << "applied\n";
    for (const auto& t : report.applied_theorems) out << "  - " << t.tag << ": " << t.detail << "\n";
    if (!report.caveats.empty()) {
        out << "caveats\n";
        for (const auto& c : report.caveats) out << "  - " << c << "\n";
    }
    row("oracle", oracle_outcome.str());
    return out.str();
}

}  // namespace brpinch::cli
