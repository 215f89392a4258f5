#include "brpinch/config.hpp"

#include <algorithm>

#include "brpinch/errors.hpp"

namespace brpinch::cli {

namespace {

using fields::ExtensionSpec;
using fields::FieldSpec;
using pinch::CoverKind;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
    throw Error(Errc::schema_error, path + ": " + what);
}

void expect_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed,
                 std::initializer_list<const char*> required) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    for (const auto& item : j.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](const char* k) { return item.key() == k; });
        if (!known) schema_fail(path, "unknown key '" + item.key() + "'");
    }
    for (const char* k : required)
        if (!j.contains(k)) schema_fail(path, std::string("missing required key '") + k + "'");
}

Int get_int(const Json& j, const std::string& path, Int min_value) {
    if (!j.is_number_integer() || j.is_number_float())
        schema_fail(path, "expected an integer");
    Int v = j.get<Int>();
    if (v < min_value) schema_fail(path, "value must be >= " + std::to_string(min_value));
    return v;
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) schema_fail(path, "expected a string");
    return j.get<std::string>();
}

FieldSpec parse_field(const Json& j, const std::string& path) {
    expect_keys(j, path, {"kind", "p"}, {"kind"});
    std::string kind = get_string(j.at("kind"), path + ".kind");
    auto p_of = [&](Int dflt, bool required) -> Int {
        if (!j.contains("p")) {
            if (required) schema_fail(path, "kind '" + kind + "' requires 'p'");
            return dflt;
        }
        return get_int(j.at("p"), path + ".p", 1);
    };
    auto no_p = [&]() {
        if (j.contains("p")) schema_fail(path, "kind '" + kind + "' does not take 'p'");
    };
    try {
        if (kind == "p-adic") return FieldSpec::padic(p_of(0, true));
        if (kind == "local-function") return FieldSpec::local_function(p_of(0, true));
        if (kind == "finite") return FieldSpec::finite(p_of(0, true));
        if (kind == "real-closed") { no_p(); return FieldSpec::real_closed(); }
        if (kind == "separably-closed") { no_p(); return FieldSpec::separably_closed(); }
        if (kind == "algebraically-closed") { no_p(); return FieldSpec::algebraically_closed(); }
        if (kind == "abstract-perfect") return FieldSpec::abstract_perfect(p_of(1, false));
        if (kind == "abstract") return FieldSpec::abstract(p_of(1, false));
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
    schema_fail(path + ".kind", "unknown field kind '" + kind + "'");
}

CoverKind parse_cover_kind(const Json& j, const std::string& path) {
    std::string s = get_string(j, path);
    if (s == "ch0-trivial") return CoverKind::ch0_trivial;
    if (s == "severi-brauer") return CoverKind::severi_brauer;
    if (s == "smooth-curve") return CoverKind::smooth_curve;
    if (s == "regular-curve") return CoverKind::regular_curve;
    if (s == "general") return CoverKind::general;
    schema_fail(path, "unknown cover kind '" + s + "'");
}

qz::AbGroup parse_br1(const Json& j, const std::string& path, const FieldSpec& base) {
    expect_keys(j, path, {"type", "order", "factors"}, {"type"});
    std::string type = get_string(j.at("type"), path + ".type");
    auto forbid = [&](const char* key) {
        if (j.contains(key))
            schema_fail(path, "type '" + type + "' does not take '" + key + "'");
    };
    if (type == "trivial") { forbid("order"); forbid("factors"); return qz::AbGroup::trivial(); }
    if (type == "q-mod-z") { forbid("order"); forbid("factors"); return qz::AbGroup::full_qmodz(); }
    if (type == "base-brauer") { forbid("order"); forbid("factors"); return fields::brauer_group(base); }
    if (type == "cyclic") {
        forbid("factors");
        if (!j.contains("order")) schema_fail(path, "type 'cyclic' requires 'order'");
        Int n = get_int(j.at("order"), path + ".order", 1);
        return n == 1 ? qz::AbGroup::trivial() : qz::AbGroup::known({n});
    }
    if (type == "factors") {
        forbid("order");
        if (!j.contains("factors") || !j.at("factors").is_array())
            schema_fail(path, "type 'factors' requires an array 'factors'");
        std::vector<Int> fs;
        for (std::size_t i = 0; i < j.at("factors").size(); ++i)
            fs.push_back(get_int(j.at("factors")[i], path + ".factors[" + std::to_string(i) + "]", 1));
        try {
            return qz::AbGroup::of_cyclic_orders(std::move(fs));
        } catch (const Error& e) {
            schema_fail(path + ".factors", e.what());
        }
    }
    schema_fail(path + ".type", "unknown group type '" + type + "'");
}

ExtensionSpec parse_extension(const FieldSpec& base, Int degree, std::optional<Int> separable,
                              const std::string& path) {
    // The separable degree defaults to the full degree (no inseparability).
    Int sep = separable.value_or(degree);
    try {
        return ExtensionSpec(base, degree, sep);
    } catch (const Error& e) {
        throw Error(Errc::config_error, path + ": " + e.what());
    }
}

}  // namespace

pinch::PinchingConfig parse_config(std::string_view json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        // Recover a line/column position from the byte offset.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < json_text.size() && i + 1 < static_cast<std::size_t>(e.byte); ++i) {
            if (json_text[i] == '\n') { ++line; col = 1; } else { ++col; }
        }
        throw Error(Errc::parse_error, "malformed JSON at line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": " + e.what());
    }

    expect_keys(doc, "$", {"schemaVersion", "field", "cover", "points"},
                {"schemaVersion", "field", "cover", "points"});
    if (get_int(doc.at("schemaVersion"), "$.schemaVersion", 1) != 1)
        schema_fail("$.schemaVersion", "unsupported schema version");

    FieldSpec base = parse_field(doc.at("field"), "$.field");

    const Json& jc = doc.at("cover");
    expect_keys(jc, "$.cover",
                {"coverKind", "classOrder", "amitsurOrder", "brAOrder", "br1", "closedPointDegrees",
                 "index", "smoothNormalization"},
                {"coverKind", "smoothNormalization"});
    pinch::CoverData cover{base,
                           qz::QmodZSubgroup::cyclic(1),
                           qz::AbGroup::trivial(),
                           std::nullopt,
                           std::nullopt,
                           std::nullopt,
                           parse_cover_kind(jc.at("coverKind"), "$.cover.coverKind"),
                           std::nullopt,
                           false};
    if (!jc.at("smoothNormalization").is_boolean())
        schema_fail("$.cover.smoothNormalization", "expected a boolean");
    cover.smooth_normalization = jc.at("smoothNormalization").get<bool>();

    if (jc.contains("classOrder")) {
        if (cover.kind != CoverKind::severi_brauer)
            schema_fail("$.cover.classOrder", "only a severi-brauer cover takes 'classOrder'");
        cover.class_order = get_int(jc.at("classOrder"), "$.cover.classOrder", 1);
    } else if (cover.kind == CoverKind::severi_brauer) {
        schema_fail("$.cover", "a severi-brauer cover requires 'classOrder'");
    }

    if (jc.contains("closedPointDegrees")) {
        if (!jc.at("closedPointDegrees").is_array() || jc.at("closedPointDegrees").empty())
            schema_fail("$.cover.closedPointDegrees", "expected a nonempty array of positive integers");
        std::vector<Int> ds;
        for (std::size_t i = 0; i < jc.at("closedPointDegrees").size(); ++i)
            ds.push_back(get_int(jc.at("closedPointDegrees")[i],
                                 "$.cover.closedPointDegrees[" + std::to_string(i) + "]", 1));
        cover.closed_point_degrees = std::move(ds);
    }
    if (jc.contains("index")) cover.declared_index = get_int(jc.at("index"), "$.cover.index", 1);

    // Amitsur subgroup: explicit order, forced by the cover kind, or an
    // exponent bound derived from the index data.
    if (jc.contains("amitsurOrder")) {
        cover.amitsur = qz::QmodZSubgroup::cyclic(get_int(jc.at("amitsurOrder"), "$.cover.amitsurOrder", 1));
    } else if (cover.kind == CoverKind::ch0_trivial) {
        cover.amitsur = qz::QmodZSubgroup::cyclic(1);
    } else if (cover.kind == CoverKind::severi_brauer) {
        cover.amitsur = qz::QmodZSubgroup::cyclic(*cover.class_order);
    } else if (auto ci = pinch::cover_index(cover)) {
        cover.amitsur = qz::QmodZSubgroup::unknown_bounded(*ci, "annihilated by the cover index");
    } else {
        schema_fail("$.cover", "requires 'amitsurOrder' or index data (closedPointDegrees/index)");
    }

    if (jc.contains("brAOrder")) {
        Int n = get_int(jc.at("brAOrder"), "$.cover.brAOrder", 1);
        cover.br_a = n == 1 ? qz::AbGroup::trivial()
                            : qz::AbGroup::unknown(n, "declared order, structure not supplied", n);
    } else if (cover.kind == CoverKind::ch0_trivial || cover.kind == CoverKind::severi_brauer) {
        cover.br_a = qz::AbGroup::trivial();
    } else {
        cover.br_a = qz::AbGroup::unknown(std::nullopt, "not supplied");
    }

    if (jc.contains("br1")) cover.br1 = parse_br1(jc.at("br1"), "$.cover.br1", base);

    pinch::PinchingConfig config{std::move(cover), {}};

    const Json& jp = doc.at("points");
    if (!jp.is_array()) schema_fail("$.points", "expected an array");
    for (std::size_t i = 0; i < jp.size(); ++i) {
        std::string path = "$.points[" + std::to_string(i) + "]";
        const Json& pt = jp[i];
        expect_keys(pt, path, {"label", "residueDegree", "residueSeparableDegree", "fibers"},
                    {"label", "residueDegree", "fibers"});
        std::string label = get_string(pt.at("label"), path + ".label");
        Int rd = get_int(pt.at("residueDegree"), path + ".residueDegree", 1);
        std::optional<Int> rsep;
        if (pt.contains("residueSeparableDegree"))
            rsep = get_int(pt.at("residueSeparableDegree"), path + ".residueSeparableDegree", 1);
        ExtensionSpec residue = parse_extension(base, rd, rsep, path);

        if (!pt.at("fibers").is_array()) schema_fail(path + ".fibers", "expected an array");
        std::vector<ExtensionSpec> fibers;
        FieldSpec kappa = fields::residue_field(residue);
        for (std::size_t f = 0; f < pt.at("fibers").size(); ++f) {
            std::string fpath = path + ".fibers[" + std::to_string(f) + "]";
            const Json& jf = pt.at("fibers")[f];
            expect_keys(jf, fpath, {"degree", "separableDegree"}, {"degree"});
            Int fd = get_int(jf.at("degree"), fpath + ".degree", 1);
            std::optional<Int> fsep;
            if (jf.contains("separableDegree"))
                fsep = get_int(jf.at("separableDegree"), fpath + ".separableDegree", 1);
            fibers.push_back(parse_extension(kappa, fd, fsep, fpath));
        }
        config.points.push_back({std::move(label), std::move(residue), std::move(fibers)});
    }

    auto violations = pinch::validate(config);
    if (!violations.empty()) {
        std::string msg = "configuration rejected:";
        for (const auto& v : violations) msg += " [" + v.code + "] " + v.message + ";";
        throw Error(Errc::config_error, msg);
    }
    return config;
}

namespace {

Json field_json(const FieldSpec& f) {
    Json j;
    switch (f.kind()) {
        case FieldSpec::Kind::padic_local: j["kind"] = "p-adic"; j["p"] = f.p(); break;
        case FieldSpec::Kind::local_function: j["kind"] = "local-function"; j["p"] = f.p(); break;
        case FieldSpec::Kind::finite_field: j["kind"] = "finite"; j["p"] = f.p(); break;
        case FieldSpec::Kind::real_closed: j["kind"] = "real-closed"; break;
        case FieldSpec::Kind::separably_closed: j["kind"] = "separably-closed"; break;
        case FieldSpec::Kind::algebraically_closed: j["kind"] = "algebraically-closed"; break;
        case FieldSpec::Kind::abstract_perfect: j["kind"] = "abstract-perfect"; j["p"] = f.p(); break;
        case FieldSpec::Kind::abstract: j["kind"] = "abstract"; j["p"] = f.p(); break;
    }
    return j;
}

Json br1_json(const qz::AbGroup& g) {
    Json j;
    switch (g.kind()) {
        case qz::AbGroup::Kind::full_qmodz: j["type"] = "q-mod-z"; return j;
        case qz::AbGroup::Kind::symbolic_br: j["type"] = "base-brauer"; return j;
        case qz::AbGroup::Kind::known:
            if (g.is_trivial()) { j["type"] = "trivial"; return j; }
            if (g.invariant_factors().size() == 1) {
                j["type"] = "cyclic";
                j["order"] = g.invariant_factors().front();
                return j;
            }
            j["type"] = "factors";
            j["factors"] = g.invariant_factors();
            return j;
        default:
            j["type"] = "trivial";  // unreachable for parsed configs
            return j;
    }
}

}  // namespace

Json config_echo(const pinch::PinchingConfig& config) {
    const auto& cover = config.cover;
    Json j;
    j["schemaVersion"] = 1;
    j["field"] = field_json(cover.base_field);
    Json jc;
    jc["coverKind"] = pinch::cover_kind_name(cover.kind);
    if (cover.class_order) jc["classOrder"] = *cover.class_order;
    if (cover.amitsur.is_known()) jc["amitsurOrder"] = cover.amitsur.order();
    if (cover.br_a.is_trivial()) {
        if (cover.kind != CoverKind::ch0_trivial && cover.kind != CoverKind::severi_brauer)
            jc["brAOrder"] = 1;
    } else if (cover.br_a.order().is_finite()) {
        jc["brAOrder"] = cover.br_a.order().value();
    }
    if (cover.br1) jc["br1"] = br1_json(*cover.br1);
    if (cover.closed_point_degrees) jc["closedPointDegrees"] = *cover.closed_point_degrees;
    if (cover.declared_index) jc["index"] = *cover.declared_index;
    jc["smoothNormalization"] = cover.smooth_normalization;
    j["cover"] = std::move(jc);

    Json pts = Json::array();
    for (const auto& p : config.points) {
        Json pt;
        pt["label"] = p.label;
        pt["residueDegree"] = p.residue.total_degree();
        pt["residueSeparableDegree"] = p.residue.separable_degree();
        Json fs = Json::array();
        for (const auto& f : p.fibers) {
            Json jf;
            jf["degree"] = f.total_degree();
            jf["separableDegree"] = f.separable_degree();
            fs.push_back(std::move(jf));
        }
        pt["fibers"] = std::move(fs);
        pts.push_back(std::move(pt));
    }
    j["points"] = std::move(pts);
    return j;
}

}  // namespace brpinch::cli
