// SPDX-License-Identifier: Apache-2.0
//
// Spec files and structured output. Cover specifications are JSON documents
// with polynomial payloads in the text grammar; reports serialize to JSON
// (structured) or a fixed-width text rendering. Both renderings are
// deterministic for identical inputs.
#pragma once

#include "galtwist/construct.hpp"
#include "galtwist/parse.hpp"
#include "galtwist/rank.hpp"
#include "galtwist/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace galtwist {

using Json = nlohmann::json;

struct SpecFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecFile {
    std::string kind;  // "abelian" | "dihedral"
    std::optional<AbelianCoverSpec> abelian;
    std::optional<DihedralCoverSpec> dihedral;
    std::optional<AbelianVarietyDescriptor> descriptor;
    std::vector<std::string> parse_warnings;

    unsigned m() const { return abelian ? abelian->m : dihedral->m; }
    void override_m(unsigned m_new) {
        if (abelian) abelian->m = m_new;
        if (dihedral) dihedral->m = m_new;
    }
};

inline SpecFile parse_spec_json(const Json& doc) {
    SpecFile out;
    try {
        out.kind = doc.at("kind").get<std::string>();
        if (out.kind == "abelian") {
            AbelianCoverSpec spec;
            spec.ell = doc.at("ell").get<unsigned>();
            spec.m = doc.at("m").get<unsigned>();
            for (const auto& layer : doc.at("layers")) {
                AbelianLayer l;
                l.n = layer.at("n").get<unsigned>();
                l.f = parse_rational(layer.at("f").get<std::string>(), &out.parse_warnings);
                spec.layers.push_back(std::move(l));
            }
            out.abelian = std::move(spec);
        } else if (out.kind == "dihedral") {
            DihedralCoverSpec spec;
            spec.n = doc.at("n").get<unsigned>();
            spec.m = doc.at("m").get<unsigned>();
            spec.f = parse_rational(doc.at("f").get<std::string>(), &out.parse_warnings);
            spec.g = parse_rational(doc.at("g").get<std::string>(), &out.parse_warnings);
            out.dihedral = std::move(spec);
        } else {
            throw SpecFileError("unknown spec kind: '" + out.kind + "'");
        }
        if (doc.contains("descriptor")) {
            const auto& d = doc.at("descriptor");
            AbelianVarietyDescriptor desc;
            if (d.contains("preset")) desc = descriptor_preset(d.at("preset").get<std::string>());
            if (d.contains("label")) desc.label = d.at("label").get<std::string>();
            if (d.contains("dimension")) desc.dimension = d.at("dimension").get<unsigned>();
            if (d.contains("rk_end")) desc.rk_end = d.at("rk_end").get<unsigned>();
            if (d.contains("torsion"))
                desc.torsion = d.at("torsion").get<std::vector<unsigned>>();
            if (d.contains("assert_no_extra_factor"))
                desc.assert_no_extra_factor = d.at("assert_no_extra_factor").get<bool>();
            desc.validate();
            out.descriptor = std::move(desc);
        }
    } catch (const Json::exception& e) {
        throw SpecFileError(std::string("malformed spec file: ") + e.what());
    } catch (const ParseError& e) {
        throw SpecFileError(std::string("polynomial syntax error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SpecFileError(std::string("invalid spec value: ") + e.what());
    }
    return out;
}

inline SpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecFileError("cannot open spec file: " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const Json::exception& e) {
        throw SpecFileError(std::string("spec file is not valid JSON: ") + e.what());
    }
    return parse_spec_json(doc);
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

inline Json to_json(const CheckResult& check) {
    Json j;
    j["name"] = check.name;
    j["status"] = to_string(check.status);
    if (check.has_witness())
        j["witness"] = check.witness_str();
    else
        j["witness"] = nullptr;
    j["notes"] = check.notes;
    return j;
}

inline Json to_json(const ExponentRow& row) {
    return Json{{"layer", row.layer},   {"n", row.n},
                {"d", row.d},           {"a", row.a},
                {"c", row.c},           {"t", row.t},
                {"chain_c", row.chain_c}, {"chain_t", row.chain_t},
                {"c_agrees", row.c_agrees}, {"t_agrees", row.t_agrees}};
}

inline Json to_json(const VerificationReport& report) {
    Json j;
    j["kind"] = report.kind;
    j["spec"] = report.spec_lines;
    j["m"] = report.m;
    j["exponents"] = Json::array();
    for (const auto& row : report.exponents) j["exponents"].push_back(to_json(row));
    j["checks"] = Json::array();
    for (const auto& c : report.checks) j["checks"].push_back(to_json(c));
    j["notes"] = report.notes;
    j["overall"] = report.overall_pass() ? "pass" : "fail";
    return j;
}

inline std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "verification report (" << report.kind << ")\n";
    for (const auto& line : report.spec_lines) os << "  " << line << "\n";
    if (!report.exponents.empty()) {
        os << "derived exponents (chain columns show n - n/n_1 and n/n_1):\n";
        os << "  layer    n    a    c  chain_c    t  chain_t  agrees\n";
        for (const auto& row : report.exponents) {
            os << "  " << row.layer;
            for (std::size_t pad = row.layer.size(); pad < 5; ++pad) os << ' ';
            auto cell = [&os](long v) {
                std::string s = std::to_string(v);
                for (std::size_t pad = s.size(); pad < 4; ++pad) os << ' ';
                os << s << ' ';
            };
            cell(row.n);
            cell(row.a);
            cell(row.c);
            os << "   ";
            cell(row.chain_c);
            cell(row.t);
            os << "   ";
            cell(row.chain_t);
            os << "  " << ((row.c_agrees && row.t_agrees) ? "yes" : "NO") << "\n";
        }
    }
    os << "checks:\n";
    for (const auto& c : report.checks) {
        os << "  [" << to_string(c.status) << "] " << c.name;
        for (const auto& note : c.notes) os << "\n        - " << note;
        if (c.has_witness()) os << "\n        witness: " << c.witness_str();
        os << "\n";
    }
    if (!report.notes.empty()) {
        os << "notes:\n";
        for (const auto& n : report.notes) os << "  - " << n << "\n";
    }
    os << "overall: " << (report.overall_pass() ? "pass" : "fail") << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Build output: the four presentations plus the point list
// ---------------------------------------------------------------------------

struct BuildOutput {
    std::string kind;
    PresentedVariety cover;
    PresentedVariety product;
    PresentedVariety quotient;
    PresentedVariety twist;
    std::vector<SymbolicPoint> points;
    std::vector<ExponentRow> exponents;
    std::vector<std::string> notes;
};

inline BuildOutput make_build_output(const AbelianCoverSpec& spec) {
    BuildOutput out;
    out.kind = "abelian";
    AbelianCoverSpec single = spec;
    single.m = 1;
    out.cover = fiber_product(single);
    out.cover.name = "cover X";
    out.product = fiber_product(spec);
    if (spec.m >= 2) {
        QuotientPresentation q = quotient_presentation(spec);
        TwistPresentation t = twist_presentation(spec);
        out.quotient = q.variety;
        out.twist = t.variety;
        unsigned n1 = spec.layers.front().n;
        for (unsigned j = 1; j <= spec.rank(); ++j) {
            ExponentRow row;
            row.layer = std::to_string(j);
            row.n = spec.layers[j - 1].n;
            row.d = row.n / n1;
            row.a = q.a[j - 1];
            row.c = q.c[j - 1];
            row.t = t.t[j - 1];
            row.chain_c = static_cast<long>(row.n) - static_cast<long>(row.d);
            row.chain_t = static_cast<long>(row.d);
            row.c_agrees = static_cast<long>(row.c) == row.chain_c;
            row.t_agrees = static_cast<long>(row.t) == row.chain_t;
            out.exponents.push_back(row);
        }
        for (const auto& note : q.notes) out.notes.push_back(note);
        for (const auto& note : t.notes) out.notes.push_back(note);
    } else {
        out.quotient.name = "quotient V_1";
        TwistPresentation t = twist_presentation(spec);
        out.twist = t.variety;
        for (const auto& note : t.notes) out.notes.push_back(note);
    }
    out.points = rational_points(spec);
    return out;
}

inline BuildOutput make_build_output(const DihedralCoverSpec& spec) {
    BuildOutput out;
    out.kind = "dihedral";
    DihedralCoverSpec single = spec;
    single.m = 1;
    out.cover = dihedral_pipeline(single).product;
    out.cover.name = "cover C";
    DihedralArtifacts art = dihedral_pipeline(spec);
    out.product = art.product;
    out.quotient = art.quotient.variety;
    out.twist = art.twist.variety;
    out.points = art.points;
    out.notes = art.notes;
    for (const auto& info : art.layer_info) {
        ExponentRow row;
        row.layer = info.layer;
        row.n = info.order;
        row.d = 1;
        row.a = info.a;
        row.c = info.c;
        row.t = info.t;
        row.chain_c = static_cast<long>(info.order) - 1;
        row.chain_t = 1;
        row.c_agrees = static_cast<long>(row.c) == row.chain_c;
        row.t_agrees = static_cast<long>(row.t) == row.chain_t;
        out.exponents.push_back(row);
    }
    return out;
}

inline Json to_json(const PresentedVariety& v) {
    Json j;
    j["name"] = v.name;
    j["variables"] = Json::array();
    for (const auto& var : v.variables) j["variables"].push_back(var.str());
    j["equations"] = Json::array();
    for (const auto& eq : v.equations) j["equations"].push_back(eq.str());
    j["notes"] = v.notes;
    return j;
}

inline Json to_json(const SymbolicPoint& pt) {
    Json j;
    j["label"] = pt.label;
    j["coords"] = Json::array();
    for (const auto& [num, den] : pt.coords)
        j["coords"].push_back(Json{{"num", num.str()}, {"den", den.str()}});
    return j;
}

inline Json to_json(const BuildOutput& build) {
    Json j;
    j["kind"] = build.kind;
    j["cover"] = to_json(build.cover);
    j["product"] = to_json(build.product);
    j["quotient"] = to_json(build.quotient);
    j["twist"] = to_json(build.twist);
    j["points"] = Json::array();
    for (const auto& pt : build.points) j["points"].push_back(to_json(pt));
    j["exponents"] = Json::array();
    for (const auto& row : build.exponents) j["exponents"].push_back(to_json(row));
    j["notes"] = build.notes;
    return j;
}

inline std::string variety_to_text(const PresentedVariety& v) {
    std::ostringstream os;
    os << v.name << ":\n";
    os << "  variables:";
    for (const auto& var : v.variables) os << " " << var.str();
    os << "\n";
    if (v.equations.empty()) os << "  (no equations)\n";
    for (const auto& eq : v.equations) os << "  0 = " << eq.str() << "\n";
    for (const auto& note : v.notes) os << "  note: " << note << "\n";
    return os.str();
}

inline std::string build_to_text(const BuildOutput& build) {
    std::ostringstream os;
    os << "construction (" << build.kind << ")\n";
    os << variety_to_text(build.cover);
    os << variety_to_text(build.product);
    os << variety_to_text(build.quotient);
    os << variety_to_text(build.twist);
    os << "points:\n";
    for (const auto& pt : build.points) {
        os << "  " << pt.label << " = (";
        for (std::size_t k = 0; k < pt.coords.size(); ++k) {
            if (k) os << ", ";
            const auto& [num, den] = pt.coords[k];
            bool den_one = den.is_constant() && !den.is_zero() && den.str() == "1";
            if (den_one)
                os << num.str();
            else
                os << "(" << num.str() << ")/(" << den.str() << ")";
        }
        os << ")\n";
    }
    if (!build.exponents.empty()) {
        os << "derived exponents:\n";
        for (const auto& row : build.exponents)
            os << "  layer " << row.layer << ": a = " << row.a << ", c = " << row.c
               << ", t = " << row.t << (row.c_agrees && row.t_agrees ? "" : "  [chain-formula mismatch]")
               << "\n";
    }
    for (const auto& note : build.notes) os << "note: " << note << "\n";
    return os.str();
}

}  // namespace galtwist
