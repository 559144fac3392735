// SPDX-License-Identifier: Apache-2.0
#include "galtwist/specio.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace galtwist;

TEST_CASE("abelian spec files parse") {
    Json doc = Json::parse(R"({
        "kind": "abelian",
        "ell": 1,
        "m": 3,
        "layers": [{"n": 2, "f": "x1^3 + 1"}],
        "descriptor": {"preset": "cm-elliptic", "torsion": [2]}
    })");
    SpecFile spec = parse_spec_json(doc);
    REQUIRE(spec.abelian.has_value());
    CHECK(spec.kind == "abelian");
    CHECK(spec.abelian->m == 3);
    CHECK(spec.abelian->layers.size() == 1);
    CHECK(spec.abelian->layers[0].f == parse_rational("x1^3 + 1"));
    REQUIRE(spec.descriptor.has_value());
    CHECK(spec.descriptor->rk_end == 2);
    CHECK(spec.descriptor->torsion == std::vector<unsigned>{2});

    spec.override_m(5);
    CHECK(spec.m() == 5);
}

TEST_CASE("dihedral spec files parse") {
    Json doc = Json::parse(R"({
        "kind": "dihedral", "n": 3, "m": 2,
        "f": "x^3 - x", "g": "x^2 + 1",
        "descriptor": {"rk_end": 1, "torsion": [], "assert_no_extra_factor": true}
    })");
    SpecFile spec = parse_spec_json(doc);
    REQUIRE(spec.dihedral.has_value());
    CHECK(spec.dihedral->n == 3);
    CHECK(spec.descriptor->rk_end == 1);
}

TEST_CASE("spec file errors") {
    CHECK_THROWS_AS(parse_spec_json(Json::parse(R"({"kind": "elliptic"})")), SpecFileError);
    CHECK_THROWS_AS(parse_spec_json(Json::parse(R"({"kind": "abelian", "ell": 1, "m": 2})")),
                    SpecFileError);  // missing layers
    CHECK_THROWS_AS(parse_spec_json(Json::parse(
                        R"({"kind": "abelian", "ell": 1, "m": 2, "layers": [{"n": 2, "f": "x1 + + 2"}]})")),
                    SpecFileError);  // polynomial syntax error
    CHECK_THROWS_AS(load_spec_file("/nonexistent/path.json"), SpecFileError);
}

TEST_CASE("report serialization carries the exponent table and witnesses") {
    AbelianCoverSpec spec;
    spec.ell = 1;
    spec.m = 2;
    spec.layers.push_back({2, parse_rational("x1^3 + 1")});
    spec.layers.push_back({4, parse_rational("x1^3 + 2")});
    VerificationReport report = full_verification(spec);
    Json j = to_json(report);
    CHECK(j["kind"] == "abelian");
    CHECK(j["overall"] == "pass");
    REQUIRE(j["exponents"].size() == 2);
    CHECK(j["exponents"][1]["c"] == 3);
    CHECK(j["exponents"][1]["chain_c"] == 2);
    CHECK(j["exponents"][1]["c_agrees"] == false);
    bool has_checks = false;
    for (const auto& c : j["checks"])
        if (c["name"] == "twist-identity" && c["status"] == "pass") has_checks = true;
    CHECK(has_checks);

    std::string text = report_to_text(report);
    CHECK(text.find("overall: pass") != std::string::npos);
    CHECK(text.find("NO") != std::string::npos);  // the disagreeing exponent row
}

TEST_CASE("build output serializes the four presentations and the points") {
    AbelianCoverSpec spec;
    spec.ell = 1;
    spec.m = 2;
    spec.layers.push_back({2, parse_rational("x1^3 + 1")});
    BuildOutput build = make_build_output(spec);
    Json j = to_json(build);
    CHECK(j["cover"]["equations"].size() == 1);
    CHECK(j["product"]["equations"].size() == 2);
    CHECK(j["quotient"]["equations"].size() == 1);
    CHECK(j["twist"]["equations"].size() == 1);
    CHECK(j["twist"]["equations"][0] ==
          parse_rational("(x1_1^3 + 1)*Z1_1^2 - x2_1^3 - 1").str());
    REQUIRE(j["points"].size() == 2);
    CHECK(j["points"][1]["coords"][1]["num"] == "w2_1");
    CHECK(j["points"][1]["coords"][1]["den"] == "w1_1");

    std::string text = build_to_text(build);
    CHECK(text.find("points:") != std::string::npos);
    CHECK(text.find("P2") != std::string::npos);

    // m = 1: empty twist section with a note
    spec.m = 1;
    Json single = to_json(make_build_output(spec));
    CHECK(single["twist"]["equations"].empty());
    bool note_found = false;
    for (const auto& n : single["twist"]["notes"])
        if (n.get<std::string>().find("m = 1") != std::string::npos) note_found = true;
    CHECK(note_found);
}

TEST_CASE("dihedral build output") {
    DihedralCoverSpec spec;
    spec.n = 2;
    spec.m = 2;
    spec.f = parse_rational("x^3 - x");
    spec.g = parse_rational("x^2 + 1");
    BuildOutput build = make_build_output(spec);
    Json j = to_json(build);
    CHECK(j["kind"] == "dihedral");
    CHECK(j["twist"]["equations"].size() == 2);
    REQUIRE(j["exponents"].size() == 2);
    CHECK(j["exponents"][0]["layer"] == "u");
    CHECK(j["exponents"][1]["layer"] == "z");
}
