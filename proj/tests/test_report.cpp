#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "toricsod/report.hpp"

using namespace toricsod;

namespace {

Fan mu3() { return validate_fan({{1, 1}, {-2, 1}, {1, -2}}); }

FgAbelianGroup z2_plus_3() {  // Z^2 + Z/3
    IntMatrix m(3, 1);
    m.at(2, 0) = 3;
    return cokernel(m);
}

}  // namespace

TEST_CASE("fan input parsing") {
    Fan f = parse_fan_input(R"({"rays": [[1,1],[-2,1],[1,-1]]})");
    CHECK((f.rays == std::vector<Ray>{{1, 1}, {-2, 1}, {1, -1}}));
    Fan w = parse_fan_input(R"({"weights": [1,2,3]})");
    CHECK(singularity_type(w, 2).r == 3);

    CHECK(thrown_kind([] { parse_fan_input("not json"); }) == "InvalidInput");
    CHECK(thrown_kind([] { parse_fan_input("[1, 2]"); }) == "InvalidInput");
    CHECK(thrown_kind([] { parse_fan_input(R"({"foo": 1})"); }) == "InvalidInput");
    CHECK(thrown_kind([] { parse_fan_input(R"({"weights": [1, 2]})"); }) == "InvalidInput");
    CHECK(thrown_kind([] { parse_fan_input(R"({"weights": [1, 2, "3"]})"); }) ==
          "InvalidInput");
    CHECK(thrown_kind([] { parse_fan_input(R"({"weights": [1.5, 2, 3]})"); }) ==
          "InvalidInput");
    CHECK(thrown_kind([] { parse_fan_input(R"({"rays": 5})"); }) == "InvalidInput");
    CHECK(thrown_kind([] { parse_fan_input(R"({"rays": [[1, 1], [2]]})"); }) ==
          "InvalidInput");
    // the fan and weight validators keep their own kinds
    CHECK(thrown_kind([] { parse_fan_input(R"({"rays": [[1, 0], [0, 1]]})"); }) ==
          "TooFewRays");
    CHECK(thrown_kind([] { parse_fan_input(R"({"weights": [2, 4, 3]})"); }) ==
          "InvalidWeights");
}

TEST_CASE("canonical serialisation") {
    json j{{"b", 1}, {"a", json::array({2, 3})}};
    CHECK(dump_report(j) == "{\n  \"a\": [\n    2,\n    3\n  ],\n  \"b\": 1\n}\n");
    CHECK(json::parse(dump_report(j)) == j);
    CHECK(dump_report(json::parse(dump_report(j))) == dump_report(j));
}

TEST_CASE("group and element rendering") {
    CHECK(group_string(free_abelian(0)) == "0");
    CHECK(group_string(free_abelian(1)) == "Z");
    CHECK(group_string(free_abelian(2)) == "Z^2");

    IntMatrix t(1, 1);
    t.at(0, 0) = 3;
    FgAbelianGroup z3 = cokernel(t);
    CHECK(group_string(z3) == "Z/3");

    IntMatrix d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 4;
    CHECK(group_string(cokernel(d)) == "Z/2 + Z/4");

    FgAbelianGroup g = z2_plus_3();
    CHECK(group_string(g) == "Z^2 + Z/3");

    GroupElement e = g.element({1, -2}, {1});
    CHECK(element_string(e) == "(1, -2; 1 mod 3)");
    CHECK(element_string(g.zero()) == "(0, 0; 0 mod 3)");
    CHECK(element_string(free_abelian(0).zero()) == "0");
    CHECK(element_string(free_abelian(2).element({3, -4}, {})) == "(3, -4)");

    IntMatrix s(1, 1);
    s.at(0, 0) = 6;
    GroupElement four = cokernel(s).element({}, {4});
    CHECK(element_string(four) == "(4 mod 6)");

    CHECK((element_json(e)["coords"] == json::array({1, -2, 1})));
    CHECK(element_json(e)["order"] == 0);
    CHECK(element_json(four)["order"] == 3);
    CHECK(group_json(g)["free_rank"] == 2);
    CHECK((group_json(g)["torsion"] == json::array({3})));
    CHECK(dump_report(group_json(z3)) ==
          "{\n  \"free_rank\": 0,\n  \"torsion\": [\n    3\n  ]\n}\n");
}

TEST_CASE("singularity analysis reports") {
    CHECK(analyze_text(wpp_fan(1, 2, 3)) ==
          "x1: type (1,0), smooth\n"
          "x2: type (2,1), Gorenstein\n"
          "x3: type (3,2), Gorenstein\n"
          "Cl(X) = Z  (Pic rank 1)\n"
          "Br(X) = 0  (order 1)\n");
    CHECK(analyze_text(mu3()) ==
          "x1: type (3,2), Gorenstein\n"
          "x2: type (3,2), Gorenstein\n"
          "x3: type (3,2), Gorenstein\n"
          "Cl(X) = Z + Z/3  (Pic rank 1)\n"
          "Br(X) = Z/3  (order 3)\n");
    CHECK(analyze_text(wpp_fan(2, 3, 11)) ==
          "x1: type (2,1), Gorenstein\n"
          "x2: type (3,1), non-Gorenstein\n"
          "x3: type (11,8), non-Gorenstein\n"
          "Cl(X) = Z  (Pic rank 1)\n"
          "Br(X) = 0  (order 1)\n");

    json j = analyze_json(mu3());
    CHECK(j["points"].size() == 3);
    CHECK(j["points"][0]["i"] == 1);
    CHECK(j["points"][0]["r"] == 3);
    CHECK(j["points"][0]["a"] == 2);
    CHECK(j["points"][0]["gorenstein"] == true);
    CHECK(j["cl"]["free_rank"] == 1);
    CHECK((j["cl"]["torsion"] == json::array({3})));
    CHECK(j["pic_rank"] == 1);
    CHECK((j["br"]["torsion"] == json::array({3})));
    CHECK(j["br_order"] == 3);
}

TEST_CASE("Brauer reports") {
    CHECK(brauer_text(mu3()) == "Br(X) = Z/3 (order 3)\n");
    CHECK(brauer_text(wpp_fan(1, 2, 3)) == "Br(X) = 0 (order 1)\n");
    CHECK(dump_report(brauer_json(mu3())) == "{\n  \"order\": 3\n}\n");
    CHECK(dump_report(brauer_json(wpp_fan(1, 2, 3))) == "{\n  \"order\": 1\n}\n");
}

TEST_CASE("resolution reports") {
    ResolvedSurface s = minimal_resolution(validate_fan({{1, 1}, {-2, 1}, {1, -1}}));
    CHECK(resolve_text(s) ==
          "rays (counterclockwise, label (i,p), d = -E^2):\n"
          "  (1,1)  (1,0)  d=1\n"
          "  (0,1)  (1,1)  d=2\n"
          "  (-1,1)  (1,2)  d=2\n"
          "  (-2,1)  (2,0)  d=0\n"
          "  (1,-1)  (3,0)  d=-1\n"
          "  (1,0)  (3,1)  d=2\n"
          "chains:\n"
          "  x1: type (3,2), Gorenstein, ds = [2, 2]\n"
          "  x2: type (1,0), smooth\n"
          "  x3: type (2,1), Gorenstein, ds = [2]\n");

    json j = resolve_json(s);
    CHECK(j["rays"].size() == 6);
    CHECK((j["rays"][0]["xy"] == json::array({1, 1})));
    CHECK((j["rays"][0]["label"] == json::array({1, 0})));
    CHECK(j["rays"][0]["d"] == 1);
    CHECK(j["rays"][4]["d"] == -1);
    CHECK(j["chains"].size() == 3);
    CHECK(j["chains"][0]["i"] == 1);
    CHECK(j["chains"][0]["r"] == 3);
    CHECK((j["chains"][0]["ds"] == json::array({2, 2})));
    CHECK(j["chains"][1]["ds"].empty());
}

TEST_CASE("decomposition reports") {
    SODReport identity = sod_report(wpp_fan(1, 2, 3), Ordering{0, false});
    CHECK(sod_text(identity) ==
          "D^b(X) = < D^b(k), D^b(k[z]/z^2), D^b(k[z]/z^3) >\n"
          "block 1: point 1, type (1,0), smooth, ds [], twist []\n"
          "block 2: point 2, type (2,1), Gorenstein, ds [2], twist [0]\n"
          "block 3: point 3, type (3,2), Gorenstein, ds [2, 2], twist [0, 1]\n"
          "beta: order 1\n"
          "untwisted: yes\n"
          "perfect-complex decomposition valid: yes\n");

    SODReport obstructed = sod_report(mu3());
    CHECK(sod_text(obstructed) ==
          "D^b(X, beta) = < D^b(k[z]/z^3), D^b(k[z]/z^3), D^b(k[z]/z^3) >\n"
          "block 1: point 1, type (3,2), Gorenstein, ds [2, 2], twist [0, 0]\n"
          "block 2: point 2, type (3,2), Gorenstein, ds [2, 2], twist [0, 0]\n"
          "block 3: point 3, type (3,2), Gorenstein, ds [2, 2], twist [0, 1]\n"
          "beta: order 3\n"
          "untwisted: no\n"
          "perfect-complex decomposition valid: yes\n");

    json j = sod_json(sod_report(wpp_fan(1, 2, 3)));  // default: smooth point last
    CHECK(j["blocks"].size() == 3);
    CHECK(j["blocks"][0]["point"] == 2);
    CHECK(j["blocks"][0]["r"] == 2);
    CHECK(j["blocks"][0]["a"] == 1);
    CHECK((j["blocks"][0]["ds"] == json::array({2})));
    CHECK((j["blocks"][0]["twist"] == json::array({0})));
    CHECK(j["blocks"][0]["algebra"]["generators"] == 1);
    CHECK((j["blocks"][0]["algebra"]["relations"] == json::array({"z1^2"})));
    CHECK(j["blocks"][0]["algebra"]["dim"] == 2);
    CHECK(j["blocks"][2]["point"] == 1);
    CHECK(j["blocks"][2]["algebra"]["generators"] == 0);
    CHECK(j["blocks"][2]["algebra"]["dim"] == 1);
    CHECK(j["beta"]["order"] == 1);
    CHECK(j["beta"]["coords"].empty());
    CHECK(j["untwisted"] == true);
    CHECK(j["perf_valid"] == true);

    json jo = sod_json(obstructed);
    CHECK(jo["beta"]["order"] == 3);
    CHECK(jo["untwisted"] == false);
}

TEST_CASE("Grothendieck group reports") {
    CHECK(g0_text(mu3(), false) ==
          "G0(X) = Z^3 + Z/3\n"
          "G0(X, standard twist) = Z^3\n"
          "Ext^1 torsion cross-check: pass\n");
    CHECK(g0_text(mu3(), true) ==
          "G0(X) = Z^3 + Z/3\n"
          "G0(X, zero twist) = Z^3 + Z/3\n"
          "Ext^1 torsion cross-check: pass\n");
    CHECK(g0_text(wpp_fan(2, 3, 11), false) ==
          "G0(X) = Z^3\n"
          "G0(X, standard twist) = Z^3\n"
          "Ext^1 torsion cross-check: pass\n");

    json j = g0_json(mu3(), false);
    CHECK(j["twist"] == "standard");
    CHECK(j["g0"]["free_rank"] == 3);
    CHECK((j["g0"]["torsion"] == json::array({3})));
    CHECK(j["g0_twisted"]["free_rank"] == 3);
    CHECK(j["g0_twisted"]["torsion"].empty());
    CHECK(j["ext1_check"] == true);
    CHECK(g0_json(mu3(), true)["twist"] == "zero");
    CHECK((g0_json(mu3(), true)["g0_twisted"]["torsion"] == json::array({3})));
}

TEST_CASE("singularity algebra reports") {
    CHECK(kk_text(kk_algebra(7, 5)) ==
          "K(7,5) = k<z1,z2>/(z1^4, z2^2, z1*z2, z2*z1^3)\n"
          "cs = [4, 2]\n"
          "dim = 7\n"
          "basis: 1 z1 z2 z1^2 z2*z1 z1^3 z2*z1^2\n");

    json j = kk_json(kk_algebra(7, 5));
    CHECK(j["r"] == 7);
    CHECK(j["a"] == 5);
    CHECK(j["generators"] == 2);
    CHECK((j["cs"] == json::array({4, 2})));
    CHECK((j["relations"] == json::array({"z1^4", "z2^2", "z1*z2", "z2*z1^3"})));
    CHECK(j["dim"] == 7);
    CHECK(j["basis"].size() == 7);
    CHECK(j["algebra"] == "k<z1,z2>/(z1^4, z2^2, z1*z2, z2*z1^3)");

    CHECK(dump_report(kk_json(kk_algebra(2, 1))) ==
          "{\n"
          "  \"a\": 1,\n"
          "  \"algebra\": \"k[z]/z^2\",\n"
          "  \"basis\": [\n    \"1\",\n    \"z1\"\n  ],\n"
          "  \"cs\": [\n    2\n  ],\n"
          "  \"dim\": 2,\n"
          "  \"generators\": 1,\n"
          "  \"r\": 2,\n"
          "  \"relations\": [\n    \"z1^2\"\n  ]\n"
          "}\n");
}

TEST_CASE("generator reports") {
    GeneratorSet g = generator_classes(minimal_resolution(wpp_fan(1, 2, 3)));
    std::string expected =
        "C: " + element_string(g.c) + "\n" +
        "R_1: class " + element_string(g.classes[0]) +
        ", rank 1, locally free at {x1, x2, x3}, reflexive at {x1, x2, x3}\n" +
        "R_2: class " + element_string(g.classes[1]) +
        ", rank 2, locally free at {x1, x3}, reflexive at {x1, x2, x3}\n" +
        "R_3: class " + element_string(g.classes[2]) +
        ", rank 3, locally free at {x1, x2}, reflexive at {x1, x2, x3}\n";
    CHECK(generators_text(g) == expected);

    json j = generators_json(g);
    CHECK(j["generators"].size() == 3);
    CHECK(j["generators"][0]["rank"] == 1);
    CHECK(j["generators"][1]["rank"] == 2);
    CHECK((j["generators"][1]["locally_free_at"] == json::array({true, false, true})));
    CHECK((j["generators"][1]["reflexive_at"] == json::array({true, true, true})));
    CHECK(j["C"]["order"] == 0);
    CHECK((j["generators"][2]["class"] == element_json(g.classes[2])));
}

TEST_CASE("reports are deterministic") {
    std::string once = dump_report(sod_json(sod_report(wpp_fan(1, 2, 3))));
    std::string twice = dump_report(sod_json(sod_report(wpp_fan(1, 2, 3))));
    CHECK(once == twice);
    CHECK(dump_report(json::parse(once)) == once);

    CHECK(dump_report(analyze_json(mu3())) == dump_report(analyze_json(mu3())));
}
