#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catalog.hpp"

#include <cstdio>
#include <fstream>
#include <set>

using namespace hgm;

namespace {

std::map<std::string, Rat> abc(const Rat& a, const Rat& b, const Rat& c) {
    return {{"a", a}, {"b", b}, {"c", c}};
}

std::string write_temp(const std::string& text) {
    static int n = 0;
    std::string path = "/tmp/hgm_cat_test_" + std::to_string(n++) + ".cat";
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

TEST_CASE("kummer catalog loads with all twenty-four entries") {
    Catalog cat = load_catalog(data_file("kummer24.cat"));
    CHECK(cat.kind == "kummer-catalog");
    CHECK(cat.version == 1);
    REQUIRE(cat.entries.size() == 24);
    for (int i = 1; i <= 24; ++i) {
        char id[8];
        std::snprintf(id, sizeof id, "k%02d", i);
        CHECK(cat.entries[i - 1].id == id);
        CHECK(cat.entries[i - 1].calibration == "standard");
        CHECK(!cat.entries[i - 1].map.num.is_zero());
    }

    const RelationSpec& k1 = cat.entry("k01");
    CHECK(k1.comps.empty());
    CHECK(k1.map.str() == "z");

    const RelationSpec& k2 = cat.entry("k02");
    REQUIRE(k2.comps.size() == 1);
    CHECK(k2.comps[0].kind == TwistComp::Kind::eta);
    CHECK(k2.comps[0].side == Side::target);

    const RelationSpec& k4 = cat.entry("k04");
    CHECK(k4.has(TwistComp::Kind::sign));
    CHECK(k4.has(TwistComp::Kind::jac));
    CHECK(k4.has(TwistComp::Kind::theta));
    CHECK(k4.has(TwistComp::Kind::eta));
    CHECK(!k4.has(TwistComp::Kind::kchar));

    CHECK_THROWS_WITH_AS(cat.entry("k25"), doctest::Contains("k25"), hgm_error);
}

TEST_CASE("kummer parameter evaluation") {
    Catalog cat = load_catalog(data_file("kummer24.cat"));
    auto syms = abc(Rat(1, 3), Rat(1, 5), Rat(1, 2));

    HGMParams src = eval_params(cat.entry("k01").source, syms);
    CHECK(src.a == Rat(1, 3));
    CHECK(src.b == Rat(1, 5));
    CHECK(src.c == Rat(1, 2));
    CHECK(src.d == 0);

    HGMParams t5 = eval_params(cat.entry("k05").target, syms);
    CHECK(t5.a == Rat(1, 3));
    CHECK(t5.b == Rat(1, 5));
    CHECK(t5.c == Rat(1, 30));

    HGMParams t9 = eval_params(cat.entry("k09").target, syms);
    CHECK(t9.a == Rat(1, 3));
    CHECK(t9.b == ratmod1(Rat(1, 3) - Rat(1, 2)));
    CHECK(t9.c == ratmod1(Rat(1, 3) - Rat(1, 5)));

    for (const auto& e : cat.entries) {
        CHECK(is_generic(eval_params(e.source, syms)));
        CHECK(is_generic(eval_params(e.target, syms)));
    }
}

TEST_CASE("cover catalog loads with all ten entries") {
    Catalog cat = load_catalog(data_file("covers.cat"));
    CHECK(cat.kind == "cover-catalog");
    REQUIRE(cat.entries.size() == 10);

    std::set<std::string> ids;
    for (const auto& e : cat.entries) ids.insert(e.id);
    for (const char* want : {"hypergeom-isom", "example-2a", "example-2b", "hgm-equality-1",
                             "kummer-69", "deg4", "second-formula", "eq-1-1", "isom-diof-2",
                             "switch"})
        CHECK(ids.count(want) == 1);

    for (const auto& e : cat.entries) {
        CHECK(!e.expected_profile.empty());
        // the frozen profile matches what the map itself produces
        CHECK(ramification_profile(e.map).str() == e.expected_profile);
        CHECK(is_generic(eval_params(e.source, e.defaults)));
        CHECK(is_generic(eval_params(e.target, e.defaults)));
        check_hypotheses(e, e.defaults);
    }

    const RelationSpec& heq = cat.entry("hgm-equality-1");
    CHECK(heq.calibration == "jac-direct");
    const RelationSpec& k69 = cat.entry("kummer-69");
    CHECK(k69.calibration == "standard");
    REQUIRE(k69.comps.size() == 1);
    CHECK(k69.comps[0].kind == TwistComp::Kind::kchar);
    CHECK(k69.comps[0].u->str() == "-2*z+1");
    const RelationSpec& sf = cat.entry("second-formula");
    REQUIRE(sf.comps.size() == 1);
    CHECK(sf.comps[0].side == Side::source);
    const RelationSpec& dio = cat.entry("isom-diof-2");
    CHECK(dio.has(TwistComp::Kind::tate));
    CHECK(dio.has(TwistComp::Kind::conj));
    CHECK(dio.has(TwistComp::Kind::theta));

    HGMParams dsrc = eval_params(dio.source, dio.defaults);
    CHECK(dsrc.a == Rat(1, 10));
    CHECK(dsrc.b == Rat(9, 10));
    CHECK(dsrc.c == Rat(3, 5));
    CHECK(dsrc.d == Rat(2, 5));
    HGMParams dtgt = eval_params(dio.target, dio.defaults);
    CHECK(dtgt.a == Rat(9, 20));
    CHECK(dtgt.b == Rat(1, 20));
    CHECK(dtgt.c == 0);
    CHECK(dtgt.d == 0);
}

TEST_CASE("hypothesis violations are rejected with the expression named") {
    Catalog cat = load_catalog(data_file("covers.cat"));
    const RelationSpec& d4 = cat.entry("deg4");
    check_hypotheses(d4, {{"a", Rat(1, 5)}});
    // 4a = 1 is an integer: first bullet violated
    CHECK_THROWS_WITH_AS(check_hypotheses(d4, {{"a", Rat(1, 4)}}),
                         doctest::Contains("evaluates to the integer 1"), hgm_error);
    try {
        check_hypotheses(d4, {{"a", Rat(1, 4)}});
    } catch (const hgm_error& e) {
        CHECK(e.code() == errc::argument);
        CHECK(std::string(e.what()).find("deg4") != std::string::npos);
    }
}

TEST_CASE("catalog parse errors carry file and line") {
    auto expect_data_error = [](const std::string& text, const char* needle) {
        std::string path = write_temp(text);
        CHECK_THROWS_WITH_AS(load_catalog(path), doctest::Contains(needle), hgm_error);
        try {
            load_catalog(path);
        } catch (const hgm_error& e) {
            CHECK(e.code() == errc::data);
        }
    };
    expect_data_error("[x]\nsource: a, b, c, 0\n", "missing 'format:'");
    expect_data_error("format: kummer-catalog 1\nsource: a, b, c, 0\n", "outside of an [entry]");
    expect_data_error("format: wrong-kind 1\n", "unrecognized format");
    expect_data_error("format: kummer-catalog 1\n[x]\nbogus: 1\n", "unknown key 'bogus'");
    expect_data_error("format: kummer-catalog 1\n[x]\njac: a, b\n", "jac needs");
    expect_data_error("format: kummer-catalog 1\n[x]\nkchar: a\n", "kchar needs");
    expect_data_error("format: kummer-catalog 1\n[x]\ntheta: a @ nowhere\n", "side must be");
    expect_data_error("format: kummer-catalog 1\n[x]\nsource: a, b, c\n", "exactly 4");
    expect_data_error("format: kummer-catalog 1\n[x]\nsource: a, b, c, 0\ntarget: a, b, c, 0\n",
                      "lacks a map");
    expect_data_error("format: kummer-catalog 1\n[x]\ncalibration: sideways\n",
                      "unknown calibration");
    CHECK_THROWS_AS(load_catalog("/nonexistent/nope.cat"), hgm_error);
}

TEST_CASE("parameter maps of the twenty-four transformations") {
    Catalog cat = load_catalog(data_file("kummer24.cat"));

    Transform t1 = transform_of(cat.entry("k01"));
    CHECK(t1.L == std::array<long, 9>{1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(t1.m == std::array<long, 4>{1, 0, 0, 1});

    Transform t2 = transform_of(cat.entry("k02"));
    CHECK(t2.L == std::array<long, 9>{-1, 0, 1, 0, -1, 1, 0, 0, 1});
    CHECK(t2.m == std::array<long, 4>{1, 0, 0, 1});

    // identity composes neutrally on both sides
    Transform t9 = transform_of(cat.entry("k09"));
    CHECK(transform_compose(t1, t9) == t9);
    CHECK(transform_compose(t9, t1) == t9);
}

TEST_CASE("the six Mobius parts form the symmetric group on {0,1,inf}") {
    Catalog cat = load_catalog(data_file("kummer24.cat"));
    std::vector<Transform> mob;
    std::set<std::array<long, 4>> seen;
    for (const char* id : {"k01", "k05", "k09", "k13", "k17", "k21"}) {
        Transform t = transform_of(cat.entry(id));
        t.L = {1, 0, 0, 0, 1, 0, 0, 0, 1}; // keep only the Mobius part
        CHECK(seen.insert(t.m).second);
        mob.push_back(t);
    }
    GroupSummary g = transform_group(mob);
    CHECK(g.elements.size() == 6);
    CHECK(!g.is_abelian);
}

TEST_CASE("closure of the twenty-four transformations") {
    Catalog cat = load_catalog(data_file("kummer24.cat"));
    std::vector<Transform> gens;
    for (const auto& e : cat.entries) gens.push_back(transform_of(e));

    GroupSummary g = transform_group(gens);
    CHECK(g.elements.size() == 144);
    CHECK(!g.is_abelian);
    CHECK(g.generator_count == 24); // the 24 entries give pairwise distinct elements

    REQUIRE(g.census.size() == 6);
    for (const auto& [mob, count] : g.census) CHECK(count == 24);

    // entries 1, 5 and 9 alone reach all six Mobius parts
    GroupSummary g159 = transform_group({gens[0], gens[4], gens[8]});
    CHECK(g159.elements.size() == 6);
    CHECK(g159.census.size() == 6);

    // entries 1, 2 and 5 reach only two of them
    GroupSummary g125 = transform_group({gens[0], gens[1], gens[4]});
    CHECK(g125.elements.size() == 8);
    CHECK(g125.census.size() == 2);
}
