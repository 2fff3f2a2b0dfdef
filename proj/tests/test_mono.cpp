#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mono.hpp"

using namespace hgm;

TEST_CASE("class construction, predicates") {
    LocalClass c = make_class(Rat(5, 6), Rat(-2, 3), false);
    CHECK(c.e1 == Rat(1, 3));
    CHECK(c.e2 == Rat(5, 6));
    CHECK(c.str() == "{1/3,5/6}");
    CHECK(!c.is_trivial());
    CHECK(!c.is_pseudo_reflection());

    CHECK(make_class(Rat(0), Rat(0), false).is_trivial());
    CHECK(!make_class(Rat(0), Rat(0), true).is_trivial());
    CHECK(make_class(Rat(0), Rat(0), true).is_pseudo_reflection());   // transvection
    CHECK(make_class(Rat(0), Rat(1, 4), false).is_pseudo_reflection());
    CHECK(!make_class(Rat(1, 2), Rat(1, 2), true).is_pseudo_reflection());
    CHECK(make_class(Rat(0), Rat(0), true).str() == "{0,0;jordan}");
}

TEST_CASE("twist and pullback of classes") {
    LocalClass c = make_class(Rat(1, 3), Rat(5, 6), false);
    LocalClass t = twist_class(c, Rat(1, 6));
    CHECK(t.e1 == Rat(0));
    CHECK(t.e2 == Rat(1, 2));
    LocalClass p = pull_class(c, 3);
    CHECK(p.e1 == Rat(0));
    CHECK(p.e2 == Rat(1, 2));
    // colliding exponents stay semisimple: the result is scalar, not a Jordan block
    LocalClass q = pull_class(make_class(Rat(0), Rat(1, 2), false), 2);
    CHECK(q.is_trivial());
    CHECK(!q.jordan);
    // a genuine Jordan part survives pullback
    CHECK(pull_class(make_class(Rat(0), Rat(0), true), 5).jordan);
    CHECK_THROWS_AS(pull_class(c, 0), hgm_error);
}

TEST_CASE("three-point local data") {
    SUBCASE("generic parameters") {
        MonodromyData d = local_data(parse_params("1/3,1/4;5/6,0"));
        CHECK(d.at0.str() == "{0,1/6}");
        CHECK(d.at1.str() == "{0,1/4}");
        CHECK(d.at_inf.str() == "{1/4,1/3}");
        CHECK(!d.at0.jordan);
        CHECK(d.at1.is_pseudo_reflection());
    }
    SUBCASE("unipotent everywhere") {
        MonodromyData d = local_data(parse_params("1/2,1/2;0,0"));
        CHECK(d.at0.str() == "{0,0;jordan}");
        CHECK(d.at1.str() == "{0,0;jordan}");
        CHECK(d.at_inf.str() == "{1/2,1/2;jordan}");
        CHECK(d.at1.is_pseudo_reflection());
    }
    SUBCASE("integral exponent difference without equality is not a Jordan point") {
        // a+b = 13/12, c+d = 1/12: difference 1, at1 = {0,0} with Jordan part
        MonodromyData d = local_data(parse_params("3/4,1/3;1/12,0"));
        CHECK(d.at1.str() == "{0,0;jordan}");
    }
}

TEST_CASE("parameters are recovered from local data") {
    for (const char* s : {"1/3,1/4;5/6,0", "1/2,1/2;0,0", "1/5,2/5;1/2,0", "1/30,29/30;7/30,11/30"}) {
        HGMParams P = parse_params(s);
        HGMParams Q = params_from_local_data(local_data(P));
        // recovery is up to order within each pair
        CHECK(local_data(Q).str() == local_data(P).str());
        CHECK(ratmod1(Q.a + Q.b) == ratmod1(P.a + P.b));
        CHECK(ratmod1(Q.c + Q.d) == ratmod1(P.c + P.d));
    }
    MonodromyData bad = local_data(parse_params("1/3,1/4;5/6,0"));
    bad.at1.jordan = true; // corrupt the consistency between the three points
    try {
        params_from_local_data(bad);
        FAIL("expected data error");
    } catch (const hgm_error& e) {
        CHECK(e.code() == errc::data);
    }
}
