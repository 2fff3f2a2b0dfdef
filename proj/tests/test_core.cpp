#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "cyc.hpp"
#include "expr.hpp"
#include "rat.hpp"

using namespace hgm;

namespace {
// splitmix64; also used by the verification drivers (documented in README)
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s += 0x9E3779B97F4A7C15ull;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    long uniform(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }
};
} // namespace

TEST_CASE("ratmod1 reduces into [0,1)") {
    CHECK(ratmod1(7, 3) == Rat(1, 3));
    CHECK(ratmod1(-1, 3) == Rat(2, 3));
    CHECK(ratmod1(6, 3) == 0);
    CHECK(ratmod1(Rat(-9, 4)) == Rat(3, 4));
    CHECK(rat_str(ratmod1(5, -3)) == "1/3");
    CHECK_THROWS_AS(ratmod1(1, 0), hgm_error);
}

TEST_CASE("rational parsing and printing") {
    CHECK(rat_str(parse_rat(" -2/6 ")) == "-1/3");
    CHECK(parse_rat("4") == 4);
    CHECK_THROWS_AS(parse_rat("1/0"), hgm_error);
    CHECK_THROWS_AS(parse_rat("x"), hgm_error);
    auto lists = parse_rat_lists("1/3,1/5;1/2,0");
    REQUIRE(lists.size() == 2);
    CHECK(lists[0][1] == Rat(1, 5));
    CHECK(lists[1][0] == Rat(1, 2));
}

TEST_CASE("expression parser evaluates linear and rational forms") {
    std::map<std::string, Rat> syms{{"a", Rat(1, 3)}, {"b", Rat(1, 5)}, {"q", Rat(5)}};
    CHECK(eval_expr(*parse_expr("(a+b+1)/2"), syms) == Rat(23, 30));
    CHECK(eval_expr(*parse_expr("c-a-b"), {{"a", Rat(1, 3)}, {"b", Rat(1, 5)}, {"c", Rat(1, 2)}}) ==
          Rat(-1, 30));
    CHECK(eval_expr(*parse_expr("1/2-1/(4*q)"), syms) == Rat(9, 20));
    CHECK(eval_expr(*parse_expr("-(2)^3"), {}) == -8);
    CHECK(eval_expr(*parse_expr("q+2"), syms) == 7);
    CHECK_THROWS_AS(eval_expr(*parse_expr("z"), syms), hgm_error);
    CHECK_THROWS_AS(parse_expr("1+"), hgm_error);
    auto sy = expr_symbols(*parse_expr("4*z*(1-z)+a"));
    REQUIRE(sy.size() == 2);
    CHECK(sy[0] == "a");
    CHECK(sy[1] == "z");
}

TEST_CASE("cyclotomic polynomials") {
    auto c6 = cyclotomic_poly(6);  // x^2 - x + 1
    REQUIRE(c6.size() == 3);
    CHECK(c6[0] == 1);
    CHECK(c6[1] == -1);
    CHECK(c6[2] == 1);
    auto c12 = cyclotomic_poly(12);  // x^4 - x^2 + 1
    REQUIRE(c12.size() == 5);
    CHECK(c12[2] == -1);
}

TEST_CASE("exact roots of unity behave like e^{2 pi i e}") {
    auto i4 = CycValue::root(Backend::exact, 4, 1);
    CHECK(std::abs(i4.approx() - std::complex<double>(0, 1)) < 1e-14);
    auto m1 = CycValue::root(Backend::exact, 6, 3);
    CHECK(cyc_equal(m1, CycValue::from_rat(Backend::exact, Rat(-1)), 0));
    // sum over all 5th roots vanishes
    CycValue s = CycValue::zero(Backend::exact);
    for (long j = 0; j < 5; ++j) s = s + CycValue::root(Backend::exact, 5, j);
    CHECK(s.is_zero());
    // zeta_3 * zeta_4 = zeta_12^7
    auto prod = CycValue::root(Backend::exact, 3, 1) * CycValue::root(Backend::exact, 4, 1);
    CHECK(cyc_equal(prod, CycValue::root(Backend::exact, 12, 7), 0));
    // inverse of a tagged root
    auto z = cyc_root_of_unity(Rat(3, 7), Backend::exact);
    CHECK(cyc_equal(z * z.inverse(), CycValue::from_rat(Backend::exact, 1), 0));
}

TEST_CASE("scale arithmetic stays exact") {
    auto v = CycValue::from_rat(Backend::exact, Rat(-12)).mul_rat(Rat(1, 1 - 13));
    CHECK(cyc_equal(v, CycValue::from_rat(Backend::exact, 1), 0));
    auto w = CycValue::from_rat(Backend::exact, Rat(2, 3)) + CycValue::from_rat(Backend::exact, Rat(1, 3));
    CHECK(cyc_equal(w, CycValue::from_rat(Backend::exact, 1), 0));
}

TEST_CASE("exact arithmetic matches the float backend on random values") {
    Rng rng(12345);
    const long levels[] = {1, 2, 3, 4, 5, 6, 8, 12, 20, 30, 60, 90, 120, 200};
    for (int it = 0; it < 200; ++it) {
        long l1 = levels[rng.uniform(14)], l2 = levels[rng.uniform(14)];
        CycValue a = CycValue::root(Backend::exact, l1, rng.uniform(l1)).mul_rat(
            Rat(rng.uniform(19) - 9, 1 + rng.uniform(7)));
        CycValue b = CycValue::root(Backend::exact, l2, rng.uniform(l2)).mul_rat(
            Rat(rng.uniform(19) - 9, 1 + rng.uniform(7)));
        CycValue s = a + b, m = a * b;
        std::complex<double> fs = a.approx() + b.approx(), fm = a.approx() * b.approx();
        CHECK(std::abs(s.approx() - fs) <= 1e-8 * std::max(1.0, std::abs(fs)));
        CHECK(std::abs(m.approx() - fm) <= 1e-8 * std::max(1.0, std::abs(fm)));
    }
}

TEST_CASE("cyc_equal is exact and transitive at mixed levels") {
    Rng rng(777);
    for (int it = 0; it < 100; ++it) {
        long l = 2 + rng.uniform(40);
        long e = rng.uniform(l);
        // same value represented at level l, 2l, 3l
        CycValue x = CycValue::root(Backend::exact, l, e);
        CycValue y = CycValue::root(Backend::exact, 2 * l, 2 * e);
        CycValue z = CycValue::root(Backend::exact, 3 * l, 3 * e);
        CHECK(cyc_equal(x, y, 0));
        CHECK(cyc_equal(y, z, 0));
        CHECK(cyc_equal(x, z, 0));
    }
    // float tolerance rule
    CHECK(cyc_equal(CycValue::from_double(1.0), CycValue::from_double(1.0 + 1e-10), 1e-8));
    CHECK_FALSE(cyc_equal(CycValue::from_double(1.0), CycValue::from_double(1.001), 1e-8));
}

TEST_CASE("exact inverse limited to monomials") {
    auto z = CycValue::root(Backend::exact, 8, 3).mul_rat(Rat(2, 5));
    CHECK(cyc_equal(z * z.inverse(), CycValue::from_rat(Backend::exact, 1), 0));
    auto w = CycValue::root(Backend::exact, 5, 1) + CycValue::from_rat(Backend::exact, 2);
    CHECK_THROWS_AS(w.inverse(), hgm_error);
}

TEST_CASE("value printing") {
    CHECK(CycValue::from_double(1.5, -2.0).str() == "(1.5, -2)");
    auto v = CycValue::from_rat(Backend::exact, Rat(-3, 2));
    CHECK(v.str() == "[-3/2] @ level 1");
}
