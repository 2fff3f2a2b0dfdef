#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "error.hpp"
#include "rng.hpp"
#include "series.hpp"

using namespace hgm;

namespace {
const double kPi = 3.14159265358979323846;

// Random reduced rational with denominator <= 12, |value| < 2, nonzero.
Rat rand_rat12(SplitMix64& rng) {
    for (;;) {
        long den = 1 + static_cast<long>(rng.below(12));
        long num = static_cast<long>(rng.below(2 * 2 * den - 1)) - (2 * den - 1);
        if (num == 0) continue;
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
}
}  // namespace

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rat(7, 3), 0) == 1);
    CHECK(pochhammer(Rat(1), 5) == 120);
    CHECK(pochhammer(Rat(1, 2), 3) == Rat(15, 8));
    CHECK(pochhammer(Rat(-3), 4) == 0);
    CHECK_THROWS_AS(pochhammer(Rat(1), -1), hgm_error);
}

TEST_CASE("gamma_real") {
    CHECK(std::abs(gamma_real(0.5) - std::sqrt(kPi)) <= 1e-12 * std::sqrt(kPi));
    CHECK(std::abs(gamma_real(5.0) - 24.0) <= 1e-12 * 24.0);
    double refl = gamma_real(1.0 / 3) * gamma_real(2.0 / 3);  // pi / sin(pi/3)
    CHECK(std::abs(refl - 2 * kPi / std::sqrt(3.0)) <= 1e-12 * refl);
    CHECK(std::abs(gamma_real(-0.5) + 2 * std::sqrt(kPi)) <= 1e-12 * 2 * std::sqrt(kPi));
    CHECK_THROWS_WITH_AS(gamma_real(0.0), doctest::Contains("pole"), hgm_error);
    CHECK_THROWS_AS(gamma_real(-3.0), hgm_error);
}

TEST_CASE("f21 basics and preconditions") {
    CHECK(f21(Rat(1, 3), Rat(1, 5), Rat(1, 2), Cplx(0, 0), 50).value == Cplx(1, 0));
    CHECK(f21(Rat(0), Rat(1, 5), Rat(1, 2), Cplx(0.3, 0), 50).value == Cplx(1, 0));
    for (double zr : {0.3, -0.5, 0.05}) {
        auto s = f21(Rat(1), Rat(1), Rat(1), Cplx(zr, 0), 0, 1e-12);
        CHECK(std::abs(s.value - 1.0 / (1.0 - zr)) <= s.tail_bound + 1e-12);
    }
    CHECK_THROWS_WITH_AS(f21(Rat(1), Rat(1), Rat(0), Cplx(0.1, 0), 10),
                         doctest::Contains("non-positive integer"), hgm_error);
    CHECK_THROWS_AS(f21(Rat(1), Rat(1), Rat(-2), Cplx(0.1, 0), 10), hgm_error);
    CHECK_THROWS_WITH_AS(f21(Rat(1), Rat(1), Rat(1, 2), Cplx(1.0, 0), 10),
                         doctest::Contains("|z|"), hgm_error);
    CHECK_THROWS_AS(f21(Rat(1), Rat(1), Rat(1, 2), Cplx(0.8, 0.8), 10), hgm_error);
    CHECK_THROWS_AS(f21(Rat(1), Rat(1), Rat(1, 2), Cplx(0.1, 0), -3), hgm_error);
    CHECK_THROWS_WITH_AS(f21(Rat(1), Rat(1), Rat(1, 2), Cplx(0.1, 0), 0, 0.0),
                         doctest::Contains("target_tail"), hgm_error);
}

TEST_CASE("terminating series is summed exactly") {
    // F(-3, b; c; z) is a cubic polynomial; compare against the exact value.
    Rat b(1, 5), c(1, 2);
    double zr = 0.37;
    auto s = f21(Rat(-3), b, c, Cplx(zr, 0), 100);
    CHECK(s.tail_bound == 0.0);
    CHECK(s.terms_used == 4);
    double exact = 0;
    for (long n = 0; n <= 3; ++n) {
        Rat coef = pochhammer(Rat(-3), n) * pochhammer(b, n) /
                   (pochhammer(c, n) * pochhammer(Rat(1), n));
        exact += coef.get_d() * std::pow(zr, static_cast<double>(n));
    }
    CHECK(std::abs(s.value.real() - exact) <= 1e-14);
    CHECK(s.value.imag() == 0.0);
}

TEST_CASE("tail bound is a true bound under doubling") {
    SplitMix64 rng(99);
    int checked = 0;
    for (int i = 0; checked < 50 && i < 500; ++i) {
        Rat a = rand_rat12(rng), b = rand_rat12(rng);
        Rat c = rand_rat12(rng);
        if (is_integer(c) && c <= 0) continue;
        Cplx z(static_cast<double>(rng.below(1400)) / 1000.0 - 0.7,
               static_cast<double>(rng.below(1400)) / 1000.0 - 0.7);
        if (std::abs(z) >= 0.72) continue;
        long terms = 20 + static_cast<long>(rng.below(60));
        auto s1 = f21(a, b, c, z, terms);
        if (!std::isfinite(s1.tail_bound)) continue;
        auto s2 = f21(a, b, c, z, 2 * terms);
        // Allowance beyond the tail bound: rounding inside the two partial sums.
        CHECK(std::abs(s2.value - s1.value) <= s1.tail_bound + s1.round_off + s2.round_off);
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("first transformation identity") {
    auto c = verify_series_identity(SeriesWhich::eq1, Rat(1, 3), Rat(1, 5), Cplx(0.1, 0));
    CHECK(c.pass);
    CHECK(c.abs_err <= 1e-10);
    CHECK_FALSE(c.precision_warning);

    auto fixed = verify_series_identity(SeriesWhich::eq1, Rat(1, 3), Rat(1, 5), Cplx(0.1, 0), 80);
    CHECK(fixed.abs_err <= 1e-10);

    auto zero = verify_series_identity(SeriesWhich::eq1, Rat(1, 3), Rat(1, 5), Cplx(0, 0));
    CHECK(zero.lhs == Cplx(1, 0));
    CHECK(zero.rhs == Cplx(1, 0));
    CHECK(zero.abs_err == 0.0);

    auto cplx = verify_series_identity(SeriesWhich::eq1, Rat(1, 3), Rat(1, 5), Cplx(0.1, 0.15));
    CHECK(cplx.pass);

    CHECK_THROWS_WITH_AS(
        verify_series_identity(SeriesWhich::eq1, Rat(1, 3), Rat(1, 5), Cplx(0.5, 0)),
        doctest::Contains("4z(1-z)"), hgm_error);
    CHECK_THROWS_WITH_AS(
        verify_series_identity(SeriesWhich::eq1, Rat(1, 3), Rat(1, 5), Cplx(1.2, 0)),
        doctest::Contains("|z|"), hgm_error);
    CHECK_THROWS_WITH_AS(
        verify_series_identity(SeriesWhich::eq1, Rat(-1, 2), Rat(-1, 2), Cplx(0.1, 0)),
        doctest::Contains("non-positive"), hgm_error);
}

TEST_CASE("second transformation identity") {
    auto c = verify_series_identity(SeriesWhich::eq67, Rat(1, 3), Rat(1, 5), Cplx(0.6, 0));
    CHECK(c.pass);
    CHECK(c.abs_err <= 1e-8);
    CHECK_FALSE(c.precision_warning);

    auto fixed = verify_series_identity(SeriesWhich::eq67, Rat(1, 3), Rat(1, 5), Cplx(0.6, 0), 120);
    CHECK(fixed.abs_err <= 1e-8);

    CHECK(eq67_admissible(Rat(1, 3), Rat(1, 5), Cplx(0.6, 0)));
    CHECK_FALSE(eq67_admissible(Rat(1, 3), Rat(1, 5), Cplx(-0.2, 0)));   // |1-z| > 1
    CHECK_FALSE(eq67_admissible(Rat(5, 12), Rat(7, 12), Cplx(0.5, 0)));  // a+b = 1
    CHECK_FALSE(eq67_admissible(Rat(0), Rat(1, 5), Cplx(0.5, 0)));
    CHECK_THROWS_WITH_AS(
        verify_series_identity(SeriesWhich::eq67, Rat(5, 12), Rat(7, 12), Cplx(0.5, 0)),
        doctest::Contains("odd integer"), hgm_error);
    CHECK_THROWS_WITH_AS(
        verify_series_identity(SeriesWhich::eq67, Rat(1, 3), Rat(1, 5), Cplx(-0.2, 0)),
        doctest::Contains("|1-z|"), hgm_error);
}

TEST_CASE("randomized identity sweeps") {
    SplitMix64 rng = seeded_stream(7, "series-unit");
    int done = 0;
    while (done < 8) {
        Rat a = rand_rat12(rng), b = rand_rat12(rng);
        Rat c = (a + b + 1) / 2;
        c.canonicalize();
        if (is_integer(c) && c <= 0) continue;
        for (int j = 0; j < 5; ++j) {
            Cplx z(static_cast<double>(rng.below(400)) / 1000.0 - 0.2,
                   static_cast<double>(rng.below(400)) / 1000.0 - 0.2);
            if (std::abs(z) > 0.2) continue;
            auto chk = verify_series_identity(SeriesWhich::eq1, a, b, z);
            CAPTURE(chk.detail);
            CHECK(chk.pass);
            CHECK(chk.abs_err <= 1e-10);
        }
        ++done;
    }
    done = 0;
    while (done < 10) {
        Rat a = rand_rat12(rng), b = rand_rat12(rng);
        Cplx z(0.35 + static_cast<double>(rng.below(300)) / 1000.0, 0);
        if (!eq67_admissible(a, b, z)) continue;
        auto chk = verify_series_identity(SeriesWhich::eq67, a, b, z);
        CAPTURE(chk.detail);
        CHECK(chk.pass);
        CHECK(chk.abs_err <= 1e-8);
        CHECK_FALSE(chk.precision_warning);
        ++done;
    }
}

TEST_CASE("term cap raises the precision warning") {
    auto c = verify_series_identity(SeriesWhich::eq1, Rat(1, 3), Rat(1, 5), Cplx(0.1, 0), 0, 1e-300);
    CHECK(c.precision_warning);
    CHECK(c.tol > 1e-300);
    CHECK(c.detail.find("precision warning") != std::string::npos);
}

TEST_CASE("complex parsing and printing") {
    CHECK(parse_complex("0.1+0i") == Cplx(0.1, 0));
    CHECK(parse_complex("-0.3+0.2i") == Cplx(-0.3, 0.2));
    CHECK(parse_complex("2e-1-3e-2i") == Cplx(0.2, -0.03));
    CHECK(parse_complex("0.5") == Cplx(0.5, 0));
    CHECK(parse_complex("0.2i") == Cplx(0, 0.2));
    CHECK(parse_complex("i") == Cplx(0, 1));
    CHECK(parse_complex("-i") == Cplx(0, -1));
    CHECK(parse_complex("1+i") == Cplx(1, 1));
    CHECK(parse_complex(" 0.1 + 0.2 i ") == Cplx(0.1, 0.2));
    CHECK_THROWS_AS(parse_complex("abc"), hgm_error);
    CHECK_THROWS_AS(parse_complex("1+2"), hgm_error);
    CHECK_THROWS_AS(parse_complex(""), hgm_error);
    for (Cplx z : {Cplx(0.1, 0), Cplx(-2.5, 3.75), Cplx(0, -1e-3)}) {
        CHECK(parse_complex(cplx_str(z)) == z);
    }
}
