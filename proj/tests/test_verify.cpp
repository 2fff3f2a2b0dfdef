#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <numeric>

#include "verify.hpp"

using namespace hgm;

namespace {

Syms abc135() {
    return {{"a", Rat(1, 3)}, {"b", Rat(1, 5)}, {"c", Rat(1, 2)}};
}

VerifyOptions defaults() {
    VerifyOptions o;
    o.prime_lo = 1;
    o.prime_hi = 150;
    o.samples = 10;
    o.seed = 7;
    return o;
}

std::string write_temp(const std::string& text) {
    static int n = 0;
    std::string path = "/tmp/hgm_verify_test_" + std::to_string(n++) + ".cat";
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

TEST_CASE("all twenty-four transformations verify on both steps") {
    Catalog cat = load_catalog(data_file("kummer24.cat"));
    VerifyOptions opt = defaults();
    for (int i = 1; i <= 24; ++i) {
        Report r = verify_kummer(cat, i, abc135(), opt);
        CAPTURE(i);
        CHECK(r.ok());
        CHECK(r.monodromy == "ok");
        CHECK(r.calibration == "standard");
        CHECK(r.primes_used == 2); // 31 and 61 are the primes = 1 (mod 30) below 150
        CHECK(r.samples_total == 20);
        CHECK(r.failures == 0);
        CHECK(r.max_rel_err < 1e-12);
    }
}

TEST_CASE("all ten cover relations verify on both steps") {
    Catalog cat = load_catalog(data_file("covers.cat"));
    VerifyOptions opt = defaults();
    std::map<std::string, long> primes_expected{
        {"hypergeom-isom", 2}, {"example-2a", 2},  {"example-2b", 2}, {"hgm-equality-1", 2},
        {"kummer-69", 2},      {"deg4", 2},        {"second-formula", 2},
        {"eq-1-1", 3},         {"isom-diof-2", 3}, {"switch", 2}};
    for (const auto& e : cat.entries) {
        Report r = verify_relation(e, e.defaults, opt);
        CAPTURE(e.id);
        CHECK(r.ok());
        CHECK(r.monodromy == "ok");
        CHECK(r.primes_used == primes_expected.at(e.id));
        CHECK(r.samples_total == 10 * r.primes_used);
        CHECK(r.max_rel_err < 1e-12);
        CHECK(r.calibration == (e.id == "hgm-equality-1" ? "jac-direct" : "standard"));
    }
}

TEST_CASE("reports are deterministic and ordered") {
    Catalog cat = load_catalog(data_file("kummer24.cat"));
    VerifyOptions opt = defaults();
    Report r1 = verify_kummer(cat, 2, abc135(), opt);
    Report r2 = verify_kummer(cat, 2, abc135(), opt);
    CHECK(report_str(r1) == report_str(r2));
    CHECK(r1.identity == "k02(a=1/3,b=1/5,c=1/2)");
    for (std::size_t i = 1; i < r1.rows.size(); ++i) {
        bool ordered = r1.rows[i - 1].prime < r1.rows[i].prime ||
                       (r1.rows[i - 1].prime == r1.rows[i].prime &&
                        r1.rows[i - 1].sample < r1.rows[i].sample);
        CHECK(ordered);
    }
    // a different seed changes the sampled residues
    opt.seed = 8;
    Report r3 = verify_kummer(cat, 2, abc135(), opt);
    CHECK(report_str(r1) != report_str(r3));
    CHECK(r3.ok());
}

TEST_CASE("exact backend confirms the identities with no tolerance") {
    VerifyOptions opt = defaults();
    opt.backend = Backend::exact;
    opt.prime_hi = 43;
    opt.samples = 3;

    Catalog kc = load_catalog(data_file("kummer24.cat"));
    Report r = verify_kummer(kc, 5, abc135(), opt);
    CHECK(r.ok());
    CHECK(r.primes_used == 1); // p = 31
    CHECK(r.samples_total == 3);

    Catalog cc = load_catalog(data_file("covers.cat"));
    Report r2 = verify_relation(cc.entry("isom-diof-2"), cc.entry("isom-diof-2").defaults, opt);
    CHECK(r2.ok());
    CHECK(r2.primes_used == 1); // p = 41
    CHECK(r2.samples_total == 3);

    // above the exact cap the prime is skipped with a note
    opt.prime_lo = 47;
    opt.prime_hi = 61;
    Report r3 = verify_kummer(kc, 1, abc135(), opt);
    CHECK(r3.samples_total == 0);
    REQUIRE(r3.notes.size() == 1);
    CHECK(r3.notes[0] == "p=61: skipped (exact backend cap)");
}

TEST_CASE("every single-component perturbation breaks a step") {
    VerifyOptions base = defaults();
    base.samples = 5;
    int checked = 0, broken = 0;
    auto sweep = [&](const RelationSpec& e, const Syms& syms) {
        long N = std::lcm(params_level(eval_params(e.source, syms)),
                          params_level(eval_params(e.target, syms)));
        auto control = [&](int param, int comp) {
            VerifyOptions o = base;
            o.perturb_param = param;
            o.perturb_comp = comp;
            o.perturb_delta = Rat(1, 2 * N);
            ++checked;
            Report r = verify_relation(e, syms, o);
            if (!r.ok()) ++broken;
        };
        for (int p = 0; p < 8; ++p) control(p, -1);
        for (int ci = 0; ci < static_cast<int>(e.comps.size()); ++ci) {
            auto k = e.comps[ci].kind;
            if (k == TwistComp::Kind::tate || k == TwistComp::Kind::conj) continue;
            control(-1, ci);
        }
    };
    Catalog kc = load_catalog(data_file("kummer24.cat"));
    for (const auto& e : kc.entries) sweep(e, abc135());
    Catalog cc = load_catalog(data_file("covers.cat"));
    for (const auto& e : cc.entries) sweep(e, e.defaults);
    CHECK(checked == 348);
    CHECK(broken == checked);
}

TEST_CASE("a parameter perturbation is caught before any prime work") {
    Catalog cat = load_catalog(data_file("covers.cat"));
    VerifyOptions o = defaults();
    o.perturb_param = 2; // target lower parameter
    o.perturb_delta = Rat(1, 60);
    Report r = verify_relation(cat.entry("hypergeom-isom"), cat.entry("hypergeom-isom").defaults, o);
    CHECK(!r.ok());
    CHECK(r.monodromy != "ok");
    CHECK(r.monodromy.find("place") != std::string::npos);
    CHECK(r.rows.empty());
}

TEST_CASE("calibration variants discriminate the sign conventions") {
    VerifyOptions opt = defaults();
    opt.samples = 5;
    Catalog kc = load_catalog(data_file("kummer24.cat"));
    for (const auto& e : kc.entries) {
        auto pass = calibrate_relation(e, abc135(), opt);
        CAPTURE(e.id);
        CHECK(std::count(pass.begin(), pass.end(), "standard") == 1);
        if (e.has(TwistComp::Kind::jac))
            CHECK(std::count(pass.begin(), pass.end(), "jac-direct") == 0);
    }
    Catalog cc = load_catalog(data_file("covers.cat"));
    auto passing = [&](const char* id) {
        return calibrate_relation(cc.entry(id), cc.entry(id).defaults, opt);
    };
    CHECK(passing("hgm-equality-1") == std::vector<std::string>{"jac-direct", "side-swap"});
    CHECK(passing("example-2b") == std::vector<std::string>{"standard", "kchar-neg"});
    CHECK(passing("kummer-69") == std::vector<std::string>{"standard", "jac-direct"});
    CHECK(passing("deg4") ==
          std::vector<std::string>{"standard", "jac-direct", "kchar-neg"});
    CHECK(passing("isom-diof-2") ==
          std::vector<std::string>{"standard", "jac-direct", "kchar-neg"});
    CHECK(passing("hypergeom-isom") ==
          std::vector<std::string>{"standard", "jac-direct", "kchar-neg", "side-swap"});
    // the recorded calibration is always among the passing variants
    for (const auto& e : cc.entries) {
        auto pass = calibrate_relation(e, e.defaults, opt);
        CHECK(std::count(pass.begin(), pass.end(), e.calibration) == 1);
    }
}

TEST_CASE("corrupted twists fail at the first prime") {
    VerifyOptions opt = defaults();
    // hgm-equality-1 with the Jacobi factor dropped entirely
    Catalog dropped = load_catalog(write_temp(
        "format: cover-catalog 1\n"
        "[no-jac]\n"
        "free: a=1/3, b=1/5\n"
        "source: a, b, (a+b+1)/2, 0\n"
        "target: a/2, b/2, 1/2, 0\n"
        "map: (1-2*z)^2\n"));
    Report r = verify_relation(dropped.entries[0], dropped.entries[0].defaults, opt);
    CHECK(r.monodromy == "ok"); // the Jacobi factor never had a monodromy footprint
    CHECK(r.failures == r.samples_total);
    CHECK(r.samples_total > 0);
    REQUIRE(!r.rows.empty());
    CHECK(r.rows[0].status == "fail");

    // transformation two with the eta exponent negated
    Catalog negated = load_catalog(write_temp(
        "format: kummer-catalog 1\n"
        "[k02neg]\n"
        "source: a, b, c, 0\n"
        "target: c-a, c-b, c, 0\n"
        "map: z\n"
        "eta: a+b-c\n"));
    Report r2 = verify_relation(negated.entries[0], abc135(), opt);
    CHECK(!r2.ok());
}

TEST_CASE("non-generic or out-of-range instantiations are rejected") {
    Catalog cat = load_catalog(data_file("kummer24.cat"));
    VerifyOptions opt = defaults();
    Syms bad{{"a", Rat(1, 3)}, {"b", Rat(1, 5)}, {"c", Rat(1, 3)}};
    CHECK_THROWS_WITH_AS(verify_kummer(cat, 1, bad, opt), doctest::Contains("not generic"),
                         hgm_error);
    CHECK_THROWS_WITH_AS(verify_kummer(cat, 0, abc135(), opt), doctest::Contains("1..24"),
                         hgm_error);
    CHECK_THROWS_WITH_AS(verify_kummer(cat, 25, abc135(), opt), doctest::Contains("1..24"),
                         hgm_error);
}

TEST_CASE("diophantine relation boundary value at z = 1") {
    // source parameters of the q = 5 instantiation
    HGMParams src = make_params(Rat(1, 10), Rat(-1, 10), Rat(3, 5), Rat(-3, 5));
    auto F = make_field(41);
    GaussTable gt(F, Backend::floating);
    TraceAtOne t = trace_at_one(gt, src);
    CHECK(t.branch == TraceAtOne::Branch::tate);
    CHECK(t.delta == 1); // motive trace at 1 is N(p) = p
    CHECK(std::abs(t.value.approx() - std::complex<double>(41, 0)) < 1e-9);
    CHECK(std::abs(hyp_sum(gt, src, 1).approx() - std::complex<double>(1.0 / 41, 0)) < 1e-12);
}
