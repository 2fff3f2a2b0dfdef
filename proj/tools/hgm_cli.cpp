// Command-line front end.  Talks to the library exclusively through the
// public C interface.
//
// Exit codes: 0 all rows pass, 1 failing rows, 2 usage or argument error,
// 3 catalog/data error, 4 any other error.
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "hgm/hgm.h"

namespace {

struct GlobalFlags {
    std::string backend, tol, seed, primes, samples, threads, json;
};

int exit_code_for(int rc) {
    if (rc == HGM_ERR_ARGUMENT) return 2;
    if (rc == HGM_ERR_DATA) return 3;
    return 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite hypergeometric sums, transformation checks, and monodromy data"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--backend", g.backend, "value backend: exact | float");
    app.add_option("--tol", g.tol, "relative tolerance for floating comparisons");
    app.add_option("--seed", g.seed, "RNG seed (default 7)");
    app.add_option("--primes", g.primes, "inclusive prime range lo..hi (default 1..150)");
    app.add_option("--samples", g.samples, "evaluation points per prime (default 10)");
    app.add_option("--threads", g.threads, "worker threads, 0 = one per hardware thread");
    app.add_option("--json", g.json, "write the canonical JSON document to this path");

    std::string params, zval;
    auto* c_hsum = app.add_subcommand("hsum", "finite sum rows cross-checked against an oracle");
    c_hsum->fallthrough();
    c_hsum->add_option("--params", params, "parameters \"a,b;c,d\"")->required();
    c_hsum->add_option("--z", zval, "rational argument, e.g. 3 or -7/5")->required();

    std::string index = "all", abc = "1/3,1/5,1/2";
    auto* c_kum = app.add_subcommand("verify-kummer", "verify the 24 catalog transformations");
    c_kum->fallthrough();
    c_kum->add_option("--index", index, "entry number 1..24, or all");
    c_kum->add_option("--abc", abc, "instantiation \"a,b,c\" of the free symbols");

    std::string cover = "all", assigns;
    auto* c_cov = app.add_subcommand("verify-cover", "verify the cover/pullback catalog");
    c_cov->fallthrough();
    c_cov->add_option("--name", cover, "catalog id, or all");
    c_cov->add_option("--set", assigns, "symbol overrides \"a=1/3,q=5\"");

    auto* c_grp = app.add_subcommand("group", "closure of the 24 transformations");
    c_grp->fallthrough();

    int sp_count = 20, sp_jac = 10;
    auto* c_spc = app.add_subcommand("special", "closed forms at z = 1");
    c_spc->fallthrough();
    c_spc->add_option("--count", sp_count, "branch-selection parameter sets (default 20)");
    c_spc->add_option("--jac", sp_jac, "exact Jacobi-equality checks (default 10)");

    std::string alpha, beta, gamma;
    long dq = 3, dpexp = 2;
    int dcount = 0;
    auto* c_dio = app.add_subcommand("dioph", "specialization chain for alpha^q + beta^q = gamma^pexp");
    c_dio->fallthrough();
    c_dio->add_option("--alpha", alpha, "integer alpha")->required();
    c_dio->add_option("--beta", beta, "integer beta")->required();
    c_dio->add_option("--gamma", gamma, "integer gamma")->required();
    c_dio->add_option("--q", dq, "odd prime exponent (default 3)");
    c_dio->add_option("--pexp", dpexp, "prime exponent on gamma (default 2)");
    c_dio->add_option("--count", dcount, "additional generated solutions to check");

    std::string swhich, sa, sb, sz;
    long sterms = 0;
    auto* c_ser = app.add_subcommand("series", "classical series identities");
    c_ser->fallthrough();
    c_ser->add_option("--which", swhich, "identity: eq1 | eq67")->required();
    c_ser->add_option("--a", sa, "rational parameter a")->required();
    c_ser->add_option("--b", sb, "rational parameter b")->required();
    c_ser->add_option("--z", sz, "complex argument, e.g. 0.1+0i")->required();
    c_ser->add_option("--terms", sterms, "fixed term count, 0 = adaptive");

    std::string mparams, mmap;
    auto* c_mono = app.add_subcommand("monodromy", "local classes and ramification profiles");
    c_mono->fallthrough();
    c_mono->add_option("--params", mparams, "parameters \"a,b;c,d\"");
    c_mono->add_option("--map", mmap, "rational map expression, e.g. 4*z*(1-z)");

    auto* c_suite = app.add_subcommand("suite", "fixed-order run of every check");
    c_suite->fallthrough();

    std::string calib_log = "data/calibration.log";
    auto* c_cal = app.add_subcommand("calibrate", "four-variant sign probe over the catalogs");
    c_cal->fallthrough();
    c_cal->add_option("--log", calib_log, "calibration log path (empty = no log file)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    hgm_options* opt = hgm_options_new();
    auto setopt = [&](const char* key, const std::string& value) {
        if (value.empty()) return true;
        if (hgm_options_set(opt, key, value.c_str()) != HGM_OK) {
            std::fprintf(stderr, "error: %s\n", hgm_last_error());
            return false;
        }
        return true;
    };
    if (!setopt("backend", g.backend) || !setopt("tol", g.tol) || !setopt("seed", g.seed) ||
        !setopt("primes", g.primes) || !setopt("samples", g.samples) ||
        !setopt("threads", g.threads) || !setopt("json", g.json)) {
        hgm_options_free(opt);
        return 2;
    }

    hgm_result* res = nullptr;
    int rc = HGM_OK;
    if (c_hsum->parsed())
        rc = hgm_hsum(opt, params.c_str(), zval.c_str(), &res);
    else if (c_kum->parsed())
        rc = hgm_verify_kummer(opt, index.c_str(), abc.c_str(), &res);
    else if (c_cov->parsed())
        rc = hgm_verify_cover(opt, cover.c_str(), assigns.c_str(), &res);
    else if (c_grp->parsed())
        rc = hgm_group(opt, &res);
    else if (c_spc->parsed())
        rc = hgm_special(opt, sp_count, sp_jac, &res);
    else if (c_dio->parsed())
        rc = hgm_dioph(opt, alpha.c_str(), beta.c_str(), gamma.c_str(), dq, dpexp, dcount, &res);
    else if (c_ser->parsed())
        rc = hgm_series(opt, swhich.c_str(), sa.c_str(), sb.c_str(), sz.c_str(), sterms, &res);
    else if (c_mono->parsed())
        rc = hgm_monodromy(opt, mparams.c_str(), mmap.c_str(), &res);
    else if (c_suite->parsed())
        rc = hgm_suite(opt, &res);
    else if (c_cal->parsed())
        rc = hgm_calibrate(opt, calib_log.c_str(), &res);

    hgm_options_free(opt);
    if (rc != HGM_OK) {
        std::fprintf(stderr, "error: %s\n", hgm_last_error());
        return exit_code_for(rc);
    }
    std::fputs(hgm_result_text(res), stdout);
    int failures = hgm_result_failures(res);
    hgm_result_free(res);
    return failures == 0 ? 0 : 1;
}
