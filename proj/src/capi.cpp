#include "hgm/hgm.h"

#include <exception>
#include <string>

#include "engine.hpp"
#include "error.hpp"

struct hgm_options {
    hgm::EngineOptions o;
};

struct hgm_result {
    hgm::EngineResult r;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
int run_op(hgm_result** out, Fn&& fn) {
    if (!out) return set_error(HGM_ERR_ARGUMENT, "out pointer is NULL");
    *out = nullptr;
    try {
        auto res = new hgm_result{fn()};
        *out = res;
        g_last_error.clear();
        return HGM_OK;
    } catch (const hgm::hgm_error& e) {
        return set_error(static_cast<int>(e.code()), e.what());
    } catch (const std::exception& e) {
        return set_error(HGM_ERR_INTERNAL, e.what());
    }
}

hgm::EngineOptions options_of(const hgm_options* opt) {
    return opt ? opt->o : hgm::EngineOptions{};
}

std::string require(const char* s, const char* what) {
    if (!s) hgm::fail(hgm::errc::argument, std::string(what) + " is NULL");
    return s;
}

// Parse helpers shared by hgm_options_set; a value must be consumed entirely.
long parse_long(const std::string& v, const char* what) {
    try {
        size_t used = 0;
        long x = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        hgm::fail(hgm::errc::argument, std::string(what) + ": not an integer: '" + v + "'");
    }
}

}  // namespace

extern "C" {

const char* hgm_version(void) { return "1.0.0"; }

const char* hgm_last_error(void) { return g_last_error.c_str(); }

hgm_options* hgm_options_new(void) { return new hgm_options{}; }

void hgm_options_free(hgm_options* opt) { delete opt; }

int hgm_options_set(hgm_options* opt, const char* key, const char* value) {
    if (!opt) return set_error(HGM_ERR_ARGUMENT, "options pointer is NULL");
    if (!key || !value) return set_error(HGM_ERR_ARGUMENT, "key/value is NULL");
    std::string k = key, v = value;
    try {
        if (k == "backend") {
            if (v != "exact" && v != "float" && v != "floating")
                hgm::fail(hgm::errc::argument, "backend must be exact or float, got '" + v + "'");
            opt->o.backend = v;
        } else if (k == "tol") {
            size_t used = 0;
            double t = 0;
            try {
                t = std::stod(v, &used);
            } catch (const std::exception&) {
                used = std::string::npos;
            }
            if (used != v.size() || !(t > 0))
                hgm::fail(hgm::errc::argument, "tol must be a positive number, got '" + v + "'");
            opt->o.tol = t;
            opt->o.tol_set = true;
        } else if (k == "seed") {
            try {
                size_t used = 0;
                opt->o.seed = std::stoull(v, &used);
                if (used != v.size()) throw std::invalid_argument(v);
            } catch (const std::exception&) {
                hgm::fail(hgm::errc::argument, "seed must be an unsigned integer, got '" + v + "'");
            }
        } else if (k == "primes") {
            auto dots = v.find("..");
            long lo, hi;
            if (dots == std::string::npos) {
                lo = hi = parse_long(v, "primes");
            } else {
                lo = parse_long(v.substr(0, dots), "primes");
                hi = parse_long(v.substr(dots + 2), "primes");
            }
            if (lo < 1 || hi < lo)
                hgm::fail(hgm::errc::argument, "primes range must satisfy 1 <= lo <= hi");
            opt->o.prime_lo = lo;
            opt->o.prime_hi = hi;
        } else if (k == "samples") {
            long s = parse_long(v, "samples");
            if (s < 1 || s > 1000000)
                hgm::fail(hgm::errc::argument, "samples must be in 1..1000000");
            opt->o.samples = static_cast<int>(s);
        } else if (k == "threads") {
            long t = parse_long(v, "threads");
            if (t < 0 || t > 4096) hgm::fail(hgm::errc::argument, "threads must be in 0..4096");
            opt->o.threads = static_cast<unsigned>(t);
        } else if (k == "json") {
            opt->o.json_path = v;
        } else {
            hgm::fail(hgm::errc::argument, "unknown option key '" + k + "'");
        }
    } catch (const hgm::hgm_error& e) {
        return set_error(static_cast<int>(e.code()), e.what());
    }
    g_last_error.clear();
    return HGM_OK;
}

int hgm_result_failures(const hgm_result* res) { return res ? res->r.failures : -1; }

const char* hgm_result_text(const hgm_result* res) { return res ? res->r.text.c_str() : ""; }

const char* hgm_result_json(const hgm_result* res) { return res ? res->r.json.c_str() : ""; }

void hgm_result_free(hgm_result* res) { delete res; }

int hgm_hsum(const hgm_options* opt, const char* params, const char* z, hgm_result** out) {
    return run_op(out, [&] {
        return hgm::run_hsum(require(params, "params"), require(z, "z"), options_of(opt));
    });
}

int hgm_verify_kummer(const hgm_options* opt, const char* index, const char* abc,
                      hgm_result** out) {
    return run_op(out, [&] {
        return hgm::run_verify_kummer(require(index, "index"), require(abc, "abc"),
                                      options_of(opt));
    });
}

int hgm_verify_cover(const hgm_options* opt, const char* name, const char* assigns,
                     hgm_result** out) {
    return run_op(out, [&] {
        return hgm::run_verify_cover(require(name, "name"), assigns ? assigns : "",
                                     options_of(opt));
    });
}

int hgm_group(const hgm_options* opt, hgm_result** out) {
    return run_op(out, [&] { return hgm::run_group(options_of(opt)); });
}

int hgm_special(const hgm_options* opt, int count, int jac_count, hgm_result** out) {
    return run_op(out, [&] { return hgm::run_special(count, jac_count, options_of(opt)); });
}

int hgm_dioph(const hgm_options* opt, const char* alpha, const char* beta, const char* gamma,
              long q, long pexp, int random_count, hgm_result** out) {
    return run_op(out, [&] {
        return hgm::run_dioph(require(alpha, "alpha"), require(beta, "beta"),
                              require(gamma, "gamma"), q, pexp, random_count, options_of(opt));
    });
}

int hgm_series(const hgm_options* opt, const char* which, const char* a, const char* b,
               const char* z, long terms, hgm_result** out) {
    return run_op(out, [&] {
        return hgm::run_series(require(which, "which"), require(a, "a"), require(b, "b"),
                               require(z, "z"), terms, options_of(opt));
    });
}

int hgm_monodromy(const hgm_options* opt, const char* params, const char* map,
                  hgm_result** out) {
    return run_op(out, [&] {
        return hgm::run_monodromy(params ? params : "", map ? map : "", options_of(opt));
    });
}

int hgm_suite(const hgm_options* opt, hgm_result** out) {
    return run_op(out, [&] { return hgm::run_suite(options_of(opt)); });
}

int hgm_calibrate(const hgm_options* opt, const char* log_path, hgm_result** out) {
    return run_op(out, [&] {
        return hgm::run_calibrate(log_path ? log_path : "", options_of(opt));
    });
}

}  // extern "C"
