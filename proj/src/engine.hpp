#pragma once

#include <cstdint>
#include <string>

namespace hgm {

// Global knobs shared by every subcommand (mirrors the CLI flags).
struct EngineOptions {
    std::string backend = "float";  // "exact" | "float"
    double tol = 1e-9;
    bool tol_set = false;           // --tol given explicitly (series uses its own defaults)
    std::uint64_t seed = 7;
    long prime_lo = 1, prime_hi = 150;
    int samples = 10;
    unsigned threads = 0;           // 0 = one worker per hardware thread
    std::string json_path;          // empty = no JSON file written
};

struct EngineResult {
    int failures = 0;     // fail rows plus hard monodromy failures
    std::string text;     // human-readable block for stdout
    std::string json;     // canonical JSON document (single report or aggregate)
};

// One H-value row per qualified prime, cross-checked against an oracle:
// the independent point-count route when one lower parameter is 0, the
// switch identity H((a,b),(c,d)|z) = H((-c,-d),(-a,-b)|1/z) otherwise.
EngineResult run_hsum(const std::string& params, const std::string& z, const EngineOptions& o);

// index: "1".."24" or "all"; abc: "a,b,c" instantiation of the free symbols.
EngineResult run_verify_kummer(const std::string& index, const std::string& abc,
                               const EngineOptions& o);

// name: catalog id or "all"; assigns: "a=1/3,b=1/5,q=5" overrides (may be empty).
EngineResult run_verify_cover(const std::string& name, const std::string& assigns,
                              const EngineOptions& o);

// Closure of the 24 transformations: order, commutativity, census per
// coordinate change.  First text line is "order=<N>".
EngineResult run_group(const EngineOptions& o);

// Closed forms at z = 1: branch selection asserted on `count` deterministic
// parameter sets, the sum-vs-closed-form comparison reported (not asserted),
// and `jac_count` exact Jacobi-equality rows.
EngineResult run_special(int count, int jac_count, const EngineOptions& o);

// Specialization chain for a solution of alpha^q + beta^q = gamma^pexp, plus
// `random_count` generated solutions with the w0 identity checked on each.
EngineResult run_dioph(const std::string& alpha, const std::string& beta,
                       const std::string& gamma, long q, long pexp, int random_count,
                       const EngineOptions& o);

// which: "eq1" | "eq67"; terms 0 = adaptive truncation.
EngineResult run_series(const std::string& which, const std::string& a, const std::string& b,
                        const std::string& z, long terms, const EngineOptions& o);

// Prints the three local monodromy classes of the parameters; with a nonempty
// map expression also its ramification profile over {0, 1, inf}.
EngineResult run_monodromy(const std::string& params, const std::string& map_expr,
                           const EngineOptions& o);

// Fixed-order run of everything above with canned arguments; one aggregate
// JSON document, byte-identical across runs with the same seed.
EngineResult run_suite(const EngineOptions& o);

// Four-variant sign probe for all catalog entries at their defaults; writes a
// calibration log to log_path when nonempty.  A row fails when the recorded
// calibration of an entry is not among the passing variants.
EngineResult run_calibrate(const std::string& log_path, const EngineOptions& o);

}  // namespace hgm
