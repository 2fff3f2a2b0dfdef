#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "mono.hpp"
#include "report.hpp"

namespace hgm {

using Syms = std::map<std::string, Rat>;

// Sign-variant of the verification equation.  'standard' evaluates every
// printed twist component on the opposite side of the equality; 'jac-direct'
// keeps Jacobi factors on their printed side; 'kchar-neg' negates kummer-
// character exponents; 'side-swap' keeps every component on its printed side.
struct Calibration {
    bool jac_direct = false;
    bool kchar_negated = false;
    bool sides_swapped = false;
};

Calibration parse_calibration(const std::string& name);
std::string calibration_name(const Calibration& c);

struct VerifyOptions {
    long prime_lo = 1, prime_hi = 150;
    int samples = 10;
    std::uint64_t seed = 7;
    Backend backend = Backend::floating;
    double tol = 1e-9;
    unsigned threads = 0; // 0 = one worker per hardware thread
    bool step1 = true;    // run the local-monodromy comparison before sampling
    std::string calibration; // variant override; empty = the entry's own
    // Negative controls: add perturb_delta to one parameter (0..3 target,
    // 4..7 source) or to one twist-component exponent (index into comps).
    int perturb_param = -1;
    int perturb_comp = -1;
    Rat perturb_delta;
};

// A relation with symbols substituted, hypotheses checked, twist exponents
// evaluated and any negative-control perturbation applied.
struct BoundRelation {
    const RelationSpec* spec = nullptr;
    Syms syms;
    HGMParams source, target; // target before Galois conjugation
    long conj = 1;            // sigma_j index applied to the target side
    Calibration cal;
    long level = 1; // qualified primes are p = 1 (mod level)

    struct Comp {
        TwistComp::Kind kind = TwistComp::Kind::theta;
        Side side = Side::target;
        Rat exp;           // character exponent mod 1
        long tate = 0;     // tate power (integer)
        bool has_u = false;
        RationalMap u;     // character's argument map (theta: z, eta: 1-z, kchar: its own)
        std::vector<Rat> ja, jb; // Jacobi factor lists
    };
    std::vector<Comp> comps;
};

HGMParams conjugate_params(const HGMParams& P, long j);

BoundRelation bind_relation(const RelationSpec& e, const Syms& syms, const VerifyOptions& opt);

// "" when the pulled-back, twisted local data of the target reproduces the
// source local data at the places z, z-1 and infinity, with a pseudo-
// reflection at z-1; otherwise a description of the first mismatch.
std::string monodromy_mismatch(const BoundRelation& R);

// Two-step verification over all qualified primes in range: the monodromy
// comparison (unless disabled), then the trace identity at sampled points.
Report verify_relation(const RelationSpec& e, const Syms& syms, const VerifyOptions& opt);

// Wrapper for the transformation catalog (entries k01..k24); rejects
// non-generic instantiations.
Report verify_kummer(const Catalog& cat, int index, const Syms& abc, const VerifyOptions& opt);

// Runs the trace identity for each of the four variants on the first
// qualified prime; returns the names of the variants passing all samples.
std::vector<std::string> calibrate_relation(const RelationSpec& e, const Syms& syms,
                                            const VerifyOptions& opt);

} // namespace hgm
