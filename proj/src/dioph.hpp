#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "rat.hpp"

namespace hgm {

// A conjugate pair of quadratic numbers r +- c*sqrt(d).
//
// `disc` is a nonzero integer; negative values denote complex-conjugate
// pairs.  The square part of `disc` is removed by trial division up to an
// internal bound plus a perfect-square check, so for inputs of moderate size
// `disc` is squarefree; a huge prime-square factor that survives the bound
// would stay inside `disc`, which keeps the pair exact in every case.
// disc == 1 means both roots are rational.
struct SurdPair {
    Rat rational;     // r
    Rat coefficient;  // c >= 0
    mpz_class disc;   // d, nonzero, square part removed (see above)

    // "(4 +- 3*sqrt(2))/8", "1/2", "3 +- sqrt(5)", ...
    std::string str() const;
};

// Specialization points attached to a solution of alpha^q + beta^q = gamma^pexp.
struct DiophPoints {
    Rat z0;           // alpha^q / gamma^pexp
    Rat w0;           // -beta^(2q) / (4 alpha^q gamma^pexp) == -(z0-1)^2 / (4 z0)
    SurdPair u0;      // the two roots of 4 u (1 - u) = w0
    bool primitive;   // gcd(alpha, beta, gamma) == 1
};

// Computes the chain of specialization points attached to a solution of the
// exponent-(q, q, pexp) equation.  Requirements: alpha, beta, gamma nonzero
// (beta = 0 would give the degenerate w0 = 0), q an odd prime, pexp prime,
// and alpha^q + beta^q == gamma^pexp; violations raise an argument error.
DiophPoints dioph_points(const mpz_class& alpha, const mpz_class& beta,
                         const mpz_class& gamma, long q, long pexp);

struct DiophTriple {
    mpz_class alpha, beta, gamma;
    long q = 3;
    long pexp = 2;
};

// Deterministically generates `count` solutions of alpha^q + beta^q = gamma^pexp
// with positive entries, by scaling base points: for s = x^q + y^q put
// alpha = x*s^e, beta = y*s^e, gamma = s^f where pexp*f = q*e + 1, so that
// alpha^q + beta^q = s^(q*e+1) = gamma^pexp.  Exponent pairs run over odd
// primes q in {3, 5, 7} and pexp in {2, 3, 5, 7} with pexp != q.
std::vector<DiophTriple> admissible_triples(int count, uint64_t seed);

// True iff d is a square modulo the odd prime p (0 counts as a square).
// Sampling of quadratic points keeps only primes where their discriminant
// splits, so that the point reduces to an F_p-rational one.
bool disc_is_square_mod_p(const mpz_class& d, long p);

}  // namespace hgm
