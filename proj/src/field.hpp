#pragma once

#include <memory>
#include <vector>

#include "cyc.hpp"
#include "rat.hpp"

namespace hgm {

// Z/p with discrete-log tables for the fixed generator chi(g) = zeta_{p-1}.
struct PrimeField {
    long p = 0;
    long g = 0;                // smallest primitive root mod p
    std::vector<long> dlog;    // dlog[x] for x in [1, p-1]; dlog[0] = -1
    std::vector<long> powg;    // powg[k] = g^k mod p, k in [0, p-2]

    long reduce(long x) const { return ((x % p) + p) % p; }
    long inv(long x) const;    // multiplicative inverse, x != 0 mod p
};

bool is_prime(long n);
std::vector<long> primes_in_range(long lo, long hi);

// Builds the field; requires p an odd prime < 10^5.
std::shared_ptr<const PrimeField> make_field(long p);

// alpha*(p-1) as an index mod p-1; throws errc::skip_prime when den(alpha) does not divide p-1.
long char_index(const PrimeField& F, const Rat& alpha);

// char_value(alpha, x) = chi(x)^{alpha*(p-1)}; 0 when p | x (for every alpha).
CycValue char_value(const PrimeField& F, const Rat& alpha, long x, Backend b);

// psi_c(x) = zeta_p^{c*x}
CycValue additive_char(const PrimeField& F, long c, long x, Backend b);

} // namespace hgm
