#pragma once

#include "gauss.hpp"

namespace hgm {

// Rank-2 parameter set ((a,b),(c,d)), stored mod 1.
struct HGMParams {
    Rat a, b, c, d;

    std::vector<Rat> as_list() const { return {a, b, c, d}; }
    std::string str() const;
};

HGMParams make_params(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
HGMParams parse_params(const std::string& text);  // "a,b;c,d"

// lcm of the four denominators; qualified primes are p = 1 (mod level).
long params_level(const HGMParams& P);

// {a,b} and {c,d} disjoint in Q/Z.
bool is_generic(const HGMParams& P);

// Finite hypergeometric sum
//   H((a,b),(c,d) | z) = 1/(1-p) sum_k g[-a+k] g[-b+k] g[c-k] g[d-k]
//                        / (g[-a] g[-b] g[c] g[d]) * chi^k(z),
// indices written as alpha*(p-1) offsets mod p-1. Requires z != 0 mod p.
// galois_t applies sigma_t to every multiplicative-character index (gcd(t, p-1) = 1);
// the value is unchanged whenever t = 1 mod params_level (field membership).
CycValue hyp_sum(const GaussTable& T, const HGMParams& P, long z, long galois_t = 1);

// Independent point-count route:
//   H(z) = sum_x char(eps, x) char(om, 1-x) char(-ch, 1-z x)
// with char(., 0) = 0 for every exponent.
CycValue point_count_H(const GaussTable& T, const Rat& eps, const Rat& om, const Rat& ch, long z);

// char(eps,-1) g(eps) g(-(eps+om)) / g(-om)
CycValue factor_prefactor(const GaussTable& T, const Rat& eps, const Rat& om);

// Closed-form trace at z = 1.
struct TraceAtOne {
    enum class Branch { jacobi, tate };
    Branch branch;
    CycValue value;
    int delta = 0;                  // tate branch: value = p^delta
    std::vector<Rat> ja, jb;        // jacobi branch: the two argument lists
};
TraceAtOne trace_at_one(const GaussTable& T, const HGMParams& P);

} // namespace hgm
