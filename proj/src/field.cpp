#include "field.hpp"

namespace hgm {

namespace {
constexpr long kFieldCap = 100000;
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_in_range(long lo, long hi) {
    std::vector<long> out;
    for (long n = std::max(lo, 2L); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

long PrimeField::inv(long x) const {
    x = reduce(x);
    if (x == 0) fail(errc::argument, "inverse of zero mod p");
    // Fermat: x^(p-2)
    long r = 1, b = x, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<long>(static_cast<__int128>(r) * b % p);
        b = static_cast<long>(static_cast<__int128>(b) * b % p);
        e >>= 1;
    }
    return r;
}

std::shared_ptr<const PrimeField> make_field(long p) {
    if (p < 3 || p >= kFieldCap)
        fail(errc::argument, "make_field: p must be an odd prime in [3, 10^5), got " + std::to_string(p));
    if (p % 2 == 0 || !is_prime(p))
        fail(errc::argument, "make_field: " + std::to_string(p) + " is not an odd prime");
    auto F = std::make_shared<PrimeField>();
    F->p = p;
    // distinct prime factors of p-1
    std::vector<long> fac;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fac.push_back(m);
    long g = 2;
    for (;; ++g) {
        bool ok = true;
        for (long q : fac) {
            long r = 1, b = g % p, e = (p - 1) / q;
            while (e) {
                if (e & 1) r = static_cast<long>(static_cast<__int128>(r) * b % p);
                b = static_cast<long>(static_cast<__int128>(b) * b % p);
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    F->g = g;
    F->dlog.assign(p, -1);
    F->powg.assign(p - 1, 0);
    long x = 1;
    for (long k = 0; k < p - 1; ++k) {
        F->powg[k] = x;
        F->dlog[x] = k;
        x = static_cast<long>(static_cast<__int128>(x) * g % p);
    }
    return F;
}

long char_index(const PrimeField& F, const Rat& alpha) {
    Rat r = alpha * (F.p - 1);
    if (!is_integer(r))
        fail(errc::skip_prime, "character undefined at this prime (denominator of " + rat_str(alpha) +
                                   " does not divide p-1 for p=" + std::to_string(F.p) + ")");
    mpz_class n = r.get_num() % (F.p - 1);
    if (n < 0) n += F.p - 1;
    return checked_long(n, "character index");
}

CycValue char_value(const PrimeField& F, const Rat& alpha, long x, Backend b) {
    long xr = F.reduce(x);
    if (xr == 0) return CycValue::zero(b);
    long t = char_index(F, alpha);
    long e = static_cast<long>(static_cast<__int128>(t) * F.dlog[xr] % (F.p - 1));
    return CycValue::root(b, F.p - 1, e);
}

CycValue additive_char(const PrimeField& F, long c, long x, Backend b) {
    long e = F.reduce(static_cast<long>(static_cast<__int128>(F.reduce(c)) * F.reduce(x) % F.p));
    return CycValue::root(b, F.p, e);
}

} // namespace hgm
