#include "hyp.hpp"

#include <complex>
#include <numeric>

namespace hgm {

HGMParams make_params(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return HGMParams{ratmod1(a), ratmod1(b), ratmod1(c), ratmod1(d)};
}

std::string HGMParams::str() const {
    return rat_str(a) + "," + rat_str(b) + ";" + rat_str(c) + "," + rat_str(d);
}

HGMParams parse_params(const std::string& text) {
    auto lists = parse_rat_lists(text);
    if (lists.size() != 2 || lists[0].size() != 2 || lists[1].size() != 2)
        fail(errc::argument, "params must be of the form \"a,b;c,d\", got '" + text + "'");
    return make_params(lists[0][0], lists[0][1], lists[1][0], lists[1][1]);
}

long params_level(const HGMParams& P) { return lcm_denominators(P.as_list()); }

bool is_generic(const HGMParams& P) {
    Rat u[2] = {ratmod1(P.a), ratmod1(P.b)};
    Rat l[2] = {ratmod1(P.c), ratmod1(P.d)};
    for (const Rat& x : u)
        for (const Rat& y : l)
            if (x == y) return false;
    return true;
}

CycValue hyp_sum(const GaussTable& T, const HGMParams& P, long z, long galois_t) {
    const PrimeField& F = T.F();
    long p = F.p;
    long zr = F.reduce(z);
    if (zr == 0) fail(errc::argument, "hyp_sum: z must be nonzero mod p");
    long n = p - 1;
    long t = ((galois_t % n) + n) % n;
    if (std::gcd(t, n) != 1)
        fail(errc::argument, "hyp_sum: galois_t must be invertible mod p-1");
    long ia = T.idx(-P.a), ib = T.idx(-P.b), ic = T.idx(P.c), id = T.idx(P.d);
    auto sc = [&](long e) { return static_cast<long>(static_cast<__int128>(t) * (((e % n) + n) % n) % n); };
    CycValue denom_inv = T.ginv(sc(ia)) * T.ginv(sc(ib)) * T.ginv(sc(ic)) * T.ginv(sc(id));
    long zl = F.dlog[zr];
    CycValue sum = CycValue::zero(T.backend());
    for (long k = 0; k < n; ++k) {
        CycValue term = T.g(sc(ia + k)) * T.g(sc(ib + k));
        term = term * (T.g(sc(ic - k)) * T.g(sc(id - k)));
        long e = static_cast<long>(static_cast<__int128>(sc(k)) * zl % n);
        term = term * CycValue::root(T.backend(), n, e);
        sum = sum + term;
    }
    return (sum * denom_inv).mul_rat(Rat(-1, p - 1));
}

CycValue point_count_H(const GaussTable& T, const Rat& eps, const Rat& om, const Rat& ch, long z) {
    const PrimeField& F = T.F();
    long p = F.p;
    long n = p - 1;
    long ie = T.idx(eps), io = T.idx(om), inc = T.idx(-ch);
    long zr = F.reduce(z);
    if (T.backend() == Backend::exact) {
        std::vector<mpz_class> counts(n);
        for (long x = 1; x < p; ++x) {
            long f2 = F.reduce(1 - x);
            long f3 = F.reduce(1 - static_cast<long>(static_cast<__int128>(zr) * x % p));
            if (f2 == 0 || f3 == 0) continue;
            __int128 e = static_cast<__int128>(ie) * F.dlog[x] + static_cast<__int128>(io) * F.dlog[f2] +
                         static_cast<__int128>(inc) * F.dlog[f3];
            counts[static_cast<long>(e % n)] += 1;
        }
        // counts are exponents of zeta_{p-1}
        return CycValue::exact_from_raw(n, std::move(counts), Rat(1));
    }
    constexpr double kPi = 3.14159265358979323846264338327950288;
    std::vector<std::complex<double>> zq(n);
    for (long k = 0; k < n; ++k) zq[k] = std::polar(1.0, 2.0 * kPi * k / n);
    std::complex<double> s(0.0, 0.0);
    for (long x = 1; x < p; ++x) {
        long f2 = F.reduce(1 - x);
        long f3 = F.reduce(1 - static_cast<long>(static_cast<__int128>(zr) * x % p));
        if (f2 == 0 || f3 == 0) continue;
        __int128 e = static_cast<__int128>(ie) * F.dlog[x] + static_cast<__int128>(io) * F.dlog[f2] +
                     static_cast<__int128>(inc) * F.dlog[f3];
        s += zq[static_cast<long>(e % n)];
    }
    return CycValue::from_double(s.real(), s.imag());
}

CycValue factor_prefactor(const GaussTable& T, const Rat& eps, const Rat& om) {
    CycValue v = T.chi(eps, -1);
    v = v * T.g(T.idx(eps));
    v = v * T.g(T.idx(-(eps + om)));
    v = v * T.ginv(T.idx(-om));
    return v;
}

TraceAtOne trace_at_one(const GaussTable& T, const HGMParams& P) {
    TraceAtOne out;
    Rat k = P.a + P.b - P.c - P.d;
    if (!is_integer(k)) {
        out.branch = TraceAtOne::Branch::jacobi;
        out.ja = {P.a - P.c, P.a - P.d, P.b - P.c, P.b - P.d};
        out.jb = {P.a, P.b, -P.c, -P.d, P.a + P.b - P.c - P.d};
        out.value = T.jacobi_motive(out.ja, out.jb);
        return out;
    }
    if (is_integer(P.a + P.b) && is_integer(P.c + P.d)) {
        out.branch = TraceAtOne::Branch::tate;
        out.delta = (is_integer(P.a) || is_integer(P.c)) ? 0 : 1;
        Rat v = out.delta ? Rat(T.F().p) : Rat(1);
        out.value = CycValue::from_rat(T.backend(), v);
        return out;
    }
    fail(errc::unsupported, "trace_at_one: no closed form implemented for params " + P.str());
}

} // namespace hgm
