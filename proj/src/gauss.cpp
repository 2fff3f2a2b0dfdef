#include "gauss.hpp"

#include <cmath>
#include <complex>

namespace hgm {

GaussTable::GaussTable(std::shared_ptr<const PrimeField> F, Backend backend, long psi_c)
    : field_(std::move(F)), backend_(backend), psi_c_(psi_c) {
    const PrimeField& f = *field_;
    long p = f.p;
    if (f.reduce(psi_c_) == 0) fail(errc::argument, "additive character must be nontrivial (c != 0 mod p)");
    constexpr long kExactCap = 43;
    if (backend_ == Backend::exact && p > kExactCap)
        fail(errc::unsupported,
             "exact backend capped at p <= " + std::to_string(kExactCap) + ", got p = " + std::to_string(p));
    G_.resize(p - 1);
    Ginv_.resize(p - 1);
    if (backend_ == Backend::floating) {
        constexpr double kPi = 3.14159265358979323846264338327950288;
        std::vector<std::complex<double>> zp(p), zq(p - 1);
        for (long k = 0; k < p; ++k) zp[k] = std::polar(1.0, 2.0 * kPi * k / p);
        for (long k = 0; k < p - 1; ++k) zq[k] = std::polar(1.0, 2.0 * kPi * k / (p - 1));
        for (long k = 0; k < p - 1; ++k) {
            std::complex<double> s(0.0, 0.0);
            for (long x = 1; x < p; ++x)
                s += zq[static_cast<long>(static_cast<__int128>(k) * f.dlog[x] % (p - 1))] *
                     zp[static_cast<long>(static_cast<__int128>(f.reduce(psi_c_)) * x % p)];
            G_[k] = CycValue::from_double(s.real(), s.imag());
        }
    } else {
        // zeta_{p-1}^a * zeta_p^b = zeta_M^{a*p + b*(p-1)} with M = p(p-1)
        long M = p * (p - 1);
        long c = f.reduce(psi_c_);
        for (long k = 0; k < p - 1; ++k) {
            std::vector<mpz_class> raw(M);
            for (long x = 1; x < p; ++x) {
                long a = static_cast<long>(static_cast<__int128>(k) * f.dlog[x] % (p - 1));
                long b = static_cast<long>(static_cast<__int128>(c) * x % p);
                long e = static_cast<long>((static_cast<__int128>(a) * p + static_cast<__int128>(b) * (p - 1)) % M);
                raw[e] += 1;
            }
            G_[k] = CycValue::exact_from_raw(M, std::move(raw), Rat(1));
        }
    }
    // g(chi^0) = -1; for k != 0: 1/g(chi^k) = g(chi^{-k}) * chi^k(-1) / p, chi^k(-1) = (-1)^k
    Ginv_[0] = CycValue::from_rat(backend_, Rat(-1));
    for (long k = 1; k < p - 1; ++k) {
        Rat s(k % 2 == 0 ? 1 : -1, p);
        Ginv_[k] = G_[p - 1 - k].mul_rat(s);
    }
}

const CycValue& GaussTable::g(long k) const {
    long m = ((k % (F().p - 1)) + F().p - 1) % (F().p - 1);
    return G_[m];
}

const CycValue& GaussTable::ginv(long k) const {
    long m = ((k % (F().p - 1)) + F().p - 1) % (F().p - 1);
    return Ginv_[m];
}

CycValue GaussTable::jacobi_motive(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    long r = static_cast<long>(a.size()), s = static_cast<long>(b.size());
    Rat tot = 0;
    CycValue v = CycValue::from_rat(backend_, Rat((r + s + 1) % 2 == 0 ? 1 : -1));
    for (const Rat& ai : a) {
        v = v * g(idx(ai));
        tot -= ai;
    }
    for (const Rat& bj : b) {
        v = v * ginv(idx(bj));
        tot += bj;
    }
    return v * g(idx(tot));
}

} // namespace hgm
